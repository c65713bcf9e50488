#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bcs/dense.hpp"
#include "bcs/model.hpp"
#include "bcs/spectrum.hpp"

namespace bcs {

// Raised when the level spacing is too small for the secular brackets.
class FallbackRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The single-pair block: diag(xi) - V * ones. Stored as (xi, V) only.
class Sub1Matrix {
 public:
  Sub1Matrix(std::vector<double> xi, double v) : xi_(std::move(xi)), v_(v) {}

  std::size_t dim() const { return xi_.size(); }
  std::span<const double> levels() const { return xi_; }
  double v() const { return v_; }

  // 0-based entry access.
  double operator()(std::size_t i, std::size_t j) const { return i == j ? xi_[i] - v_ : -v_; }

  SymmetricMatrix materialize() const;

 private:
  std::vector<double> xi_;
  double v_;
};

inline constexpr double kSecularDefaultTol = 1e-13;
inline constexpr int kSecularMaxIterations = 200;

Sub1Matrix build_sub1(const PairingModel& model);

// Secular function 1 - V * sum_m 1 / (xi_m - E).
double secular_function(const Sub1Matrix& m, double energy);

// Roots of the secular function, one per interlacing bracket, by bisection.
// Throws FallbackRequired when xi is not strictly increasing with spacing
// above 1e3 * tol * max|xi|.
Spectrum sub1_eigenvalues_secular(const Sub1Matrix& m, double tol = kSecularDefaultTol);

// Secular path when the spacing allows it, dense Jacobi otherwise.
Spectrum sub1_eigenvalues(const PairingModel& model, double tol = kSecularDefaultTol);

}  // namespace bcs
