#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "bcs/spectrum.hpp"

namespace bcs {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense real symmetric matrix. Only the symmetric setter exists, so
// a(i, j) == a(j, i) holds bit-for-bit for every constructed matrix.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  double trace() const;
  double frobenius_norm() const;
  // Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const;

  std::vector<double> multiply(const std::vector<double>& x) const;

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

inline constexpr std::size_t kDenseOracleMaxDim = 4096;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeThreshold = 1e-12;

// Cyclic-by-row Jacobi eigenvalue iteration, run separately on each connected
// component of the nonzero pattern. Converged when the off-diagonal
// Frobenius norm drops below 1e-12 * ||A||_F. Throws ConvergenceError after
// 100 sweeps and InvalidParameter-like std::invalid_argument above dim 4096.
Spectrum dense_eigenvalues(SymmetricMatrix a);

// Row-major text dump: one row per line, space separated, 17 significant digits.
void write_matrix(std::ostream& out, const SymmetricMatrix& a);

}  // namespace bcs
