#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcs {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Uniform level scheme xi_m = (b + m) * delta, coupling V = lambda * delta.
struct ModelParams {
  int n_levels = 0;
  double delta = 1.0;
  double lambda = 0.0;
  int b = 0;
};

enum class UnitMode { kElectronVolts, kDeltaUnits };

// Reduced pairing model: N pair levels xi (ascending) and a constant pair
// scattering strength V. Immutable after construction.
//
// Level indices in the accessors are 1-based, matching the usual physics
// labelling m = 1..N.
class PairingModel {
 public:
  // Throws InvalidParameter unless xi is non-empty and strictly ascending and
  // v >= 0. With allow_degenerate, equal neighbouring levels are admitted.
  PairingModel(std::vector<double> xi, double v, bool allow_degenerate = false);

  std::size_t n_levels() const { return xi_.size(); }
  std::span<const double> levels() const { return xi_; }
  double v() const { return v_; }
  bool allows_degenerate() const { return allow_degenerate_; }

  double xi(std::size_t m) const;
  // epsilon_m = xi_m - V, the on-site energy of an occupied pair.
  double epsilon(std::size_t m) const;

  bool operator==(const PairingModel&) const = default;

 private:
  std::vector<double> xi_;
  double v_;
  bool allow_degenerate_;
};

PairingModel make_model(const ModelParams& params);

// Multiplies every energy by c > 0. Used to move between eV and delta-units.
PairingModel rescale(const PairingModel& model, double c);

// Smallest spacing xi_{i+1} - xi_i; +inf for a single level.
double min_level_spacing(const PairingModel& model);

std::string to_string(UnitMode mode);

}  // namespace bcs
