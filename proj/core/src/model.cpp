#include "bcs/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace bcs {

PairingModel::PairingModel(std::vector<double> xi, double v, bool allow_degenerate)
    : xi_(std::move(xi)), v_(v), allow_degenerate_(allow_degenerate) {
  if (xi_.empty()) throw InvalidParameter("pairing model needs at least one level");
  if (!std::isfinite(v_) || v_ < 0.0) throw InvalidParameter("coupling V must be finite and >= 0");
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (!std::isfinite(xi_[i]) || !std::isfinite(xi_[i] - v_)) {
      throw InvalidParameter("level energies must be finite");
    }
    if (i == 0) continue;
    const bool ordered = allow_degenerate_ ? xi_[i - 1] <= xi_[i] : xi_[i - 1] < xi_[i];
    if (!ordered) {
      throw InvalidParameter(allow_degenerate_ ? "levels must be non-decreasing"
                                               : "levels must be strictly ascending");
    }
  }
}

double PairingModel::xi(std::size_t m) const {
  if (m < 1 || m > xi_.size()) throw std::out_of_range("level index out of range");
  return xi_[m - 1];
}

double PairingModel::epsilon(std::size_t m) const { return xi(m) - v_; }

PairingModel make_model(const ModelParams& params) {
  if (params.n_levels < 1) throw InvalidParameter("n_levels must be >= 1");
  if (!(params.delta > 0.0) || !std::isfinite(params.delta)) {
    throw InvalidParameter("level spacing delta must be > 0");
  }
  if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
    throw InvalidParameter("coupling ratio lambda must be > 0");
  }
  if (params.b < 0) throw InvalidParameter("offset b must be >= 0");

  std::vector<double> xi(static_cast<std::size_t>(params.n_levels));
  for (int m = 1; m <= params.n_levels; ++m) {
    xi[static_cast<std::size_t>(m - 1)] = static_cast<double>(params.b + m) * params.delta;
  }
  return PairingModel(std::move(xi), params.lambda * params.delta);
}

PairingModel rescale(const PairingModel& model, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameter("rescale factor must be > 0");
  std::vector<double> xi(model.levels().begin(), model.levels().end());
  for (double& x : xi) x *= c;
  return PairingModel(std::move(xi), model.v() * c, model.allows_degenerate());
}

double min_level_spacing(const PairingModel& model) {
  const auto xi = model.levels();
  double spacing = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xi.size(); ++i) spacing = std::min(spacing, xi[i] - xi[i - 1]);
  return spacing;
}

std::string to_string(UnitMode mode) {
  return mode == UnitMode::kElectronVolts ? "ev" : "delta";
}

}  // namespace bcs
