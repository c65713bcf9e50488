#include "bcs/gap.hpp"

#include <cmath>

namespace bcs {

double excitation_energy(double xi, double gap) { return std::hypot(xi, gap); }

namespace {

GapResult no_root(GapMethod method) {
  GapResult r;
  r.outcome = GapOutcome::kNoRealRoot;
  r.method = method;
  return r;
}

GapResult with_gap(double gap, double residual, GapMethod method) {
  GapResult r;
  r.outcome = GapOutcome::kGap;
  r.gap = gap;
  r.residual = residual;
  r.method = method;
  return r;
}

}  // namespace

GapResult gap_from_levels(double xi1, double xi2, double d) {
  if (!(xi1 >= 0.0) || !(xi1 < xi2)) {
    throw std::invalid_argument("gap_from_levels: requires 0 <= xi1 < xi2");
  }
  if (!std::isfinite(d) || d >= 0.0 || d < xi1 - xi2) return no_root(GapMethod::kSub1Spectrum);

  // Isolating sqrt(xi1^2 + D^2) = sqrt(xi2^2 + D^2) + d and squaring gives
  // sqrt(xi2^2 + D^2) = s with s = (xi1^2 - xi2^2 - d^2) / (2 d).
  const double s = ((xi1 - xi2) * (xi1 + xi2) - d * d) / (2.0 * d);
  if (s < xi2 || s + d < 0.0) return no_root(GapMethod::kSub1Spectrum);
  const double gap = std::sqrt((s - xi2) * (s + xi2));

  const double residual = (excitation_energy(xi1, gap) - excitation_energy(xi2, gap)) - d;
  if (std::fabs(residual) > kBackSubstitutionTol * std::fabs(d)) {
    return no_root(GapMethod::kSub1Spectrum);
  }
  return with_gap(gap, residual, GapMethod::kSub1Spectrum);
}

GapResult gap_from_pair_energy(double xi1, double xi2, double s) {
  const double a1 = std::fabs(xi1);
  const double a2 = std::fabs(xi2);
  if (!std::isfinite(s) || s <= 0.0 || s < a1 + a2) return no_root(GapMethod::kSub1Spectrum);

  // With A + B = s and A^2 - B^2 = xi1^2 - xi2^2: B = (s^2 + xi2^2 - xi1^2) / (2 s).
  const double b = (s * s + (a2 - a1) * (a2 + a1)) / (2.0 * s);
  const double gap2 = (b - a2) * (b + a2);
  if (gap2 < 0.0) return no_root(GapMethod::kSub1Spectrum);
  const double gap = std::sqrt(gap2);

  const double residual = (excitation_energy(xi1, gap) + excitation_energy(xi2, gap)) - s;
  if (std::fabs(residual) > kBackSubstitutionTol * s) return no_root(GapMethod::kSub1Spectrum);
  return with_gap(gap, residual, GapMethod::kSub1Spectrum);
}

GapResult gap_from_spectrum(const PairingModel& model, const Spectrum& spectrum,
                            GapExtraction extraction) {
  if (model.n_levels() < 2) throw InsufficientLevels("gap extraction needs N >= 2 levels");
  if (spectrum.values.size() < 2) throw InsufficientLevels("gap extraction needs two eigenvalues");
  const double xi1 = model.xi(1);
  const double xi2 = model.xi(2);
  const double e1 = spectrum.values[0];
  const double e2 = spectrum.values[1];
  switch (extraction) {
    case GapExtraction::kLevelDifference:
      return gap_from_levels(xi1, xi2, e1 - e2);
    case GapExtraction::kPairBreaking:
      return gap_from_pair_energy(xi1, xi2, e2 - e1);
  }
  return no_root(GapMethod::kSub1Spectrum);
}

double gap_equation_rhs(const PairingModel& model, double gap) {
  double sum = 0.0;
  for (double x : model.levels()) sum += 1.0 / excitation_energy(x, gap);
  return 0.5 * model.v() * sum;
}

GapResult solve_gap_equation(const PairingModel& model, double tol) {
  for (double x : model.levels()) {
    if (x == 0.0) throw SingularLevel("gap equation: a level sits exactly at the Fermi surface");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("gap equation: tol must be > 0");

  GapResult r;
  r.method = GapMethod::kGapEquation;
  const double at_zero = gap_equation_rhs(model, 0.0);
  if (at_zero < 1.0) {
    r.outcome = GapOutcome::kNoSolution;
    r.residual = 1.0 - at_zero;
    return r;
  }
  if (at_zero == 1.0) return with_gap(0.0, 0.0, GapMethod::kGapEquation);

  // The right side is strictly decreasing in D and below 1 at D = (V/2) N.
  double lo = 0.0;
  double hi = 0.5 * model.v() * static_cast<double>(model.n_levels());
  while (gap_equation_rhs(model, hi) >= 1.0) hi *= 2.0;

  for (int it = 0; it < kGapEquationMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gap_equation_rhs(model, mid) >= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol * hi) break;
  }
  const double gap = 0.5 * (lo + hi);
  return with_gap(gap, 1.0 - gap_equation_rhs(model, gap), GapMethod::kGapEquation);
}

double estimate_coupling(const CouplingEstimate& est) {
  if (!(est.g0 > 0.0)) throw InvalidParameter("coupling estimate: g0 must be > 0");
  if (!(est.r > 0.0) || est.r > 1.0) throw InvalidParameter("coupling estimate: r must lie in (0, 1]");
  if (!(est.debye > 0.0)) throw InvalidParameter("coupling estimate: Debye energy must be > 0");
  return est.r / est.g0;
}

std::string to_string(GapOutcome outcome) {
  switch (outcome) {
    case GapOutcome::kGap:
      return "gap";
    case GapOutcome::kNoRealRoot:
      return "no-real-root";
    case GapOutcome::kNoSolution:
      return "no-solution";
  }
  return "unknown";
}

std::string to_string(GapMethod method) {
  return method == GapMethod::kSub1Spectrum ? "sub1-spectrum" : "gap-equation";
}

std::string to_string(GapExtraction extraction) {
  return extraction == GapExtraction::kPairBreaking ? "pair" : "difference";
}

}  // namespace bcs
