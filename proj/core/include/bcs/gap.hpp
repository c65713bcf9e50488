#pragma once

#include <stdexcept>
#include <string>

#include "bcs/model.hpp"
#include "bcs/spectrum.hpp"

namespace bcs {

class InsufficientLevels : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularLevel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GapOutcome { kGap, kNoRealRoot, kNoSolution };
enum class GapMethod { kSub1Spectrum, kGapEquation };

// How the two lowest sub1 eigenvalues are turned into a gap.
//   kPairBreaking:    sqrt(xi1^2 + D^2) + sqrt(xi2^2 + D^2) = E2 - E1
//   kLevelDifference: sqrt(xi1^2 + D^2) - sqrt(xi2^2 + D^2) = E1 - E2
enum class GapExtraction { kPairBreaking, kLevelDifference };

struct GapResult {
  GapOutcome outcome = GapOutcome::kNoRealRoot;
  double gap = 0.0;  // meaningful only when outcome == kGap
  GapMethod method = GapMethod::kSub1Spectrum;
  double residual = 0.0;

  bool has_gap() const { return outcome == GapOutcome::kGap; }
};

struct CouplingEstimate {
  double g0 = 0.0;      // density of states at the Fermi surface, per eV
  double r = 0.0;       // dimensionless g(0) V
  double debye = 0.0;   // Debye energy, eV
};

inline constexpr double kGapEquationDefaultTol = 1e-12;
inline constexpr int kGapEquationMaxIterations = 200;
inline constexpr double kBackSubstitutionTol = 1e-10;

// sqrt(xi^2 + gap^2)
double excitation_energy(double xi, double gap);

// Solves sqrt(xi1^2 + D^2) - sqrt(xi2^2 + D^2) = d for D >= 0 in closed form.
// Requires 0 <= xi1 < xi2. A root exists iff d lies in [xi1 - xi2, 0).
GapResult gap_from_levels(double xi1, double xi2, double d);

// Solves sqrt(xi1^2 + D^2) + sqrt(xi2^2 + D^2) = s for D >= 0 in closed form.
// A root exists iff s >= |xi1| + |xi2|.
GapResult gap_from_pair_energy(double xi1, double xi2, double s);

// Gap from the two lowest levels and the two lowest sub1 eigenvalues.
// Throws InsufficientLevels for N < 2.
GapResult gap_from_spectrum(const PairingModel& model, const Spectrum& spectrum,
                            GapExtraction extraction = GapExtraction::kPairBreaking);

// Right-hand side (V/2) sum_m 1/sqrt(xi_m^2 + D^2) of the mean-field gap equation.
double gap_equation_rhs(const PairingModel& model, double gap);

// Bisection on 1 = (V/2) sum_m 1/sqrt(xi_m^2 + D^2). Throws SingularLevel if
// any xi_m == 0.
GapResult solve_gap_equation(const PairingModel& model, double tol = kGapEquationDefaultTol);

// V = r / g(0).
double estimate_coupling(const CouplingEstimate& est);

std::string to_string(GapOutcome outcome);
std::string to_string(GapMethod method);
std::string to_string(GapExtraction extraction);

}  // namespace bcs
