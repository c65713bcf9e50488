#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcs/gap.hpp"
#include "bcs/model.hpp"

namespace bcs {

class DegenerateRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepPreset { kFig1, kFig2, kFig3, kCustom };
enum class SweptParam { kN, kLambda, kB };
enum class SweepStatus { kOk, kNoRealRootSub1, kNoSolutionEqn, kBothFailed };

inline constexpr double kPaperCouplingEv = 2e-6;

struct SweepSpec {
  SweepPreset preset = SweepPreset::kCustom;
  SweptParam swept = SweptParam::kN;
  std::vector<double> values;
  // n, lambda and b for the parameters that are not swept; delta is derived
  // per point from v_ev / lambda.
  ModelParams fixed{10, 1.0, 10.0, 0};
  double v_ev = kPaperCouplingEv;
  GapExtraction extraction = GapExtraction::kPairBreaking;
  double tol = kGapEquationDefaultTol;
};

struct SweepRecord {
  double param = 0.0;
  int n = 0;
  double lambda = 0.0;
  int b = 0;
  double v_ev = 0.0;
  double delta_ev = 0.0;
  std::optional<double> gap_sub1_delta;
  std::optional<double> gap_eqn_delta;
  std::optional<double> rel_err;
  std::optional<double> first_gap_ratio;
  SweepStatus status = SweepStatus::kBothFailed;
  // Achieved residuals of the two defining equations (delta-units).
  double sub1_residual = 0.0;
  double eqn_residual = 0.0;

  std::optional<double> gap_sub1_ev() const;
  std::optional<double> gap_eqn_ev() const;
};

struct CriticalB {
  int b_star = -1;
  int b_max = 0;
  // Real roots form a prefix 0..b_star of the scanned range.
  bool prefix = true;
  // Offsets above b_star + 1 that again admit a root (empty when prefix).
  std::vector<int> stray_roots;
  // Every scanned b admitted a root; b_star == b_max is then only a lower bound.
  bool saturated = false;
};

// fig1: lambda=10, b=0, N=2..100; fig2: N=20, b=0, lambda=1..100;
// fig3: N=10, lambda=10, b=0..70. All at V = 2e-6 eV.
SweepSpec preset_spec(SweepPreset preset);

// Inclusive grid from, from+step, ... <= to.
SweepSpec custom_spec(SweptParam swept, double from, double to, double step,
                      const ModelParams& fixed, double v_ev);

// One point: both gap methods in delta-units, reported with the eV scale.
SweepRecord evaluate_point(const ModelParams& params_delta_units, double v_ev,
                           GapExtraction extraction = GapExtraction::kPairBreaking,
                           double tol = kGapEquationDefaultTol);

// Records in ascending order of the swept parameter. Per-point failures are
// recorded in status and never abort the sweep.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

// Linear scan b = 0..b_max of the sub1 gap outcome. Throws DegenerateRegime
// when no root exists at b = 0.
CriticalB find_critical_b(int n, double lambda, double v_ev, int b_max,
                          GapExtraction extraction = GapExtraction::kPairBreaking);

// |a - reference| / |reference|; throws std::invalid_argument for reference 0.
double relative_error(double a, double reference);

inline constexpr const char* kSweepCsvHeader =
    "param,n,lambda,b,v_ev,delta_ev,gap_sub1_ev,gap_eqn_ev,rel_err,first_gap_ratio,status";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     UnitMode units = UnitMode::kElectronVolts);
void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records,
                      UnitMode units = UnitMode::kElectronVolts);

std::string to_string(SweepStatus status);
std::string to_string(SweptParam param);
std::string to_string(SweepPreset preset);

}  // namespace bcs
