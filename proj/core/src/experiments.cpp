#include "bcs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "bcs/io.hpp"
#include "bcs/subspace.hpp"

namespace bcs {

std::optional<double> SweepRecord::gap_sub1_ev() const {
  if (!gap_sub1_delta) return std::nullopt;
  return *gap_sub1_delta * delta_ev;
}

std::optional<double> SweepRecord::gap_eqn_ev() const {
  if (!gap_eqn_delta) return std::nullopt;
  return *gap_eqn_delta * delta_ev;
}

namespace {

std::vector<double> integer_grid(int from, int to) {
  std::vector<double> v;
  for (int x = from; x <= to; ++x) v.push_back(x);
  return v;
}

void check_integral(SweptParam swept, double value) {
  if (swept != SweptParam::kLambda && value != std::floor(value)) {
    throw InvalidParameter("sweep over " + to_string(swept) + " needs integer values");
  }
}

}  // namespace

SweepSpec preset_spec(SweepPreset preset) {
  SweepSpec s;
  s.preset = preset;
  s.v_ev = kPaperCouplingEv;
  switch (preset) {
    case SweepPreset::kFig1:
      s.swept = SweptParam::kN;
      s.fixed = ModelParams{0, 1.0, 10.0, 0};
      s.values = integer_grid(2, 100);
      break;
    case SweepPreset::kFig2:
      s.swept = SweptParam::kLambda;
      s.fixed = ModelParams{20, 1.0, 0.0, 0};
      s.values = integer_grid(1, 100);
      break;
    case SweepPreset::kFig3:
      s.swept = SweptParam::kB;
      s.fixed = ModelParams{10, 1.0, 10.0, 0};
      s.values = integer_grid(0, 70);
      break;
    case SweepPreset::kCustom:
      throw InvalidParameter("custom sweeps are built with custom_spec");
  }
  return s;
}

SweepSpec custom_spec(SweptParam swept, double from, double to, double step,
                      const ModelParams& fixed, double v_ev) {
  if (!(step > 0.0)) throw InvalidParameter("sweep step must be > 0");
  if (to < from) throw InvalidParameter("sweep range must satisfy from <= to");
  SweepSpec s;
  s.preset = SweepPreset::kCustom;
  s.swept = swept;
  s.fixed = fixed;
  s.v_ev = v_ev;
  // Index-based grid so no rounding drift accumulates.
  const auto count = static_cast<long>(std::floor((to - from) / step * (1.0 + 1e-12))) + 1;
  for (long i = 0; i < count; ++i) {
    const double value = from + static_cast<double>(i) * step;
    check_integral(swept, value);
    s.values.push_back(value);
  }
  return s;
}

SweepRecord evaluate_point(const ModelParams& params, double v_ev, GapExtraction extraction,
                           double tol) {
  if (!(v_ev > 0.0)) throw InvalidParameter("v_ev must be > 0");
  const PairingModel model = make_model(params);

  SweepRecord r;
  r.n = params.n_levels;
  r.lambda = params.lambda;
  r.b = params.b;
  r.v_ev = v_ev;
  r.delta_ev = v_ev / params.lambda;

  if (model.n_levels() >= 2) {
    const Spectrum spectrum = sub1_eigenvalues(model);
    const GapResult sub1 = gap_from_spectrum(model, spectrum, extraction);
    if (sub1.has_gap()) {
      r.gap_sub1_delta = sub1.gap;
      r.sub1_residual = sub1.residual;
    }
    if (model.n_levels() >= 3) {
      const auto& e = spectrum.values;
      r.first_gap_ratio = (e[1] - e[0]) / (e[2] - e[1]);
    }
  }
  const GapResult eqn = solve_gap_equation(model, tol);
  if (eqn.has_gap()) {
    r.gap_eqn_delta = eqn.gap;
    r.eqn_residual = eqn.residual;
  }

  if (r.gap_sub1_delta && r.gap_eqn_delta) {
    r.status = SweepStatus::kOk;
    if (*r.gap_eqn_delta != 0.0) r.rel_err = relative_error(*r.gap_sub1_delta, *r.gap_eqn_delta);
  } else if (r.gap_eqn_delta) {
    r.status = SweepStatus::kNoRealRootSub1;
  } else if (r.gap_sub1_delta) {
    r.status = SweepStatus::kNoSolutionEqn;
  } else {
    r.status = SweepStatus::kBothFailed;
  }
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  std::vector<double> values = spec.values;
  std::sort(values.begin(), values.end());
  std::vector<SweepRecord> records;
  records.reserve(values.size());
  for (double value : values) {
    check_integral(spec.swept, value);
    ModelParams p = spec.fixed;
    p.delta = 1.0;
    switch (spec.swept) {
      case SweptParam::kN:
        p.n_levels = static_cast<int>(value);
        break;
      case SweptParam::kLambda:
        p.lambda = value;
        break;
      case SweptParam::kB:
        p.b = static_cast<int>(value);
        break;
    }
    SweepRecord r = evaluate_point(p, spec.v_ev, spec.extraction, spec.tol);
    r.param = value;
    records.push_back(std::move(r));
  }
  return records;
}

CriticalB find_critical_b(int n, double lambda, double v_ev, int b_max, GapExtraction extraction) {
  if (n < 2) throw InvalidParameter("critical-b scan needs N >= 2");
  if (!(lambda > 0.0) || !(v_ev > 0.0)) throw InvalidParameter("lambda and v_ev must be > 0");
  if (b_max < 1) throw InvalidParameter("b_max must be >= 1");

  std::vector<bool> real(static_cast<std::size_t>(b_max) + 1);
  for (int b = 0; b <= b_max; ++b) {
    // Offsets only enter through xi / delta, so the scan runs in delta-units.
    const PairingModel model = make_model(ModelParams{n, 1.0, lambda, b});
    real[static_cast<std::size_t>(b)] = gap_from_spectrum(model, sub1_eigenvalues(model), extraction).has_gap();
  }
  if (!real[0]) throw DegenerateRegime("no real root for the gap even at b = 0");

  CriticalB c;
  c.b_max = b_max;
  int b = 0;
  while (b + 1 <= b_max && real[static_cast<std::size_t>(b) + 1]) ++b;
  c.b_star = b;
  c.saturated = b == b_max;
  for (int k = b + 2; k <= b_max; ++k) {
    if (real[static_cast<std::size_t>(k)]) c.stray_roots.push_back(k);
  }
  c.prefix = c.stray_roots.empty();
  return c;
}

double relative_error(double a, double reference) {
  if (reference == 0.0) throw std::invalid_argument("relative_error: zero reference");
  return std::fabs(a - reference) / std::fabs(reference);
}

namespace {

std::optional<double> energy(std::optional<double> delta_units, double delta_ev, UnitMode units) {
  if (!delta_units) return std::nullopt;
  return units == UnitMode::kElectronVolts ? *delta_units * delta_ev : *delta_units;
}

std::string field(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

nlohmann::json json_field(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, UnitMode units) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << format_double(r.param) << ',' << r.n << ',' << format_double(r.lambda) << ',' << r.b << ','
        << format_double(r.v_ev) << ',' << format_double(r.delta_ev) << ','
        << field(energy(r.gap_sub1_delta, r.delta_ev, units)) << ','
        << field(energy(r.gap_eqn_delta, r.delta_ev, units)) << ',' << field(r.rel_err) << ','
        << field(r.first_gap_ratio) << ',' << to_string(r.status) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records, UnitMode units) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json o;
    o["param"] = r.param;
    o["n"] = r.n;
    o["lambda"] = r.lambda;
    o["b"] = r.b;
    o["v_ev"] = r.v_ev;
    o["delta_ev"] = r.delta_ev;
    o["gap_sub1_ev"] = json_field(energy(r.gap_sub1_delta, r.delta_ev, units));
    o["gap_eqn_ev"] = json_field(energy(r.gap_eqn_delta, r.delta_ev, units));
    o["rel_err"] = json_field(r.rel_err);
    o["first_gap_ratio"] = json_field(r.first_gap_ratio);
    o["status"] = to_string(r.status);
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::string to_string(SweepStatus status) {
  switch (status) {
    case SweepStatus::kOk:
      return "ok";
    case SweepStatus::kNoRealRootSub1:
      return "no_real_root_sub1";
    case SweepStatus::kNoSolutionEqn:
      return "no_solution_eqn";
    case SweepStatus::kBothFailed:
      return "both_failed";
  }
  return "unknown";
}

std::string to_string(SweptParam param) {
  switch (param) {
    case SweptParam::kN:
      return "n";
    case SweptParam::kLambda:
      return "lambda";
    case SweptParam::kB:
      return "b";
  }
  return "unknown";
}

std::string to_string(SweepPreset preset) {
  switch (preset) {
    case SweepPreset::kFig1:
      return "fig1";
    case SweepPreset::kFig2:
      return "fig2";
    case SweepPreset::kFig3:
      return "fig3";
    case SweepPreset::kCustom:
      return "custom";
  }
  return "custom";
}

}  // namespace bcs
