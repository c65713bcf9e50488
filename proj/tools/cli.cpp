#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcs/experiments.hpp"
#include "bcs/fullspace.hpp"
#include "bcs/gap.hpp"
#include "bcs/io.hpp"
#include "bcs/subspace.hpp"

namespace bcs::cli {

namespace {

inline constexpr int kMaxFullDiagLevels = 10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "text";
  std::string units = "ev";
  std::optional<double> tol;

  std::optional<int> n;
  std::optional<double> lambda;
  std::optional<double> delta_ev;
  std::optional<double> v_ev;
  std::optional<int> b;
};

UnitMode unit_mode(const GlobalOptions& g) {
  return g.units == "delta" ? UnitMode::kDeltaUnits : UnitMode::kElectronVolts;
}

// Config file first, command-line flags on top.
ModelConfig resolve_model(const GlobalOptions& g) {
  ModelConfig c;
  bool have_n = false;
  bool have_lambda = false;
  if (!g.config_path.empty()) {
    c = load_model_config(g.config_path);
    have_n = have_lambda = true;
  }
  if (g.n) {
    c.n = *g.n;
    have_n = true;
  }
  if (g.lambda) {
    c.lambda = *g.lambda;
    have_lambda = true;
  }
  if (g.b) c.b = *g.b;
  if (g.delta_ev && g.v_ev) throw UsageError("give only one of --delta-ev / --v-ev");
  if (g.delta_ev || g.v_ev) {
    c.delta_ev = g.delta_ev;
    c.v_ev = g.v_ev;
  }
  if (!have_n) throw UsageError("model needs --n (or --config)");
  if (!have_lambda) throw UsageError("model needs --lambda (or --config)");
  if (!c.delta_ev && !c.v_ev) throw UsageError("model needs one of --delta-ev / --v-ev (or --config)");
  // Validates the parameters; throws InvalidParameter on bad input.
  make_model(c.params_ev());
  return c;
}

double to_units(double delta_units_value, const ModelConfig& c, UnitMode units) {
  return units == UnitMode::kElectronVolts ? delta_units_value * c.resolved_delta_ev() : delta_units_value;
}

std::string gap_token(const GapResult& r, const ModelConfig& c, UnitMode units) {
  return r.has_gap() ? format_double(to_units(r.gap, c, units)) : to_string(r.outcome);
}

nlohmann::json gap_json(const GapResult& r, const ModelConfig& c, UnitMode units) {
  nlohmann::json o;
  o["method"] = to_string(r.method);
  o["outcome"] = to_string(r.outcome);
  o["gap"] = r.has_gap() ? nlohmann::json(to_units(r.gap, c, units)) : nlohmann::json(nullptr);
  o["residual"] = r.residual;
  return o;
}

int cmd_verify_lemma(int n_max, std::ostream& out) {
  if (n_max < 2 || n_max > kMaxLemmaLevels) throw UsageError("--n-max must lie in [2, 20]");
  bool all = true;
  for (int n = 2; n <= n_max; ++n) {
    const LemmaReport report = verify_lemma(n);
    out << "N=" << n << ' ' << (report.holds ? "PASS" : "FAIL") << '\n';
    for (const LemmaViolation& v : report.violations) {
      out << "  violation i=" << v.i << " m=" << v.m << " position=" << v.position << " value=" << v.value
          << " expected=" << v.expected << '\n';
    }
    all = all && report.holds;
  }
  return all ? kExitOk : kExitError;
}

int cmd_spectrum(const GlobalOptions& g, std::ostream& out) {
  const ModelConfig c = resolve_model(g);
  const UnitMode units = unit_mode(g);
  const PairingModel model = make_model(c.params_delta());
  const Spectrum s = sub1_eigenvalues(model, g.tol.value_or(kSecularDefaultTol));
  std::vector<double> values;
  for (double e : s.values) values.push_back(to_units(e, c, units));

  if (g.format == "json") {
    nlohmann::json o;
    o["solver"] = to_string(s.solver);
    o["units"] = to_string(units);
    o["values"] = values;
    out << o.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "index,energy\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << format_double(values[i]) << '\n';
  } else {
    for (double e : values) out << format_double(e) << '\n';
  }
  return kExitOk;
}

int cmd_gap(const GlobalOptions& g, const std::string& method, const std::string& extraction_name,
            std::ostream& out) {
  const ModelConfig c = resolve_model(g);
  const UnitMode units = unit_mode(g);
  const PairingModel model = make_model(c.params_delta());
  const GapExtraction extraction =
      extraction_name == "difference" ? GapExtraction::kLevelDifference : GapExtraction::kPairBreaking;

  std::optional<GapResult> sub1;
  std::optional<GapResult> eqn;
  if (method == "sub1" || method == "both") {
    sub1 = gap_from_spectrum(model, sub1_eigenvalues(model), extraction);
  }
  if (method == "eqn" || method == "both") {
    eqn = solve_gap_equation(model, g.tol.value_or(kGapEquationDefaultTol));
  }
  std::optional<double> rel;
  if (sub1 && eqn && sub1->has_gap() && eqn->has_gap() && eqn->gap != 0.0) {
    rel = relative_error(sub1->gap, eqn->gap);
  }

  if (g.format == "json") {
    nlohmann::json o;
    o["units"] = to_string(units);
    if (sub1) o["sub1"] = gap_json(*sub1, c, units);
    if (eqn) o["eqn"] = gap_json(*eqn, c, units);
    if (rel) o["rel_err"] = *rel;
    out << o.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "method,outcome,gap\n";
    for (const auto* r : {&sub1, &eqn}) {
      if (!*r) continue;
      out << to_string((*r)->method) << ',' << to_string((*r)->outcome) << ','
          << ((*r)->has_gap() ? format_double(to_units((*r)->gap, c, units)) : std::string()) << '\n';
    }
  } else if (method == "both") {
    out << "sub1 " << gap_token(*sub1, c, units) << '\n';
    out << "eqn " << gap_token(*eqn, c, units) << '\n';
    if (rel) out << "rel_err " << format_double(*rel) << '\n';
  } else {
    out << gap_token(sub1 ? *sub1 : *eqn, c, units) << '\n';
  }

  const bool missing = (sub1 && !sub1->has_gap()) || (eqn && !eqn->has_gap());
  return missing ? kExitNoRoot : kExitOk;
}

SweptParam swept_from(const std::string& name) {
  if (name == "n") return SweptParam::kN;
  if (name == "lambda") return SweptParam::kLambda;
  return SweptParam::kB;
}

int cmd_sweep(const GlobalOptions& g, const std::string& preset, const std::string& param,
              std::optional<double> from, std::optional<double> to, double step, std::ostream& out) {
  SweepSpec spec;
  if (!preset.empty()) {
    if (!param.empty()) throw UsageError("give either --preset or --param, not both");
    spec = preset_spec(preset == "fig1" ? SweepPreset::kFig1
                       : preset == "fig2" ? SweepPreset::kFig2
                                          : SweepPreset::kFig3);
    if (g.v_ev) spec.v_ev = *g.v_ev;
  } else {
    if (param.empty() || !from || !to) throw UsageError("sweep needs --preset or --param with --from/--to");
    const SweptParam swept = swept_from(param);
    ModelConfig c;
    if (!g.config_path.empty()) c = load_model_config(g.config_path);
    if (g.n) c.n = *g.n;
    if (g.lambda) c.lambda = *g.lambda;
    if (g.b) c.b = *g.b;
    if (g.delta_ev && g.v_ev) throw UsageError("give only one of --delta-ev / --v-ev");
    if (g.delta_ev || g.v_ev) {
      c.delta_ev = g.delta_ev;
      c.v_ev = g.v_ev;
    }
    if (swept != SweptParam::kN && c.n < 1) throw UsageError("sweep needs --n for the fixed level count");
    if (swept != SweptParam::kLambda && !(c.lambda > 0.0)) throw UsageError("sweep needs --lambda");
    double v_ev = kPaperCouplingEv;
    if (c.v_ev) {
      v_ev = *c.v_ev;
    } else if (c.delta_ev) {
      if (swept == SweptParam::kLambda) throw UsageError("a lambda sweep needs --v-ev, not --delta-ev");
      v_ev = *c.delta_ev * c.lambda;
    }
    spec = custom_spec(swept, *from, *to, step, ModelParams{c.n, 1.0, c.lambda, c.b}, v_ev);
  }
  if (g.tol) spec.tol = *g.tol;

  const auto records = run_sweep(spec);
  if (g.format == "json") {
    write_sweep_json(out, records, unit_mode(g));
  } else {
    write_sweep_csv(out, records, unit_mode(g));
  }
  return kExitOk;
}

int cmd_full_diag(const GlobalOptions& g, const std::string& dump_path, std::ostream& out) {
  const ModelConfig c = resolve_model(g);
  if (c.n > kMaxFullDiagLevels) throw UsageError("full-diag supports N <= 10");
  const UnitMode units = unit_mode(g);
  const double scale = units == UnitMode::kElectronVolts ? c.resolved_delta_ev() : 1.0;
  const PairingModel model = rescale(make_model(c.params_delta()), scale);

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw UsageError("cannot open dump file: " + dump_path);
    write_matrix(dump, build_full_hamiltonian(model));
  }

  const auto blocks = block_spectra(model);
  if (g.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const BlockReport& r : blocks) {
      arr.push_back({{"weight", r.weight}, {"dimension", r.dimension}, {"eigenvalues", r.eigenvalues.values}});
    }
    out << arr.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "weight,index,energy\n";
    for (const BlockReport& r : blocks) {
      for (std::size_t i = 0; i < r.eigenvalues.values.size(); ++i) {
        out << r.weight << ',' << i + 1 << ',' << format_double(r.eigenvalues.values[i]) << '\n';
      }
    }
  } else {
    for (const BlockReport& r : blocks) {
      out << "# weight " << r.weight << " dimension " << r.dimension << '\n';
      for (double e : r.eigenvalues.values) out << format_double(e) << '\n';
    }
  }
  return kExitOk;
}

int cmd_critical_b(const GlobalOptions& g, int b_max, const std::string& extraction_name, std::ostream& out) {
  const ModelConfig c = resolve_model(g);
  const GapExtraction extraction =
      extraction_name == "difference" ? GapExtraction::kLevelDifference : GapExtraction::kPairBreaking;
  const double v_ev = c.resolved_delta_ev() * c.lambda;
  CriticalB cb;
  try {
    cb = find_critical_b(c.n, c.lambda, v_ev, b_max, extraction);
  } catch (const DegenerateRegime&) {
    out << "no-real-root\n";
    return kExitNoRoot;
  }
  if (g.format == "json") {
    nlohmann::json o{{"b_star", cb.b_star},   {"b_max", cb.b_max},         {"prefix", cb.prefix},
                     {"saturated", cb.saturated}, {"stray_roots", cb.stray_roots}};
    out << o.dump(2) << '\n';
  } else {
    out << "b_star " << cb.b_star << '\n';
    out << "prefix " << (cb.prefix ? "true" : "false") << '\n';
    out << "saturated " << (cb.saturated ? "true" : "false") << '\n';
  }
  return kExitOk;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduced-BCS pairing solver"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON model config")->check(CLI::ExistingFile);
  app.add_option("--out", g.out_path, "Write output to this file");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--units", g.units, "Energy units for output")->check(CLI::IsMember({"ev", "delta"}));
  app.add_option("--tol", g.tol, "Relative solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--n", g.n, "Number of pair levels N");
  app.add_option("--lambda", g.lambda, "Coupling ratio lambda = V / delta");
  app.add_option("--delta-ev", g.delta_ev, "Level spacing delta in eV");
  app.add_option("--v-ev", g.v_ev, "Coupling V in eV");
  app.add_option("--b", g.b, "Fermi-surface offset b");

  int n_max = 12;
  auto* lemma = app.add_subcommand("verify-lemma", "Check the single-occupation projector positions");
  lemma->add_option("--n-max", n_max, "Largest N to check");

  auto* spectrum = app.add_subcommand("spectrum", "Single-pair block eigenvalues");

  std::string method = "both";
  std::string extraction = "pair";
  auto* gap = app.add_subcommand("gap", "Superconducting gap");
  gap->add_option("--method", method)->check(CLI::IsMember({"sub1", "eqn", "both"}));
  gap->add_option("--extraction", extraction)->check(CLI::IsMember({"pair", "difference"}));

  std::string preset;
  std::string param;
  std::optional<double> from;
  std::optional<double> to;
  double step = 1.0;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep comparing both gap methods");
  sweep->add_option("--preset", preset)->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  sweep->add_option("--param", param)->check(CLI::IsMember({"n", "lambda", "b"}));
  sweep->add_option("--from", from);
  sweep->add_option("--to", to);
  sweep->add_option("--step", step)->check(CLI::PositiveNumber);

  std::string dump_path;
  auto* full = app.add_subcommand("full-diag", "Block spectra of the full 2^N Hamiltonian");
  full->add_option("--dump", dump_path, "Write the dense matrix to this file");

  int b_max = 70;
  std::string cb_extraction = "pair";
  auto* critical = app.add_subcommand("critical-b", "Largest offset b with a real gap root");
  critical->add_option("--b-max", b_max);
  critical->add_option("--extraction", cb_extraction)->check(CLI::IsMember({"pair", "difference"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::ostringstream buffer;
  int status = kExitError;
  try {
    if (*lemma) {
      status = cmd_verify_lemma(n_max, buffer);
    } else if (*spectrum) {
      status = cmd_spectrum(g, buffer);
    } else if (*gap) {
      status = cmd_gap(g, method, extraction, buffer);
    } else if (*sweep) {
      status = cmd_sweep(g, preset, param, from, to, step, buffer);
    } else if (*full) {
      status = cmd_full_diag(g, dump_path, buffer);
    } else if (*critical) {
      status = cmd_critical_b(g, b_max, cb_extraction, buffer);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << g.out_path << '\n';
      return kExitError;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace bcs::cli
