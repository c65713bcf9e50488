#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bcs/experiments.hpp"
#include "bcs/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.status = bcs::cli::parse_and_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("bcs_cli_test_" + name); }

}  // namespace

TEST_CASE("gap --method both agrees within 5%") {
  const Run r = run({"gap", "--method", "both", "--n", "20", "--lambda", "10", "--v-ev", "2e-6"});
  CHECK(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0].rfind("sub1 ", 0) == 0);
  CHECK(l[1].rfind("eqn ", 0) == 0);
  const double sub1 = std::stod(l[0].substr(5));
  const double eqn = std::stod(l[1].substr(4));
  CHECK(std::fabs(sub1 - eqn) / eqn <= 0.05);
}

TEST_CASE("gap beyond the critical offset reports no-real-root with exit 2") {
  const Run r = run({"gap", "--method", "sub1", "--n", "10", "--lambda", "10", "--v-ev", "2e-6", "--b", "60"});
  CHECK(r.status == 2);
  CHECK(r.out == "no-real-root\n");

  const Run eqn = run({"gap", "--method", "eqn", "--n", "10", "--lambda", "10", "--v-ev", "2e-6", "--b", "60"});
  CHECK(eqn.status == 2);
  CHECK(eqn.out == "no-solution\n");
}

TEST_CASE("literal level-difference extraction is selectable") {
  const Run r = run({"gap", "--method", "sub1", "--extraction", "difference", "--n", "20", "--lambda", "10",
                     "--v-ev", "2e-6"});
  CHECK(r.status == 2);
  CHECK(r.out == "no-real-root\n");
}

TEST_CASE("verify-lemma prints one PASS line per N") {
  const Run r = run({"verify-lemma", "--n-max", "12"});
  CHECK(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 11);
  CHECK(l.front() == "N=2 PASS");
  CHECK(l.back() == "N=12 PASS");
  CHECK(run({"verify-lemma", "--n-max", "21"}).status == 1);
}

TEST_CASE("spectrum output") {
  const Run r = run({"spectrum", "--n", "2", "--lambda", "1", "--delta-ev", "1"});
  CHECK(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(std::fabs(std::stod(l[0]) - (1.0 - std::sqrt(5.0)) / 2.0) < 1e-13);
  CHECK(std::fabs(std::stod(l[1]) - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-13);

  const Run csv = run({"spectrum", "--n", "2", "--lambda", "1", "--delta-ev", "1", "--format", "csv"});
  CHECK(lines(csv.out).front() == "index,energy");
  const Run json = run({"spectrum", "--n", "2", "--lambda", "1", "--delta-ev", "1", "--format", "json"});
  CHECK(json.out.find("\"solver\": \"secular\"") != std::string::npos);
}

TEST_CASE("--units delta and --units ev differ by delta_ev") {
  const std::vector<std::string> base{"spectrum", "--n", "12", "--lambda", "10", "--v-ev", "2e-6", "--b", "3"};
  auto ev_args = base;
  ev_args.insert(ev_args.end(), {"--units", "ev"});
  auto delta_args = base;
  delta_args.insert(delta_args.end(), {"--units", "delta"});
  const auto ev = lines(run(ev_args).out);
  const auto delta = lines(run(delta_args).out);
  REQUIRE(ev.size() == delta.size());
  const double delta_ev = 2e-6 / 10.0;
  for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::stod(delta[i]) * delta_ev == std::stod(ev[i]));

  const auto gap_ev = lines(run({"gap", "--n", "20", "--lambda", "10", "--v-ev", "2e-6"}).out);
  const auto gap_delta = lines(run({"gap", "--n", "20", "--lambda", "10", "--v-ev", "2e-6", "--units", "delta"}).out);
  CHECK(std::stod(gap_delta[0].substr(5)) * delta_ev == std::stod(gap_ev[0].substr(5)));
  CHECK(std::stod(gap_delta[1].substr(4)) * delta_ev == std::stod(gap_ev[1].substr(4)));
}

TEST_CASE("config file with flag overrides") {
  const fs::path cfg = temp_path("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"n": 20, "v_ev": 2e-6, "lambda": 10, "b": 0})";
  }
  const Run from_config = run({"--config", cfg.string(), "gap", "--method", "both"});
  const Run from_flags = run({"gap", "--method", "both", "--n", "20", "--lambda", "10", "--v-ev", "2e-6"});
  CHECK(from_config.status == 0);
  CHECK(from_config.out == from_flags.out);

  const Run overridden = run({"--config", cfg.string(), "gap", "--method", "sub1", "--b", "120"});
  CHECK(overridden.status == 2);

  const Run both_scales = run({"--config", cfg.string(), "gap", "--delta-ev", "1", "--v-ev", "1"});
  CHECK(both_scales.status == 1);

  {
    std::ofstream f(cfg);
    f << R"({"n": 20, "lambda": 10})";
  }
  CHECK(run({"--config", cfg.string(), "gap"}).status == 1);
  {
    std::ofstream f(cfg);
    f << "{broken";
  }
  CHECK(run({"--config", cfg.string(), "gap"}).status == 1);
  fs::remove(cfg);
}

TEST_CASE("sweep presets and custom sweeps") {
  const Run fig3 = run({"sweep", "--preset", "fig3"});
  CHECK(fig3.status == 0);
  const auto l = lines(fig3.out);
  REQUIRE(l.size() == 72);
  CHECK(l[0] == bcs::kSweepCsvHeader);

  const Run custom = run({"sweep", "--param", "n", "--from", "2", "--to", "6", "--lambda", "10", "--v-ev", "2e-6"});
  CHECK(custom.status == 0);
  CHECK(lines(custom.out).size() == 6);

  const Run json = run({"sweep", "--preset", "fig1", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out.front() == '[');

  CHECK(run({"sweep"}).status == 1);
  CHECK(run({"sweep", "--preset", "fig1", "--param", "n"}).status == 1);
  CHECK(run({"sweep", "--preset", "fig9"}).status == 1);
}

TEST_CASE("--out writes bit-identical files for identical argv") {
  const fs::path a = temp_path("a.csv");
  const fs::path b = temp_path("b.csv");
  CHECK(run({"--out", a.string(), "sweep", "--preset", "fig2"}).status == 0);
  CHECK(run({"sweep", "--preset", "fig2", "--out", b.string()}).status == 0);
  const std::string ta = read_file(a);
  CHECK(!ta.empty());
  CHECK(ta == read_file(b));
  CHECK(ta == run({"sweep", "--preset", "fig2"}).out);
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("full-diag lists every weight block and guards N") {
  const Run r = run({"full-diag", "--n", "3", "--lambda", "2", "--delta-ev", "1", "--units", "delta"});
  CHECK(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4 + 8);
  CHECK(l[0] == "# weight 0 dimension 1");
  CHECK(l[1] == "0");

  const fs::path dump = temp_path("dump.txt");
  CHECK(run({"full-diag", "--n", "2", "--lambda", "1", "--delta-ev", "1", "--units", "delta", "--dump",
             dump.string()})
            .status == 0);
  CHECK(read_file(dump) == "1 0 0 0\n0 0 -1 0\n0 -1 1 0\n0 0 0 0\n");
  fs::remove(dump);

  const Run big = run({"full-diag", "--n", "11", "--lambda", "2", "--delta-ev", "1"});
  CHECK(big.status == 1);
  CHECK(big.err.find("N <= 10") != std::string::npos);
}

TEST_CASE("critical-b") {
  const Run r = run({"critical-b", "--n", "10", "--lambda", "10", "--v-ev", "2e-6", "--b-max", "70"});
  CHECK(r.status == 0);
  CHECK(lines(r.out)[1] == "prefix true");

  const Run none = run({"critical-b", "--n", "10", "--lambda", "10", "--v-ev", "2e-6", "--extraction", "difference"});
  CHECK(none.status == 2);
  CHECK(none.out == "no-real-root\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"gap", "--bogus", "1"}).status == 1);
  CHECK(run({"gap", "--n", "20", "--lambda", "10"}).status == 1);
  CHECK(run({"gap", "--n", "0", "--lambda", "10", "--v-ev", "1"}).status == 1);
  CHECK(run({"gap", "--method", "magic", "--n", "20", "--lambda", "10", "--v-ev", "1"}).status == 1);
}
