#include "bcs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bcs {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double ModelConfig::resolved_delta_ev() const {
  if (delta_ev.has_value() == v_ev.has_value()) {
    throw ConfigError("exactly one of delta_ev / v_ev must be given");
  }
  if (delta_ev) return *delta_ev;
  if (!(lambda > 0.0)) throw ConfigError("lambda must be > 0 to derive delta from v_ev");
  return *v_ev / lambda;
}

ModelParams ModelConfig::params_ev() const {
  return ModelParams{n, resolved_delta_ev(), lambda, b};
}

ModelParams ModelConfig::params_delta() const {
  resolved_delta_ev();
  return ModelParams{n, 1.0, lambda, b};
}

ModelConfig parse_model_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "lambda" && key != "b" && key != "delta_ev" && key != "v_ev") {
      throw ConfigError("unknown config key: " + key);
    }
  }

  ModelConfig c;
  try {
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw ConfigError("config needs integer \"n\"");
    if (!j.contains("lambda") || !j.at("lambda").is_number()) throw ConfigError("config needs numeric \"lambda\"");
    c.n = j.at("n").get<int>();
    c.lambda = j.at("lambda").get<double>();
    if (j.contains("b")) {
      if (!j.at("b").is_number_integer()) throw ConfigError("\"b\" must be an integer");
      c.b = j.at("b").get<int>();
    }
    if (j.contains("delta_ev")) c.delta_ev = j.at("delta_ev").get<double>();
    if (j.contains("v_ev")) c.v_ev = j.at("v_ev").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
  if (c.delta_ev.has_value() == c.v_ev.has_value()) {
    throw ConfigError("config must contain exactly one of \"delta_ev\" / \"v_ev\"");
  }
  return c;
}

ModelConfig load_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_config(ss.str());
}

}  // namespace bcs
