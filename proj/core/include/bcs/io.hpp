#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bcs/model.hpp"

namespace bcs {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest-round-trip-safe text form: 17 significant digits.
std::string format_double(double x);

// Model description as read from a JSON config or the command line. The
// energy scale is given either as the level spacing or as the coupling,
// never both.
struct ModelConfig {
  int n = 0;
  double lambda = 0.0;
  int b = 0;
  std::optional<double> delta_ev;
  std::optional<double> v_ev;

  // delta_ev, or v_ev / lambda.
  double resolved_delta_ev() const;
  // Parameters in eV.
  ModelParams params_ev() const;
  // Same model in delta-units (delta == 1).
  ModelParams params_delta() const;
};

// Parses {"n", "lambda", "b"?, "delta_ev" | "v_ev"}. Throws ConfigError on
// malformed JSON, missing or unknown keys, or both/neither energy scale.
ModelConfig parse_model_config(std::string_view json_text);
ModelConfig load_model_config(const std::string& path);

}  // namespace bcs
