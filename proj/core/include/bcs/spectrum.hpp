#pragma once

#include <string>
#include <vector>

namespace bcs {

enum class SolverTag { kSecular, kDenseFallback, kOracle };

// Eigenvalues in ascending order, tagged with the solver that produced them.
struct Spectrum {
  std::vector<double> values;
  SolverTag solver = SolverTag::kOracle;
};

std::string to_string(SolverTag tag);

}  // namespace bcs
