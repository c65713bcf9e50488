#include "bcs/fullspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bcs {

namespace {

void check_levels(int n, int max_levels, const char* what) {
  if (n < 1 || n > max_levels) {
    throw std::invalid_argument(std::string(what) + ": N must lie in [1, " +
                                std::to_string(max_levels) + "], got " + std::to_string(n));
  }
}

int model_levels(const PairingModel& model) { return static_cast<int>(model.n_levels()); }

// Occupation mask: bit (N - m) set iff level m is occupied; the state index
// s = p - 1 is its complement.
std::uint64_t occupation_mask(int n, std::uint64_t index) {
  return ~index & (basis::dimension(n) - 1);
}

double diagonal_energy(const PairingModel& model, std::uint64_t occ) {
  const int n = model_levels(model);
  double e = 0.0;
  for (int m = 1; m <= n; ++m) {
    if ((occ >> (n - m)) & 1u) e += model.epsilon(static_cast<std::size_t>(m));
  }
  return e;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

// Calls visit(neighbour_index) for each state reached by moving one
// occupation from an occupied level to an empty one.
template <typename Visit>
void for_each_hop(int n, std::uint64_t index, Visit&& visit) {
  const std::uint64_t full = basis::dimension(n) - 1;
  const std::uint64_t occ = occupation_mask(n, index);
  const std::uint64_t empty = ~occ & full;
  for (std::uint64_t from = occ; from; from &= from - 1) {
    const std::uint64_t from_bit = from & (~from + 1);
    for (std::uint64_t to = empty; to; to &= to - 1) {
      const std::uint64_t to_bit = to & (~to + 1);
      const std::uint64_t new_occ = (occ & ~from_bit) | to_bit;
      visit(~new_occ & full);
    }
  }
}

}  // namespace

std::vector<std::uint8_t> h_diagonal(int n, int m) {
  check_levels(n, kMaxDiagonalLevels, "h_diagonal");
  if (m < 1 || m > n) throw std::out_of_range("h_diagonal: level index out of range");
  const std::uint64_t dim = basis::dimension(n);
  std::vector<std::uint8_t> d(dim);
  for (std::uint64_t p = 1; p <= dim; ++p) d[p - 1] = basis::occupied(n, p, m) ? 1 : 0;
  return d;
}

LemmaReport verify_lemma(int n) {
  if (n < 2 || n > kMaxLemmaLevels) {
    throw std::invalid_argument("verify_lemma: N must lie in [2, 20], got " + std::to_string(n));
  }
  LemmaReport report;
  report.n = n;
  const std::uint64_t last = basis::dimension(n);
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t p = basis::single_occupation_position(n, i);
      const int value = basis::occupied(n, p, m) ? 1 : 0;
      const int expected = i == m ? 1 : 0;
      if (value != expected) report.violations.push_back({i, m, p, value, expected});
    }
    const int tail = basis::occupied(n, last, m) ? 1 : 0;
    if (tail != 0) report.violations.push_back({0, m, last, tail, 0});
  }
  report.holds = report.violations.empty();
  return report;
}

SymmetricMatrix build_full_hamiltonian(const PairingModel& model) {
  const int n = model_levels(model);
  check_levels(n, kMaxDenseLevels, "build_full_hamiltonian");
  const std::uint64_t dim = basis::dimension(n);
  SymmetricMatrix h(dim);
  const double v = model.v();
  for (std::uint64_t s = 0; s < dim; ++s) {
    h.set(s, s, diagonal_energy(model, occupation_mask(n, s)));
    for_each_hop(n, s, [&](std::uint64_t t) {
      if (t > s) h.set(s, t, -v);
    });
  }
  return h;
}

std::vector<double> apply_full_hamiltonian(const PairingModel& model, std::span<const double> state) {
  const int n = model_levels(model);
  check_levels(n, kMaxApplyLevels, "apply_full_hamiltonian");
  const std::uint64_t dim = basis::dimension(n);
  if (state.size() != dim) {
    throw std::invalid_argument("apply_full_hamiltonian: state length must be 2^N");
  }
  const double v = model.v();
  std::vector<double> out(dim, 0.0);
  for (std::uint64_t s = 0; s < dim; ++s) {
    double acc = diagonal_energy(model, occupation_mask(n, s)) * state[s];
    for_each_hop(n, s, [&](std::uint64_t t) { acc -= v * state[t]; });
    out[s] = acc;
  }
  return out;
}

std::vector<std::uint64_t> weight_positions(int n, int k) {
  check_levels(n, kMaxApplyLevels, "weight_positions");
  if (k < 0 || k > n) throw std::out_of_range("weight_positions: k must lie in [0, N]");
  std::vector<std::uint64_t> positions;
  positions.reserve(binomial(n, k));
  const std::uint64_t dim = basis::dimension(n);
  for (std::uint64_t p = 1; p <= dim; ++p) {
    if (basis::occupied_count(n, p) == k) positions.push_back(p);
  }
  return positions;
}

SymmetricMatrix extract_block(const PairingModel& model, int k) {
  const int n = model_levels(model);
  check_levels(n, kMaxApplyLevels, "extract_block");
  if (k < 0 || k > n) throw std::out_of_range("extract_block: k must lie in [0, N]");
  if (binomial(n, k) > kMaxBlockDim) {
    throw std::invalid_argument("extract_block: block dimension C(N,k) exceeds 4096");
  }
  const auto positions = weight_positions(n, k);
  SymmetricMatrix block(positions.size());
  const double v = model.v();
  for (std::size_t a = 0; a < positions.size(); ++a) {
    const std::uint64_t s = positions[a] - 1;
    block.set(a, a, diagonal_energy(model, occupation_mask(n, s)));
    for_each_hop(n, s, [&](std::uint64_t t) {
      const auto it = std::lower_bound(positions.begin(), positions.end(), t + 1);
      const auto b = static_cast<std::size_t>(it - positions.begin());
      if (b > a) block.set(a, b, -v);
    });
  }
  return block;
}

std::vector<BlockReport> block_spectra(const PairingModel& model) {
  const int n = model_levels(model);
  std::vector<BlockReport> reports;
  for (int k = 0; k <= n; ++k) {
    BlockReport r;
    r.weight = k;
    r.eigenvalues = dense_eigenvalues(extract_block(model, k));
    r.dimension = r.eigenvalues.values.size();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace bcs
