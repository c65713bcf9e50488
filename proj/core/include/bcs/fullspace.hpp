#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "bcs/dense.hpp"
#include "bcs/model.hpp"
#include "bcs/spectrum.hpp"

namespace bcs {

// Basis of the 2^N pair-spin space. Position p = 1..2^N; writing p - 1 as N
// bits with level 1 as the most significant bit, level m is occupied
// (spin up) iff its bit is 0.
namespace basis {

inline std::uint64_t dimension(int n) { return std::uint64_t{1} << n; }

inline bool occupied(int n, std::uint64_t position, int m) {
  return (((position - 1) >> (n - m)) & 1u) == 0;
}

inline int occupied_count(int n, std::uint64_t position) {
  return n - std::popcount(position - 1);
}

// The state with only level i occupied.
inline std::uint64_t single_occupation_position(int n, int i) {
  return dimension(n) - (std::uint64_t{1} << (n - i));
}

}  // namespace basis

inline constexpr int kMaxDiagonalLevels = 24;
inline constexpr int kMaxLemmaLevels = 20;
inline constexpr int kMaxDenseLevels = 12;
inline constexpr int kMaxApplyLevels = 20;
inline constexpr std::size_t kMaxBlockDim = 4096;

// Diagonal of I^(m-1) (x) diag(1,0) (x) I^(N-m); entry p-1 is 1 iff level m
// is occupied in position p.
std::vector<std::uint8_t> h_diagonal(int n, int m);

struct LemmaViolation {
  int i = 0;
  int m = 0;
  std::uint64_t position = 0;
  int value = 0;
  int expected = 0;
};

struct LemmaReport {
  int n = 0;
  bool holds = false;
  std::vector<LemmaViolation> violations;
};

// Checks h(N,m)[2^N - 2^(N-i)] == (i == m) for all i, m and h(N,m)[2^N] == 0,
// probing only those positions.
LemmaReport verify_lemma(int n);

// Dense 2^N x 2^N spin Hamiltonian, N <= 12.
SymmetricMatrix build_full_hamiltonian(const PairingModel& model);

// Matrix-free H|state>, N <= 20.
std::vector<double> apply_full_hamiltonian(const PairingModel& model, std::span<const double> state);

// Positions (ascending) of all states with exactly k occupied pairs.
std::vector<std::uint64_t> weight_positions(int n, int k);

// Block of H restricted to k occupied pairs, basis in ascending position.
SymmetricMatrix extract_block(const PairingModel& model, int k);

struct BlockReport {
  int weight = 0;
  std::size_t dimension = 0;
  Spectrum eigenvalues;
};

// Dense spectra of every weight block k = 0..N.
std::vector<BlockReport> block_spectra(const PairingModel& model);

}  // namespace bcs
