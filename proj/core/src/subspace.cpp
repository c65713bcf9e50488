#include "bcs/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace bcs {

SymmetricMatrix Sub1Matrix::materialize() const {
  SymmetricMatrix a(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) a.set(i, j, (*this)(i, j));
  }
  return a;
}

Sub1Matrix build_sub1(const PairingModel& model) {
  return Sub1Matrix(std::vector<double>(model.levels().begin(), model.levels().end()), model.v());
}

double secular_function(const Sub1Matrix& m, double energy) {
  double sum = 0.0;
  for (double x : m.levels()) sum += 1.0 / (x - energy);
  return 1.0 - m.v() * sum;
}

namespace {

bool spacing_ok(std::span<const double> xi, double tol) {
  double scale = 0.0;
  for (double x : xi) scale = std::max(scale, std::fabs(x));
  const double min_gap = 1e3 * tol * scale;
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (!(xi[i] - xi[i - 1] > min_gap)) return false;
  }
  return true;
}

// Secular function in shifted coordinates E = origin + tau, with the level
// offsets xi_m - origin precomputed. Keeps full relative accuracy for roots
// sitting close to a pole.
struct ShiftedSecular {
  std::vector<double> offsets;
  double v;

  double operator()(double tau) const {
    double sum = 0.0;
    for (double d : offsets) sum += 1.0 / (d - tau);
    return 1.0 - v * sum;
  }
};

// f is strictly decreasing on (lo, hi) with f(lo+) > 0 > f(hi-).
double bisect(const ShiftedSecular& f, double lo, double hi, double origin, double tol) {
  for (int it = 0; it < kSecularMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = f(mid);
    if (value == 0.0) return mid;
    if (value > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double scale = std::max(std::fabs(origin + lo), std::fabs(origin + hi));
    if (hi - lo <= tol * scale) break;
  }
  return 0.5 * (lo + hi);
}

ShiftedSecular shifted(std::span<const double> xi, double v, double origin) {
  ShiftedSecular f{{}, v};
  f.offsets.reserve(xi.size());
  for (double x : xi) f.offsets.push_back(x - origin);
  return f;
}

}  // namespace

Spectrum sub1_eigenvalues_secular(const Sub1Matrix& m, double tol) {
  const auto xi = m.levels();
  const std::size_t n = xi.size();
  if (n == 0) throw std::invalid_argument("secular solver: empty matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("secular solver: tol must be > 0");
  if (m.v() < 0.0) throw std::invalid_argument("secular solver: V must be >= 0");
  if (!spacing_ok(xi, tol)) {
    throw FallbackRequired("secular solver: levels too close for interlacing brackets");
  }

  Spectrum out;
  out.solver = SolverTag::kSecular;
  out.values.resize(n);
  if (m.v() == 0.0) {
    std::copy(xi.begin(), xi.end(), out.values.begin());
    return out;
  }

  const double v = m.v();
  // Lowest root: E_1 in [xi_1 - N V, xi_1), origin at xi_1.
  {
    const ShiftedSecular f = shifted(xi, v, xi[0]);
    out.values[0] = xi[0] + bisect(f, -static_cast<double>(n) * v, 0.0, xi[0], tol);
  }
  // Remaining roots: E_{i+1} in (xi_i, xi_{i+1}). Shift to the nearer pole,
  // chosen by the sign of f at the midpoint.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = xi[i + 1] - xi[i];
    const ShiftedSecular left = shifted(xi, v, xi[i]);
    if (left(0.5 * gap) < 0.0) {
      out.values[i + 1] = xi[i] + bisect(left, 0.0, 0.5 * gap, xi[i], tol);
    } else {
      const ShiftedSecular right = shifted(xi, v, xi[i + 1]);
      out.values[i + 1] = xi[i + 1] + bisect(right, -0.5 * gap, 0.0, xi[i + 1], tol);
    }
  }
  return out;
}

Spectrum sub1_eigenvalues(const PairingModel& model, double tol) {
  const Sub1Matrix m = build_sub1(model);
  try {
    return sub1_eigenvalues_secular(m, tol);
  } catch (const FallbackRequired&) {
    Spectrum s = dense_eigenvalues(m.materialize());
    s.solver = SolverTag::kDenseFallback;
    return s;
  }
}

}  // namespace bcs
