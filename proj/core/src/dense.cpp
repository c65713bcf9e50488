#include "bcs/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "bcs/io.hpp"

namespace bcs {

std::string to_string(SolverTag tag) {
  switch (tag) {
    case SolverTag::kSecular:
      return "secular";
    case SolverTag::kDenseFallback:
      return "dense-fallback";
    case SolverTag::kOracle:
      return "oracle";
  }
  return "unknown";
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
  if (i == j) {
    data_[i * dim_ + i] += value;
    return;
  }
  set(i, j, data_[i * dim_ + j] + value);
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymmetricMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) s += (*this)(i, j) * (*this)(i, j);
  }
  return std::sqrt(2.0 * s);
}

std::vector<double> SymmetricMatrix::multiply(const std::vector<double>& x) const {
  if (x.size() != dim_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += data_[i * dim_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

// Works on a full row-major copy; both triangles are kept in sync so the
// rotation update is a pair of row and column sweeps.
class JacobiWorkspace {
 public:
  explicit JacobiWorkspace(const SymmetricMatrix& a) : n_(a.dim()), m_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) m_[i * n_ + j] = a(i, j);
    }
  }

  double& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }

  double off_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) s += m_[i * n_ + j] * m_[i * n_ + j];
    }
    return std::sqrt(2.0 * s);
  }

  // Annihilates (p, q) with the standard stable rotation.
  void rotate(std::size_t p, std::size_t q) {
    const double apq = at(p, q);
    const double app = at(p, p);
    const double aqq = at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = 0.0;
    at(q, p) = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == p || r == q) continue;
      const double arp = at(r, p);
      const double arq = at(r, q);
      if (arp == 0.0 && arq == 0.0) continue;
      const double new_rp = arp - s * (arq + tau * arp);
      const double new_rq = arq + s * (arp - tau * arq);
      at(r, p) = new_rp;
      at(p, r) = new_rp;
      at(r, q) = new_rq;
      at(q, r) = new_rq;
    }
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = m_[i * n_ + i];
    return d;
  }

 private:
  std::size_t n_;
  std::vector<double> m_;
};

// Index sets of the connected components of the nonzero pattern, each in
// ascending order. A reducible matrix has the union of its components'
// spectra as its spectrum.
std::vector<std::vector<std::size_t>> components(const SymmetricMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != 0.0) {
        const std::size_t ri = find(i);
        const std::size_t rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

}  // namespace

Spectrum dense_eigenvalues(SymmetricMatrix a) {
  const std::size_t n = a.dim();
  if (n > kDenseOracleMaxDim) throw std::invalid_argument("dense eigensolver guard: dim > 4096");
  Spectrum out;
  out.solver = SolverTag::kOracle;
  if (n == 0) return out;

  const auto groups = components(a);
  // Per-component threshold so the total off-diagonal norm meets 1e-12 ||A||_F.
  const double threshold =
      kJacobiRelativeThreshold * a.frobenius_norm() / std::sqrt(static_cast<double>(groups.size()));

  out.values.reserve(n);
  for (const auto& group : groups) {
    SymmetricMatrix sub(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i; j < group.size(); ++j) sub.set(i, j, a(group[i], group[j]));
    }
    JacobiWorkspace w(sub);
    const std::size_t m = sub.dim();
    bool converged = w.off_norm() <= threshold;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
      for (std::size_t p = 0; p + 1 < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) {
          if (w.at(p, q) != 0.0) w.rotate(p, q);
        }
      }
      converged = w.off_norm() <= threshold;
    }
    if (!converged) throw ConvergenceError("Jacobi iteration did not converge in 100 sweeps");
    const auto d = w.diagonal();
    out.values.insert(out.values.end(), d.begin(), d.end());
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

void write_matrix(std::ostream& out, const SymmetricMatrix& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out << ' ';
      out << format_double(a(i, j));
    }
    out << '\n';
  }
}

}  // namespace bcs
