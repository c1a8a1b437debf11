#include "aspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aspec/error.hpp"

namespace aspec {

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw ArgumentError("tridiagonal matrix must have order >= 1");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw DimensionError("tridiagonal: offdiag length must be order - 1");
  }
}

SymTridiagonal SymTridiagonal::leading(std::size_t j) const {
  if (j == 0 || j > order()) throw ArgumentError("leading submatrix order out of range");
  return SymTridiagonal({diag_.begin(), diag_.begin() + j}, {offdiag_.begin(), offdiag_.begin() + (j - 1)});
}

DenseSymMatrix SymTridiagonal::to_dense() const {
  DenseSymMatrix m(order());
  for (std::size_t i = 0; i < order(); ++i) m(i, i) = diag_[i];
  for (std::size_t i = 0; i + 1 < order(); ++i) {
    m(i, i + 1) = offdiag_[i];
    m(i + 1, i) = offdiag_[i];
  }
  return m;
}

std::pair<double, double> SymTridiagonal::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < order(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(offdiag_[i - 1]);
    if (i + 1 < order()) r += std::abs(offdiag_[i]);
    lo = std::min(lo, diag_[i] - r);
    hi = std::max(hi, diag_[i] + r);
  }
  return {lo, hi};
}

namespace {

double pivot_floor(const SymTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.offdiag()) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax * 4.0;
}

int sturm_count_impl(const SymTridiagonal& t, double lambda, double pivmin) {
  const auto d = t.diag();
  const auto e = t.offdiag();
  int count = 0;
  double q = d[0] - lambda;
  // A zero pivot is nudged to +pivmin, i.e. evaluated just left of lambda,
  // which keeps the count "strictly less than".
  if (std::abs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - lambda - e[i - 1] * e[i - 1] / q;
    if (std::abs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// index-th smallest eigenvalue (0-based) inside [lo, hi].
double bisect(const SymTridiagonal& t, int index, double lo, double hi, double tol, double pivmin) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count_impl(t, mid, pivmin) > index) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> padded_bounds(const SymTridiagonal& t) {
  auto [lo, hi] = t.gershgorin();
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(lo), std::abs(hi)});
  return {lo - pad, hi + pad};
}

}  // namespace

int sturm_count(const SymTridiagonal& t, double lambda) {
  return sturm_count_impl(t, lambda, pivot_floor(t));
}

std::vector<double> tridiagonal_eigenvalues(const SymTridiagonal& t, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("bisection tolerance must be positive");
  const double pivmin = pivot_floor(t);
  const auto [lo, hi] = padded_bounds(t);
  const int n = static_cast<int>(t.order());
  std::vector<double> values(n);
  // Each eigenvalue's bracket starts at the previous eigenvalue's lower end.
  double floor = lo;
  for (int i = 0; i < n; ++i) {
    values[i] = bisect(t, i, floor, hi, tol, pivmin);
    floor = std::max(floor, values[i] - tol);
  }
  std::sort(values.begin(), values.end());
  return values;
}

double tridiagonal_max_eigenvalue(const SymTridiagonal& t, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("bisection tolerance must be positive");
  const auto [lo, hi] = padded_bounds(t);
  return bisect(t, static_cast<int>(t.order()) - 1, lo, hi, tol, pivot_floor(t));
}

EigenResult dense_eigen_oracle(const DenseSymMatrix& m, bool want_vectors) {
  const std::size_t n = m.order();
  const double norm = m.frobenius_norm();
  if (!m.is_symmetric(1e-12 * std::max(1.0, norm))) {
    throw ContractViolation("dense_eigen_oracle: matrix is not symmetric");
  }
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  const double target = 1e-15 * std::max(norm, std::numeric_limits<double>::min());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    if (std::sqrt(off) <= target) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= std::numeric_limits<double>::min()) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          at(k, p) = np;
          at(p, k) = np;
          at(k, q) = nq;
          at(q, k) = nq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return at(i, i) < at(j, j); });

  EigenResult result;
  result.values.reserve(n);
  for (std::size_t i : order) result.values.push_back(at(i, i));
  if (want_vectors) {
    std::vector<std::vector<double>> cols;
    cols.reserve(n);
    for (std::size_t i : order) {
      std::vector<double> col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + i];
      cols.push_back(std::move(col));
    }
    result.vectors = std::move(cols);
  }
  return result;
}

double max_eigenvalue(const DenseSymMatrix& m) { return dense_eigen_oracle(m).values.back(); }

PerronPair perron(const DenseSymMatrix& m, double tol) {
  const std::size_t n = m.order();
  for (double v : m.data()) {
    if (v < 0.0) throw ContractViolation("perron: matrix has a negative entry");
  }
  // Shifting by more than the spectral radius makes every eigenvalue of
  // M + shift*I positive, so -rho (bipartite case) cannot compete.
  const double shift = m.max_row_sum() + 1.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> mx = m.multiply(x);
  double prev = std::numeric_limits<double>::quiet_NaN();

  for (long it = 1; it <= kPerronIterationCap; ++it) {
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += x[i] * mx[i];
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = mx[i] - rq * x[i];
      res2 += r * r;
    }
    const double scale = std::max(1.0, std::abs(rq));
    if (std::abs(rq - prev) <= tol * scale && std::sqrt(res2) <= 1e-11 * scale) {
      for (double xi : x) {
        if (!(xi > 0.0)) throw ContractViolation("perron: limit vector is not positive (reducible matrix?)");
      }
      return PerronPair{rq, std::move(x), it};
    }
    prev = rq;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = mx[i] + shift * x[i];
      norm2 += x[i] * x[i];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& xi : x) xi *= inv;
    mx = m.multiply(x);
  }
  throw ConvergenceError("perron: power iteration did not converge within the iteration cap");
}

namespace {

template <typename Assemble>
double component_max(const Graph& g, Assemble&& assemble) {
  const auto comps = g.components();
  if (comps.size() == 1) return perron(assemble(g)).rho;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : comps) {
    best = std::max(best, max_eigenvalue(assemble(g.induced(c))));
  }
  return best;
}

}  // namespace

double spectral_radius(const Graph& g, AlphaParam a) {
  if (a.beta() == 0.0) return static_cast<double>(g.max_degree());
  return component_max(g, [a](const Graph& h) { return assemble_alpha_matrix(h, a); });
}

double spectral_radius_Q(const Graph& g) {
  return component_max(g, [](const Graph& h) { return assemble_Q(h); });
}

double spectral_radius_L(const Graph& g) { return max_eigenvalue(assemble_L(g)); }

}  // namespace aspec
