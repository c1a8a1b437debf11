#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aspec/graph.hpp"

namespace aspec {

/// Symmetric tridiagonal matrix: `diag` has length j, `offdiag` length j-1.
class SymTridiagonal {
 public:
  SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t order() const { return diag_.size(); }
  std::span<const double> diag() const { return diag_; }
  std::span<const double> offdiag() const { return offdiag_; }

  /// Leading principal j x j submatrix.
  SymTridiagonal leading(std::size_t j) const;
  DenseSymMatrix to_dense() const;
  /// [lo, hi] containing every eigenvalue (Gershgorin discs).
  std::pair<double, double> gershgorin() const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

struct EigenResult {
  std::vector<double> values;  // ascending
  /// Column k (stored as vectors[k]) belongs to values[k].
  std::optional<std::vector<std::vector<double>>> vectors;
};

struct PerronPair {
  double rho = 0.0;
  std::vector<double> vector;  // positive, unit 2-norm
  long iterations = 0;
};

inline constexpr double kDefaultBisectionTol = 1e-12;
inline constexpr long kPerronIterationCap = 1'000'000;

/// Number of eigenvalues of `t` strictly less than `lambda`.
int sturm_count(const SymTridiagonal& t, double lambda);

/// All eigenvalues, ascending, each bracketed by bisection to width <= tol.
std::vector<double> tridiagonal_eigenvalues(const SymTridiagonal& t, double tol = kDefaultBisectionTol);

/// Largest eigenvalue only.
double tridiagonal_max_eigenvalue(const SymTridiagonal& t, double tol = kDefaultBisectionTol);

/// Cyclic Jacobi rotations. Throws ContractViolation if `m` is not symmetric.
EigenResult dense_eigen_oracle(const DenseSymMatrix& m, bool want_vectors = false);

/// Dominant eigenpair of an irreducible nonnegative symmetric matrix by
/// shifted power iteration from the all-ones vector.
PerronPair perron(const DenseSymMatrix& m, double tol = 1e-14);

/// rho(A_alpha(g)): Perron iteration per connected component, dense oracle
/// for isolated vertices, max degree when alpha = 1.
double spectral_radius(const Graph& g, AlphaParam a);
double spectral_radius_Q(const Graph& g);
double spectral_radius_L(const Graph& g);

/// Largest eigenvalue of a symmetric matrix via the dense oracle.
double max_eigenvalue(const DenseSymMatrix& m);

}  // namespace aspec
