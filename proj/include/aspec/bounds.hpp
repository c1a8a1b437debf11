#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aspec/bethe.hpp"
#include "aspec/graph.hpp"

namespace aspec {

inline constexpr double kTightTol = 1e-9;

// Closed-form bounds -------------------------------------------------------

/// alpha*Delta + 2(1-alpha)sqrt(Delta-1); strict upper bound for trees of max degree Delta.
double bound_t1(double alpha, int delta);
/// Spectral radius of A_alpha(K_{1,n-1}); upper bound for trees of order n.
double bound_t2(double alpha, int n);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Lower/upper sandwich for rho(A_alpha(P_n)), each branch chosen by alpha.
Interval path_bounds(double alpha, int n);
/// Lower/upper sandwich for rho(A_alpha(B(d,k))).
Interval bethe_bounds(double alpha, int d, int k);

// Per-graph report ---------------------------------------------------------

enum class Side { upper, lower };
const char* side_name(Side s);

struct BoundEntry {
  std::string name;
  Side side = Side::upper;
  double value = 0.0;
  double slack = 0.0;  // |value - rho_alpha|
  bool applicable = false;
  bool tight = false;
  /// Signed check: upper >= rho - tol, lower <= rho + tol.
  bool holds(double rho, double tol = kTightTol) const;
  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundsReport {
  std::string graph;
  int n = 0;
  double alpha = 0.0;
  double rho_alpha = 0.0;
  double rho_complement = 0.0;  // rho(A_{1-alpha})
  double rho_A = 0.0;
  double rho_Q = 0.0;
  int delta = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry& entry(const std::string& name) const;
  /// Every applicable row holds on its side.
  bool consistent(double tol = kTightTol) const;
  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// rho(A), rho(Q), Delta, rho(A_alpha) and every general-graph bound row:
/// ub1/lb1 (alpha <= 1/2), ub2/lb2 (alpha >= 1/2), "in" (rho(Q) - rho(A_{1-alpha})),
/// bo_lower (rho(A)) and bo_upper (Delta).
BoundsReport sandwich_bounds(const Graph& g, double alpha, std::string name = "G");

// Verification harness -----------------------------------------------------

struct Counterexample {
  std::string graph;  // edge list "n:u-v,u-v,..."
  int n = 0;
  double alpha = 0.0;
  double rho = 0.0;
  double reference = 0.0;
  std::string reason;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// First failures in enumeration order (capped).
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return failures == 0; }
  void fail(Counterexample c);
  void merge(VerifyReport other);
};

inline constexpr std::size_t kMaxCounterexamples = 20;

std::string describe(const Graph& g);

/// rho(A_alpha(B(Delta-1,k))) for k = 2..k_max: strictly below bound_t1 and
/// increasing for alpha < 1, equal to Delta at alpha = 1 (k >= 3). Also
/// requires gap(k_max) < gap_ratio * gap(3) when gap_ratio > 0.
VerifyReport verify_t1_tightness(const std::vector<int>& deltas, const std::vector<double>& alphas, int k_max,
                                 double gap_ratio = 0.0);

/// Every tree of order 2..n_max (labeled Prüfer enumeration up to order 8,
/// isomorphism classes above): rho <= bound_t2 + tol, tight only for stars.
VerifyReport verify_t2_exhaustive(int n_max, const std::vector<double>& alphas,
                                  Execution exec = Execution::parallel);

enum class GraphClass { connected, trees };

/// Every connected graph (n <= 7) or tree (n <= 10) of order 2..n_max:
/// rho >= rho(P_n) - tol, near-equality only for paths.
VerifyReport verify_t3_exhaustive(int n_max, const std::vector<double>& alphas,
                                  GraphClass cls = GraphClass::connected,
                                  Execution exec = Execution::parallel);

/// Path closed forms for n = 2..n_max and the path sandwich on `alphas`,
/// with the equality pattern of the upper and lower path bounds.
VerifyReport verify_paths(int n_max, const std::vector<double>& alphas);

/// Perron vector of A_alpha(P_n) increases strictly toward the middle and
/// is symmetric about it.
VerifyReport verify_path_perron(int n_min, int n_max, const std::vector<double>& alphas);

/// Each Smith fixture has rho(A) = 2.
VerifyReport verify_smith();

/// Reduction spectrum equals the dense-oracle spectrum of the built tree.
VerifyReport verify_reduction(const std::vector<GeneralizedBetheSpec>& specs, const std::vector<double>& alphas,
                              double tol = 1e-8);

/// Bethe sandwich for d in `ds`, k = 2..k_max, plus the cosine-gap estimate
/// cos(pi/(k+1)) - cos(pi/k) < 10/k^3 for k = 2..cos_k_max.
VerifyReport verify_bethe_bounds(const std::vector<int>& ds, int k_max, const std::vector<double>& alphas,
                                 int cos_k_max = 10000);

struct Fixture {
  std::string name;
  Graph graph;
};

/// Paths, stars, cycles, complete graphs, Smith graphs, seeded random trees
/// (order <= 40) and (generalized) Bethe trees.
std::vector<Fixture> standard_fixtures(std::uint64_t seed = 20170104);

/// General-graph bounds on every fixture: all rows hold, "in" is tight for
/// regular fixtures at every alpha and for connected irregular ones only at
/// alpha = 1/2, rho = Delta only for alpha = 1 or regular graphs.
VerifyReport verify_sandwich(const std::vector<Fixture>& fixtures, const std::vector<double>& alphas,
                             Execution exec = Execution::parallel);

/// 0, 1/steps, ..., 1 computed as i/steps.
std::vector<double> alpha_grid(int steps);

}  // namespace aspec
