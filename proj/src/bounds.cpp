#include "aspec/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "aspec/eigen.hpp"
#include "aspec/enumerate.hpp"
#include "aspec/error.hpp"

namespace aspec {

double bound_t1(double alpha, int delta) {
  if (delta < 2) throw ArgumentError("bound_t1 requires Delta >= 2");
  return alpha * delta + 2.0 * (1.0 - alpha) * std::sqrt(static_cast<double>(delta - 1));
}

double bound_t2(double alpha, int n) {
  if (n < 2) throw ArgumentError("bound_t2 requires n >= 2");
  const double nn = n;
  const double disc = alpha * alpha * nn * nn + 4.0 * (nn - 1.0) * (1.0 - 2.0 * alpha);
  return 0.5 * (alpha * nn + std::sqrt(std::max(0.0, disc)));
}

Interval path_bounds(double alpha, int n) {
  if (n < 2) throw ArgumentError("path_bounds requires n >= 2");
  using std::numbers::pi;
  const double c_n = std::cos(pi / n);
  const double c_n1 = std::cos(pi / (n + 1));
  Interval iv;
  iv.upper = alpha < 0.5 ? 2.0 * alpha + 2.0 * (1.0 - alpha) * c_n1 : 2.0 * alpha + 2.0 * (1.0 - alpha) * c_n;
  iv.lower = alpha <= 0.5 ? 2.0 * alpha + 2.0 * (1.0 - alpha) * c_n
                          : 2.0 * alpha + 2.0 * alpha * c_n - 2.0 * (2.0 * alpha - 1.0) * c_n1;
  return iv;
}

Interval bethe_bounds(double alpha, int d, int k) {
  if (d < 2 || k < 2) throw ArgumentError("bethe_bounds requires d >= 2 and k >= 2");
  using std::numbers::pi;
  const double sd = std::sqrt(static_cast<double>(d));
  const double base = alpha * (d + 1);
  const double k3 = static_cast<double>(k) * k * k;
  return {base + 2.0 * (1.0 - alpha) * sd * std::cos(pi / k) - 20.0 * alpha * sd / k3,
          base + 2.0 * (1.0 - alpha) * sd * std::cos(pi / (k + 1))};
}

const char* side_name(Side s) { return s == Side::upper ? "upper" : "lower"; }

bool BoundEntry::holds(double rho, double tol) const {
  return side == Side::upper ? value >= rho - tol : value <= rho + tol;
}

const BoundEntry& BoundsReport::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw ArgumentError("no bound row named '" + name + "'");
}

bool BoundsReport::consistent(double tol) const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const BoundEntry& e) { return !e.applicable || e.holds(rho_alpha, tol); });
}

BoundsReport sandwich_bounds(const Graph& g, double alpha, std::string name) {
  const AlphaParam a(alpha);
  BoundsReport r;
  r.graph = std::move(name);
  r.n = g.order();
  r.alpha = alpha;
  r.rho_alpha = spectral_radius(g, a);
  r.rho_complement = spectral_radius(g, AlphaParam(1.0 - alpha));
  r.rho_A = spectral_radius(g, AlphaParam(0.0));
  r.rho_Q = spectral_radius_Q(g);
  r.delta = g.max_degree();

  const double delta = r.delta;
  const bool low = alpha <= 0.5;
  const bool high = alpha >= 0.5;
  auto add = [&](std::string row, Side side, double value, bool applicable) {
    BoundEntry e;
    e.name = std::move(row);
    e.side = side;
    e.value = value;
    e.slack = std::abs(value - r.rho_alpha);
    e.applicable = applicable;
    e.tight = applicable && e.slack <= kTightTol;
    r.entries.push_back(std::move(e));
  };
  add("ub1", Side::upper, alpha * r.rho_Q + (1.0 - 2.0 * alpha) * r.rho_A, low);
  add("ub2", Side::upper, (1.0 - alpha) * r.rho_Q + (2.0 * alpha - 1.0) * delta, high);
  add("lb1", Side::lower, (1.0 - alpha) * r.rho_Q + (2.0 * alpha - 1.0) * delta, low);
  add("lb2", Side::lower, alpha * r.rho_Q + (1.0 - 2.0 * alpha) * r.rho_A, high);
  add("in", Side::lower, r.rho_Q - r.rho_complement, true);
  add("bo_lower", Side::lower, r.rho_A, true);
  add("bo_upper", Side::upper, delta, true);
  return r;
}

void VerifyReport::fail(Counterexample c) {
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(c));
}

void VerifyReport::merge(VerifyReport other) {
  checks += other.checks;
  failures += other.failures;
  for (auto& c : other.counterexamples) {
    if (counterexamples.size() >= kMaxCounterexamples) break;
    counterexamples.push_back(std::move(c));
  }
  for (auto& n : other.notes) notes.push_back(std::move(n));
  seconds += other.seconds;
}

std::string describe(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::vector<double> alpha_grid(int steps) {
  if (steps < 1) throw ArgumentError("alpha grid needs at least one step");
  std::vector<double> g(steps + 1);
  for (int i = 0; i <= steps; ++i) g[i] = static_cast<double>(i) / steps;
  return g;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Failures tagged with their enumeration key so that a parallel run reports
// the same first counterexamples as a serial one.
struct KeyedFailures {
  std::vector<std::pair<std::uint64_t, Counterexample>> items;
  std::uint64_t count = 0;
  std::uint64_t checks = 0;

  void add(std::uint64_t key, Counterexample c) {
    ++count;
    if (items.size() < kMaxCounterexamples) items.emplace_back(key, std::move(c));
  }
  void merge(KeyedFailures&& o) {
    count += o.count;
    checks += o.checks;
    for (auto& it : o.items) items.push_back(std::move(it));
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (items.size() > kMaxCounterexamples) items.resize(kMaxCounterexamples);
  }
  void flush_into(VerifyReport& r) {
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    r.checks += checks;
    r.failures += count;
    for (auto& it : items) {
      if (r.counterexamples.size() >= kMaxCounterexamples) break;
      r.counterexamples.push_back(std::move(it.second));
    }
  }
};

// Per-alpha extremum of the non-extremal instances, plus failures.
struct ExtremeAccumulator {
  KeyedFailures failures;
  std::vector<double> extreme;
  std::vector<std::uint64_t> instances;
  bool take_max = true;

  ExtremeAccumulator(std::size_t alphas, bool maximize)
      : extreme(alphas, maximize ? -std::numeric_limits<double>::infinity()
                                 : std::numeric_limits<double>::infinity()),
        instances(alphas, 0),
        take_max(maximize) {}

  void observe(std::size_t a, double v) {
    extreme[a] = take_max ? std::max(extreme[a], v) : std::min(extreme[a], v);
  }
  void merge(ExtremeAccumulator&& o) {
    failures.merge(std::move(o.failures));
    for (std::size_t a = 0; a < extreme.size(); ++a) {
      observe(a, o.extreme[a]);
      instances[a] += o.instances[a];
    }
  }
};

// Runs body(index, local) over [0, count). The parallel path gives every
// thread its own accumulator and merges them; merges are order independent.
template <typename Local, typename Body>
Local reduce_range(std::uint64_t count, Execution exec, const Local& identity, Body&& body) {
  Local total = identity;
  if (exec == Execution::serial) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, total);
    return total;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    Local local = identity;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i), local);
#pragma omp critical(aspec_reduce_range)
    total.merge(std::move(local));
  }
  return total;
}

// Trees of order n: labeled (Prüfer) up to order 8, isomorphism classes above.
constexpr int kLabeledTreeMaxOrder = 8;

struct TreeSource {
  int n;
  std::vector<Graph> classes;

  explicit TreeSource(int order) : n(order) {
    if (n > kLabeledTreeMaxOrder) classes = free_trees(n);
  }
  bool labeled() const { return n <= kLabeledTreeMaxOrder; }
  std::uint64_t size() const { return labeled() ? labeled_tree_count(n) : classes.size(); }
  Graph get(std::uint64_t i) const { return labeled() ? labeled_tree(n, i) : classes[i]; }
};

std::vector<double> radii(const Graph& g, const std::vector<double>& alphas) {
  std::vector<double> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(spectral_radius(g, AlphaParam(a)));
  return out;
}

}  // namespace

VerifyReport verify_t1_tightness(const std::vector<int>& deltas, const std::vector<double>& alphas, int k_max,
                                 double gap_ratio) {
  const auto start = Clock::now();
  if (k_max < 3) throw ArgumentError("verify_t1_tightness requires k_max >= 3");
  VerifyReport r;
  r.suite = "t1";
  for (int delta : deltas) {
    if (delta < 3) throw ArgumentError("verify_t1_tightness requires Delta >= 3");
    for (double alpha : alphas) {
      const AlphaParam a(alpha);
      const double bound = bound_t1(alpha, delta);
      std::vector<double> rho(k_max + 1, 0.0);
      for (int k = 2; k <= k_max; ++k) {
        const auto spec = bethe_spec(delta - 1, k);
        rho[k] = bethe_spectral_radius(spec, a);
        ++r.checks;
        const std::string name = "B(" + std::to_string(delta - 1) + "," + std::to_string(k) + ")";
        auto cex = [&](std::string why, double reference) {
          r.fail({name, static_cast<int>(spec.order()), alpha, rho[k], reference, std::move(why)});
        };
        if (a.beta() > 0.0) {
          if (!(rho[k] < bound)) cex("not strictly below alpha*Delta + 2(1-alpha)sqrt(Delta-1)", bound);
          if (k > 2 && !(rho[k] > rho[k - 1])) cex("spectral radius not increasing in k", rho[k - 1]);
        } else {
          const double expected = k == 2 ? delta - 1 : delta;
          if (std::abs(rho[k] - expected) > kTightTol) cex("alpha=1 radius differs from max degree", expected);
        }
      }
      if (a.beta() > 0.0) {
        const double gap3 = bound - rho[3];
        const double gapk = bound - rho[k_max];
        r.notes.push_back(fmt("Delta=%d alpha=%.12g: gap(k=3)=%.6e gap(k=%d)=%.6e ratio=%.4f", delta, alpha, gap3,
                              k_max, gapk, gapk / gap3));
        if (gap_ratio > 0.0) {
          ++r.checks;
          if (!(gapk < gap_ratio * gap3)) {
            r.fail({"B(" + std::to_string(delta - 1) + "," + std::to_string(k_max) + ")", 0, alpha, rho[k_max],
                    bound, fmt("gap(k_max)/gap(3) = %.4f not below %.4f", gapk / gap3, gap_ratio)});
          }
        }
      }
    }
  }
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_t2_exhaustive(int n_max, const std::vector<double>& alphas, Execution exec) {
  const auto start = Clock::now();
  if (n_max < 2 || n_max > 10) throw ArgumentError("verify_t2_exhaustive supports 2 <= n_max <= 10");
  VerifyReport r;
  r.suite = "t2";
  const std::size_t na = alphas.size();
  for (int n = 2; n <= n_max; ++n) {
    const TreeSource trees(n);
    std::vector<double> bound(na);
    for (std::size_t a = 0; a < na; ++a) bound[a] = bound_t2(alphas[a], n);

    auto acc = reduce_range(trees.size(), exec, ExtremeAccumulator(na, true),
                            [&](std::uint64_t i, ExtremeAccumulator& local) {
      const Graph t = trees.get(i);
      const bool is_star = t.is_star();
      std::vector<double> rho;
      try {
        rho = radii(t, alphas);
      } catch (const Error& e) {
        local.failures.add(i * na, {describe(t), n, alphas[0], 0.0, 0.0, std::string("solver error: ") + e.what()});
        return;
      }
      for (std::size_t a = 0; a < na; ++a) {
        ++local.failures.checks;
        const double slack = bound[a] - rho[a];
        const std::uint64_t key = i * na + a;
        if (slack < -kTightTol) {
          local.failures.add(key, {describe(t), n, alphas[a], rho[a], bound[a], "exceeds star bound"});
        } else if (is_star && std::abs(slack) > kTightTol) {
          local.failures.add(key, {describe(t), n, alphas[a], rho[a], bound[a], "star does not attain bound"});
        } else if (!is_star && slack <= kTightTol) {
          local.failures.add(key, {describe(t), n, alphas[a], rho[a], bound[a], "non-star attains star bound"});
        }
        if (!is_star) {
          local.observe(a, rho[a]);
          ++local.instances[a];
        }
      }
    });
    acc.failures.flush_into(r);
    for (std::size_t a = 0; a < na; ++a) {
      if (acc.instances[a] == 0) continue;
      r.notes.push_back(fmt("n=%d alpha=%.12g: %llu %s trees, max non-star rho=%.12g, margin=%.6e", n, alphas[a],
                            static_cast<unsigned long long>(trees.size()), trees.labeled() ? "labeled" : "unlabeled",
                            acc.extreme[a], bound[a] - acc.extreme[a]));
    }
  }
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_t3_exhaustive(int n_max, const std::vector<double>& alphas, GraphClass cls, Execution exec) {
  const auto start = Clock::now();
  if (n_max < 2) throw ArgumentError("verify_t3_exhaustive requires n_max >= 2");
  if (cls == GraphClass::connected && n_max > 7) throw ArgumentError("connected-graph enumeration capped at n = 7");
  if (cls == GraphClass::trees && n_max > 10) throw ArgumentError("tree enumeration capped at n = 10");
  VerifyReport r;
  r.suite = cls == GraphClass::connected ? "t3" : "t3-trees";
  const std::size_t na = alphas.size();

  for (int n = 2; n <= n_max; ++n) {
    const auto path_rho = radii(path(n), alphas);
    auto check = [&](const Graph& g, std::uint64_t i, ExtremeAccumulator& local) {
      const bool is_path = g.is_path();
      std::vector<double> rho;
      try {
        rho = radii(g, alphas);
      } catch (const Error& e) {
        local.failures.add(i * na, {describe(g), n, alphas[0], 0.0, 0.0, std::string("solver error: ") + e.what()});
        return;
      }
      for (std::size_t a = 0; a < na; ++a) {
        ++local.failures.checks;
        const double excess = rho[a] - path_rho[a];
        const std::uint64_t key = i * na + a;
        if (excess < -kTightTol) {
          local.failures.add(key, {describe(g), n, alphas[a], rho[a], path_rho[a], "below the path"});
        } else if (!is_path && excess <= kTightTol) {
          local.failures.add(key, {describe(g), n, alphas[a], rho[a], path_rho[a], "non-path attains path minimum"});
        } else if (is_path && std::abs(excess) > kTightTol) {
          local.failures.add(key, {describe(g), n, alphas[a], rho[a], path_rho[a], "relabeled path differs from P_n"});
        }
        if (!is_path) {
          local.observe(a, excess);
          ++local.instances[a];
        }
      }
    };

    std::uint64_t enumerated = 0;
    ExtremeAccumulator acc(na, false);
    if (cls == GraphClass::connected) {
      const auto all = complete_edges(n);
      enumerated = std::uint64_t{1} << all.size();
      acc = reduce_range(enumerated, exec, ExtremeAccumulator(na, false),
                         [&](std::uint64_t mask, ExtremeAccumulator& local) {
        if (!mask_is_connected(n, mask, all)) return;
        check(graph_from_mask(n, mask, all), mask, local);
      });
    } else {
      const TreeSource trees(n);
      enumerated = trees.size();
      acc = reduce_range(enumerated, exec, ExtremeAccumulator(na, false),
                         [&](std::uint64_t i, ExtremeAccumulator& local) { check(trees.get(i), i, local); });
    }
    acc.failures.flush_into(r);
    for (std::size_t a = 0; a < na; ++a) {
      if (acc.instances[a] == 0) continue;
      r.notes.push_back(fmt("n=%d alpha=%.12g: %llu non-path graphs, min rho - rho(P_n)=%.6e", n, alphas[a],
                            static_cast<unsigned long long>(acc.instances[a]), acc.extreme[a]));
    }
  }
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_paths(int n_max, const std::vector<double>& alphas) {
  const auto start = Clock::now();
  if (n_max < 2) throw ArgumentError("verify_paths requires n_max >= 2");
  using std::numbers::pi;
  VerifyReport r;
  r.suite = "paths";
  constexpr double kStrictSlack = 1e-6;
  double min_upper_strict = std::numeric_limits<double>::infinity();
  double min_lower_strict = std::numeric_limits<double>::infinity();

  for (int n = 2; n <= n_max; ++n) {
    const Graph p = path(n);
    const std::string name = "P_" + std::to_string(n);
    const double rho_a = spectral_radius(p, AlphaParam(0.0));
    const double rho_q = spectral_radius_Q(p);
    const double want_a = 2.0 * std::cos(pi / (n + 1));
    const double want_q = 2.0 + 2.0 * std::cos(pi / n);
    r.checks += 2;
    if (std::abs(rho_a - want_a) > kTightTol) r.fail({name, n, 0.0, rho_a, want_a, "rho(A(P_n)) != 2cos(pi/(n+1))"});
    if (std::abs(rho_q - want_q) > kTightTol) r.fail({name, n, 0.5, rho_q, want_q, "rho(Q(P_n)) != 2+2cos(pi/n)"});

    for (double alpha : alphas) {
      const double rho = spectral_radius(p, AlphaParam(alpha));
      const Interval iv = path_bounds(alpha, n);
      const double up_slack = iv.upper - rho;
      const double lo_slack = rho - iv.lower;
      r.checks += 2;
      if (up_slack < -kTightTol) r.fail({name, n, alpha, rho, iv.upper, "above path upper bound"});
      if (lo_slack < -kTightTol) r.fail({name, n, alpha, rho, iv.lower, "below path lower bound"});
      // P_2 is regular; the equality pattern needs an irregular path.
      if (n < 3) continue;
      const bool upper_equality = alpha == 0.0 || alpha == 0.5 || alpha == 1.0;
      const bool lower_equality = alpha == 0.5;
      if (upper_equality) {
        ++r.checks;
        if (std::abs(up_slack) > kTightTol) r.fail({name, n, alpha, rho, iv.upper, "upper bound not tight"});
      } else {
        min_upper_strict = std::min(min_upper_strict, up_slack);
      }
      if (lower_equality) {
        ++r.checks;
        if (std::abs(lo_slack) > kTightTol) r.fail({name, n, alpha, rho, iv.lower, "lower bound not tight"});
      } else {
        min_lower_strict = std::min(min_lower_strict, lo_slack);
      }
      if (n >= 4 && (alpha == 0.25 || alpha == 0.75)) {
        r.checks += 2;
        if (up_slack < kStrictSlack) r.fail({name, n, alpha, rho, iv.upper, "upper slack below 1e-6"});
        if (lo_slack < kStrictSlack) r.fail({name, n, alpha, rho, iv.lower, "lower slack below 1e-6"});
      }
    }
  }
  r.notes.push_back(fmt("min upper slack away from alpha in {0,1/2,1}: %.6e", min_upper_strict));
  r.notes.push_back(fmt("min lower slack away from alpha = 1/2: %.6e", min_lower_strict));
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_path_perron(int n_min, int n_max, const std::vector<double>& alphas) {
  const auto start = Clock::now();
  if (n_min < 2 || n_max < n_min) throw ArgumentError("verify_path_perron: invalid order range");
  VerifyReport r;
  r.suite = "path-perron";
  constexpr double kIncreaseMargin = 1e-12;
  constexpr double kMirrorTol = 1e-10;
  double min_step = std::numeric_limits<double>::infinity();
  double max_mirror = 0.0;
  for (double alpha : alphas) {
    if (alpha >= 1.0) {
      r.notes.push_back("alpha=1 skipped: the Perron vector of D(P_n) is not unique");
      continue;
    }
    for (int n = n_min; n <= n_max; ++n) {
      const auto pp = perron(assemble_alpha_matrix(path(n), AlphaParam(alpha)));
      const auto& x = pp.vector;
      const std::string name = "P_" + std::to_string(n);
      const int half_up = (n + 1) / 2;
      // 1-based i = 1..ceil(n/2)-1  <=>  0-based x[i-1] < x[i]
      for (int i = 1; i <= half_up - 1; ++i) {
        ++r.checks;
        const double step = x[i] - x[i - 1];
        min_step = std::min(min_step, step);
        if (!(step > kIncreaseMargin)) {
          r.fail({name, n, alpha, pp.rho, step, fmt("x_%d < x_%d violated (step %.3e)", i, i + 1, step)});
        }
      }
      if (n % 2 == 0) {
        ++r.checks;
        const double diff = std::abs(x[n / 2 - 1] - x[n / 2]);
        max_mirror = std::max(max_mirror, diff);
        if (diff > kMirrorTol) r.fail({name, n, alpha, pp.rho, diff, "x_{n/2} != x_{n/2+1}"});
      }
    }
  }
  r.notes.push_back(fmt("smallest increase toward the middle: %.6e", min_step));
  r.notes.push_back(fmt("largest |x_{n/2} - x_{n/2+1}|: %.3e", max_mirror));
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_smith() {
  const auto start = Clock::now();
  VerifyReport r;
  r.suite = "smith";
  const std::vector<Fixture> fixtures{{"C_8", cycle(8)},   {"Y_7", smith_Y(7)},   {"K_1,4", smith_K14()},
                                      {"F_7", smith_F7()}, {"F_8", smith_F8()}, {"F_9", smith_F9()}};
  for (const auto& f : fixtures) {
    const double by_perron = spectral_radius(f.graph, AlphaParam(0.0));
    const double by_jacobi = max_eigenvalue(assemble_adjacency(f.graph));
    r.checks += 2;
    if (std::abs(by_perron - 2.0) > kTightTol) r.fail({f.name, f.graph.order(), 0.0, by_perron, 2.0, "Perron rho != 2"});
    if (std::abs(by_jacobi - 2.0) > kTightTol) r.fail({f.name, f.graph.order(), 0.0, by_jacobi, 2.0, "Jacobi rho != 2"});
    r.notes.push_back(fmt("%s: rho(A)=%.15g (|rho-2|=%.2e)", f.name.c_str(), by_perron, std::abs(by_perron - 2.0)));
  }
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_reduction(const std::vector<GeneralizedBetheSpec>& specs, const std::vector<double>& alphas,
                              double tol) {
  const auto start = Clock::now();
  VerifyReport r;
  r.suite = "reduction";
  for (const auto& spec : specs) {
    const Graph tree = build_tree(spec);
    double worst = 0.0;
    for (double alpha : alphas) {
      const AlphaParam a(alpha);
      const auto reduced = bethe_spectrum(spec, a).expanded();
      const auto dense = dense_eigen_oracle(assemble_alpha_matrix(tree, a)).values;
      ++r.checks;
      if (reduced.size() != dense.size()) {
        r.fail({spec.to_string(), tree.order(), alpha, static_cast<double>(reduced.size()),
                static_cast<double>(dense.size()), "multiplicities do not sum to the order"});
        continue;
      }
      double dev = 0.0;
      for (std::size_t i = 0; i < dense.size(); ++i) dev = std::max(dev, std::abs(reduced[i] - dense[i]));
      worst = std::max(worst, dev);
      if (dev > tol) r.fail({spec.to_string(), tree.order(), alpha, dev, tol, "reduction deviates from dense oracle"});
    }
    r.notes.push_back(fmt("(%s) order %lld: max deviation %.3e", spec.to_string().c_str(),
                          static_cast<long long>(spec.order()), worst));
  }
  r.seconds = seconds_since(start);
  return r;
}

VerifyReport verify_bethe_bounds(const std::vector<int>& ds, int k_max, const std::vector<double>& alphas,
                                 int cos_k_max) {
  const auto start = Clock::now();
  using std::numbers::pi;
  VerifyReport r;
  r.suite = "bethe";
  double min_lower_margin = std::numeric_limits<double>::infinity();
  for (int d : ds) {
    for (int k = 2; k <= k_max; ++k) {
      const auto spec = bethe_spec(d, k);
      const std::string name = "B(" + std::to_string(d) + "," + std::to_string(k) + ")";
      for (double alpha : alphas) {
        const double rho = bethe_spectral_radius(spec, AlphaParam(alpha));
        const Interval iv = bethe_bounds(alpha, d, k);
        r.checks += 2;
        if (rho > iv.upper + kTightTol) r.fail({name, static_cast<int>(spec.order()), alpha, rho, iv.upper, "above upper Bethe bound"});
        if (rho < iv.lower - kTightTol) r.fail({name, static_cast<int>(spec.order()), alpha, rho, iv.lower, "below lower Bethe bound"});
        min_lower_margin = std::min(min_lower_margin, rho - iv.lower);
      }
    }
  }
  r.notes.push_back(fmt("min rho - lower Bethe bound: %.6e", min_lower_margin));
  double worst_ratio = 0.0;
  for (int k = 2; k <= cos_k_max; ++k) {
    ++r.checks;
    const double gap = std::cos(pi / (k + 1)) - std::cos(pi / k);
    const double cap = 10.0 / (static_cast<double>(k) * k * k);
    worst_ratio = std::max(worst_ratio, gap / cap);
    if (!(gap < cap)) r.fail({"cos-gap", k, 0.0, gap, cap, "cos(pi/(k+1)) - cos(pi/k) >= 10/k^3"});
  }
  r.notes.push_back(fmt("max [cos(pi/(k+1)) - cos(pi/k)] / (10/k^3) for k <= %d: %.6f", cos_k_max, worst_ratio));
  r.seconds = seconds_since(start);
  return r;
}

std::vector<Fixture> standard_fixtures(std::uint64_t seed) {
  std::vector<Fixture> f;
  for (int n : {2, 3, 4, 5, 6, 7, 10, 15, 20}) f.push_back({"P_" + std::to_string(n), path(n)});
  for (int n : {3, 4, 5, 6, 8}) f.push_back({"K_1," + std::to_string(n - 1), star(n)});
  for (int n : {3, 4, 5, 6, 8, 11}) f.push_back({"C_" + std::to_string(n), cycle(n)});
  for (int n : {4, 5}) f.push_back({"K_" + std::to_string(n), complete(n)});
  f.push_back({"Y_7", smith_Y(7)});
  f.push_back({"Y_10", smith_Y(10)});
  f.push_back({"F_7", smith_F7()});
  f.push_back({"F_8", smith_F8()});
  f.push_back({"F_9", smith_F9()});
  f.push_back({"B(2,3)", build_tree(bethe_spec(2, 3))});
  f.push_back({"B(2,4)", build_tree(bethe_spec(2, 4))});
  f.push_back({"B(3,3)", build_tree(bethe_spec(3, 3))});
  f.push_back({"B(3,4)", build_tree(bethe_spec(3, 4))});
  f.push_back({"GB(1,3,3,4,3)", build_tree(spec_from_degrees({1, 3, 3, 4, 3}))});
  f.push_back({"GB(1,2,3,2)", build_tree(spec_from_degrees({1, 2, 3, 2}))});

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 16; ++i) {
    const int n = 5 + static_cast<int>(rng() % 36);  // 5..40
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    f.push_back({"T" + std::to_string(i) + "_" + std::to_string(n), tree_from_pruefer(seq)});
  }
  return f;
}

VerifyReport verify_sandwich(const std::vector<Fixture>& fixtures, const std::vector<double>& alphas, Execution exec) {
  const auto start = Clock::now();
  const std::size_t na = alphas.size();
  const std::uint64_t total = fixtures.size() * na;

  struct Local {
    KeyedFailures failures;
    void merge(Local&& o) { failures.merge(std::move(o.failures)); }
  };
  Local acc = reduce_range(total, exec, Local{}, [&](std::uint64_t idx, Local& local) {
    const auto& fx = fixtures[idx / na];
    const double alpha = alphas[idx % na];
    const Graph& g = fx.graph;
    auto cex = [&](double rho, double ref, std::string why) {
      local.failures.add(idx, {fx.name, g.order(), alpha, rho, ref, std::move(why)});
    };
    BoundsReport rep;
    try {
      rep = sandwich_bounds(g, alpha, fx.name);
    } catch (const Error& e) {
      cex(0.0, 0.0, std::string("solver error: ") + e.what());
      return;
    }
    const bool regular = g.is_regular();
    const bool connected = g.is_connected();
    for (const auto& e : rep.entries) {
      if (!e.applicable) continue;
      ++local.failures.checks;
      if (!e.holds(rep.rho_alpha)) cex(rep.rho_alpha, e.value, e.name + " violated on the " + side_name(e.side) + " side");
    }
    const auto& in = rep.entry("in");
    ++local.failures.checks;
    if (regular && !in.tight) cex(rep.rho_alpha, in.value, "regular graph without equality in rho(A_a)+rho(A_1-a) >= rho(Q)");
    if (connected && !regular) {
      const bool half = alpha == 0.5;
      if (half && !in.tight) cex(rep.rho_alpha, in.value, "irregular graph without equality at alpha=1/2");
      if (!half && in.tight) cex(rep.rho_alpha, in.value, "irregular graph with equality at alpha != 1/2");
    }
    const auto& bo = rep.entry("bo_upper");
    ++local.failures.checks;
    if (connected && bo.tight && !(alpha == 1.0 || regular)) cex(rep.rho_alpha, bo.value, "rho = Delta for irregular graph with alpha < 1");
    if ((alpha == 1.0 || regular) && !bo.tight) cex(rep.rho_alpha, bo.value, "rho != Delta for regular graph or alpha = 1");
    if (alpha == 0.5) {
      ++local.failures.checks;
      const auto& ub1 = rep.entry("ub1");
      const auto& lb1 = rep.entry("lb1");
      if (!(ub1.tight && lb1.tight)) cex(rep.rho_alpha, ub1.value, "ub1/lb1 not tight at alpha = 1/2");
    }
  });

  VerifyReport r;
  r.suite = "sandwich";
  acc.failures.flush_into(r);
  r.notes.push_back(fmt("%zu fixtures x %zu alphas", fixtures.size(), na));
  r.seconds = seconds_since(start);
  return r;
}

}  // namespace aspec
