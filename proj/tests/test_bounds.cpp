#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numbers>

#include "aspec/bethe.hpp"
#include "aspec/bounds.hpp"
#include "aspec/eigen.hpp"
#include "aspec/enumerate.hpp"
#include "aspec/error.hpp"

using namespace aspec;
using std::numbers::pi;

TEST_SUITE("bounds") {
  TEST_CASE("closed-form bounds") {
    CHECK(bound_t1(0.0, 4) == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(bound_t1(0.5, 5) == doctest::Approx((5.0 + 2.0 * 2.0) / 2.0));
    CHECK(bound_t1(1.0, 7) == 7.0);
    CHECK_THROWS_AS(bound_t1(0.5, 1), ArgumentError);

    CHECK(bound_t2(0.0, 4) == doctest::Approx(std::sqrt(3.0)));
    for (int n = 2; n <= 10; ++n) CHECK(bound_t2(1.0, n) == doctest::Approx(n - 1));
    for (int n = 3; n <= 10; ++n) {
      CHECK(std::abs(bound_t2(0.5, n) - spectral_radius_Q(star(n)) / 2.0) <= 1e-9);
      CHECK(std::abs(bound_t2(0.0, n) - spectral_radius(star(n), AlphaParam(0.0))) <= 1e-9);
    }
    CHECK_THROWS_AS(bound_t2(0.5, 1), ArgumentError);
  }

  TEST_CASE("path bounds") {
    for (int n = 2; n <= 20; ++n) {
      const Interval half = path_bounds(0.5, n);
      CHECK(half.lower == doctest::Approx(1.0 + std::cos(pi / n)));
      CHECK(half.upper == doctest::Approx(1.0 + std::cos(pi / n)));
      CHECK(path_bounds(0.0, n).upper == doctest::Approx(2.0 * std::cos(pi / (n + 1))));
      if (n >= 3) CHECK(path_bounds(1.0, n).upper == doctest::Approx(2.0));
    }
  }

  TEST_CASE("Bethe bounds") {
    for (int d = 2; d <= 4; ++d) {
      for (int k = 2; k <= 8; ++k) {
        const Interval iv = bethe_bounds(0.0, d, k);
        CHECK(iv.upper == doctest::Approx(2.0 * std::sqrt(d) * std::cos(pi / (k + 1))));
        CHECK(iv.lower == doctest::Approx(2.0 * std::sqrt(d) * std::cos(pi / k)));
        CHECK(bethe_bounds(1.0, d, k).upper == doctest::Approx(d + 1));
      }
    }
    const double rho = bethe_spectral_radius(bethe_spec(3, 4), AlphaParam(0.5));
    const Interval iv = bethe_bounds(0.5, 3, 4);
    CHECK(iv.lower < rho);
    CHECK(rho <= iv.upper + 1e-12);
  }

  TEST_CASE("regular graphs make every row tight") {
    for (const auto& g : {cycle(6), complete(5)}) {
      for (double a : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        const auto r = sandwich_bounds(g, a);
        CHECK(r.consistent());
        for (const auto& e : r.entries) {
          if (e.applicable) CHECK_MESSAGE(e.tight, e.name << " at alpha " << a);
        }
      }
    }
  }

  TEST_CASE("alpha = 1/2 makes ub1 and lb1 coincide") {
    for (const auto& g : {path(7), star(6), smith_F8(), build_tree(bethe_spec(2, 4))}) {
      const auto r = sandwich_bounds(g, 0.5);
      CHECK(r.entry("ub1").tight);
      CHECK(r.entry("lb1").tight);
      CHECK(r.entry("ub1").value == doctest::Approx(r.rho_Q / 2.0));
      CHECK(r.entry("in").tight);
    }
  }

  TEST_CASE("irregular graphs inside (0,1/2) keep ub1 strict") {
    for (const auto& g : {path(7), star(6), smith_F8()}) {
      for (double a : {0.1, 0.25, 0.4}) {
        const auto r = sandwich_bounds(g, a);
        CHECK(r.consistent());
        CHECK_FALSE(r.entry("ub1").tight);
        CHECK_FALSE(r.entry("in").tight);
        CHECK_FALSE(r.entry("bo_upper").tight);
      }
      CHECK(sandwich_bounds(g, 1.0).entry("bo_upper").tight);
      CHECK(sandwich_bounds(g, 0.0).entry("ub1").tight);
    }
  }

  TEST_CASE("row applicability") {
    const auto low = sandwich_bounds(path(5), 0.3);
    CHECK(low.entry("ub1").applicable);
    CHECK_FALSE(low.entry("ub2").applicable);
    const auto high = sandwich_bounds(path(5), 0.7);
    CHECK_FALSE(high.entry("lb1").applicable);
    CHECK(high.entry("lb2").applicable);
    CHECK_THROWS_AS(low.entry("nope"), ArgumentError);
  }

  TEST_CASE("enumeration helpers") {
    CHECK(labeled_tree_count(4) == 16);
    CHECK(labeled_tree_count(8) == 262144);
    int stars = 0;
    for (std::uint64_t i = 0; i < labeled_tree_count(5); ++i) {
      const Graph t = labeled_tree(5, i);
      CHECK(t.is_tree());
      stars += t.is_star();
    }
    CHECK(stars == 5);
    CHECK(free_trees(4).size() == 2);
    CHECK(free_trees(10).size() == 106);
    CHECK(tree_canonical_form(path(5)) == tree_canonical_form(Graph(5, {{3, 0}, {0, 4}, {4, 1}, {1, 2}})));
    CHECK(tree_canonical_form(path(5)) != tree_canonical_form(star(5)));

    int connected = 0;
    const auto all = complete_edges(4);
    for (std::uint64_t m = 0; m < (1u << all.size()); ++m) connected += mask_is_connected(4, m, all);
    CHECK(connected == 38);
  }

  TEST_CASE("t2 verifier on small orders") {
    const auto r = verify_t2_exhaustive(6, {0.0, 0.3, 0.5, 1.0});
    CHECK(r.passed());
    CHECK(r.checks > 0);
  }

  TEST_CASE("t3 verifier below alpha = 1") {
    const auto r = verify_t3_exhaustive(5, {0.0, 0.25, 0.5, 0.75, 0.95});
    CHECK(r.passed());
    const auto trees = verify_t3_exhaustive(9, {0.5}, GraphClass::trees);
    CHECK(trees.passed());
  }

  TEST_CASE("t3 at alpha = 1 ties cycles with paths") {
    const auto r = verify_t3_exhaustive(4, {1.0});
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(r.counterexamples.front().rho == doctest::Approx(2.0));
  }

  TEST_CASE("serial and parallel verifiers produce identical reports") {
    omp_set_num_threads(4);  // oversubscribe so single-core hosts still interleave
    const std::vector<double> alphas{0.0, 0.5, 1.0};
    const auto fixtures = standard_fixtures();
    const auto grid = alpha_grid(4);
    auto same = [](const VerifyReport& a, const VerifyReport& b) {
      CHECK(a.checks == b.checks);
      CHECK(a.failures == b.failures);
      CHECK(a.counterexamples == b.counterexamples);
      CHECK(a.notes == b.notes);
    };
    same(verify_t2_exhaustive(7, alphas, Execution::serial), verify_t2_exhaustive(7, alphas, Execution::parallel));
    same(verify_t3_exhaustive(5, alphas, GraphClass::connected, Execution::serial),
         verify_t3_exhaustive(5, alphas, GraphClass::connected, Execution::parallel));
    same(verify_sandwich(fixtures, grid, Execution::serial), verify_sandwich(fixtures, grid, Execution::parallel));
  }

  TEST_CASE("fixtures are deterministic") {
    const auto a = standard_fixtures();
    const auto b = standard_fixtures();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].graph == b[i].graph);
    }
  }
}
