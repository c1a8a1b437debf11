#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aspec/bethe.hpp"
#include "aspec/eigen.hpp"
#include "aspec/error.hpp"
#include "aspec/graph.hpp"
#include "support.hpp"

using namespace aspec;
using std::numbers::pi;

TEST_SUITE("eigen") {
  TEST_CASE("Sturm counts") {
    const SymTridiagonal t({0.0, 0.0}, {std::sqrt(3.0)});
    const auto [lo, hi] = t.gershgorin();
    CHECK(sturm_count(t, lo - 1.0) == 0);
    CHECK(sturm_count(t, hi + 1.0) == 2);
    CHECK(sturm_count(t, 0.0) == 1);
    CHECK(sturm_count(t, -std::sqrt(3.0) + 1e-9) == 1);
    CHECK(sturm_count(t, std::sqrt(3.0) + 1e-9) == 2);
  }

  TEST_CASE("Sturm count survives exact zero pivots") {
    // Leading minor vanishes at lambda = 0 for diag (0,0,0).
    const SymTridiagonal t({0.0, 0.0, 0.0}, {1.0, 1.0});
    CHECK(sturm_count(t, 0.0) == 1);  // eigenvalues -sqrt2, 0, sqrt2
    CHECK(sturm_count(t, 1e-12) == 2);
  }

  TEST_CASE("tridiagonal eigenvalues") {
    CHECK(tridiagonal_eigenvalues(SymTridiagonal({0.4}, {})) == std::vector<double>{0.4});
    const auto v = tridiagonal_eigenvalues(SymTridiagonal({0.0, 0.0}, {std::sqrt(3.0)}));
    REQUIRE(v.size() == 2);
    CHECK(std::abs(v[0] + std::sqrt(3.0)) <= 1e-12);
    CHECK(std::abs(v[1] - std::sqrt(3.0)) <= 1e-12);
    CHECK(testing::max_abs_diff(tridiagonal_eigenvalues(SymTridiagonal({3.0, -1.0, 2.0}, {0.0, 0.0})),
                                {-1.0, 2.0, 3.0}) <= 1e-12);
    CHECK_THROWS_AS(tridiagonal_eigenvalues(SymTridiagonal({1.0}, {}), 0.0), ArgumentError);
    CHECK_THROWS_AS(SymTridiagonal({1.0, 2.0}, {}), DimensionError);
  }

  TEST_CASE("bisection agrees with Jacobi on random tridiagonals") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 1 + trial % 12;
      std::vector<double> d(n), e(n - 1);
      for (auto& x : d) x = u(rng);
      for (auto& x : e) x = u(rng);
      const SymTridiagonal t(d, e);
      CHECK(testing::max_abs_diff(tridiagonal_eigenvalues(t), dense_eigen_oracle(t.to_dense()).values) <= 1e-10);
    }
  }

  TEST_CASE("Jacobi oracle") {
    SUBCASE("diagonal input") {
      DenseSymMatrix m(3);
      m(0, 0) = 2.0;
      m(1, 1) = -1.0;
      m(2, 2) = 0.5;
      CHECK(dense_eigen_oracle(m).values == std::vector<double>{-1.0, 0.5, 2.0});
    }
    SUBCASE("A(P_3)") {
      const auto v = dense_eigen_oracle(assemble_adjacency(path(3))).values;
      CHECK(std::abs(v[0] + std::sqrt(2.0)) <= 1e-12);
      CHECK(std::abs(v[1]) <= 1e-12);
      CHECK(std::abs(v[2] - std::sqrt(2.0)) <= 1e-12);
    }
    SUBCASE("non-symmetric input is rejected") {
      DenseSymMatrix m(2);
      m(0, 1) = 1.0;
      CHECK_THROWS_AS(dense_eigen_oracle(m), ContractViolation);
    }
    SUBCASE("eigenvector residuals and trace") {
      std::mt19937_64 rng(3);
      for (int trial = 0; trial < 10; ++trial) {
        const Graph g = testing::random_tree(15 + trial, rng);
        const auto m = assemble_alpha_matrix(g, AlphaParam(trial / 9.0));
        const auto r = dense_eigen_oracle(m, true);
        REQUIRE(r.vectors.has_value());
        double sum = 0.0;
        for (std::size_t k = 0; k < r.values.size(); ++k) {
          sum += r.values[k];
          const auto& v = (*r.vectors)[k];
          const auto mv = m.multiply(v);
          double res = 0.0;
          for (std::size_t i = 0; i < v.size(); ++i) res += std::pow(mv[i] - r.values[k] * v[i], 2);
          CHECK(std::sqrt(res) <= 1e-8 * m.frobenius_norm());
        }
        CHECK(std::abs(sum - m.trace()) <= 1e-9 * std::max(1.0, std::abs(m.trace())));
        CHECK(std::is_sorted(r.values.begin(), r.values.end()));
      }
    }
  }

  TEST_CASE("star spectral radius formula") {
    for (int n = 3; n <= 8; ++n) {
      for (int i = 0; i <= 10; ++i) {
        const double a = i / 10.0;
        const double want = (a * n + std::sqrt(a * a * n * n + 4.0 * (n - 1) * (1.0 - 2.0 * a))) / 2.0;
        CHECK(std::abs(max_eigenvalue(assemble_alpha_matrix(star(n), AlphaParam(a))) - want) <= 1e-9);
      }
    }
  }

  TEST_CASE("Perron pairs") {
    SUBCASE("P_2") {
      for (double a : {0.0, 0.5, 0.9}) {
        const auto p = perron(assemble_alpha_matrix(path(2), AlphaParam(a)));
        CHECK(std::abs(p.rho - 1.0) <= 1e-12);
        CHECK(std::abs(p.vector[0] - 1.0 / std::sqrt(2.0)) <= 1e-10);
        CHECK(std::abs(p.vector[1] - 1.0 / std::sqrt(2.0)) <= 1e-10);
      }
    }
    SUBCASE("cycles are uniform") {
      for (int n : {3, 4, 7, 10}) {
        const auto p = perron(assemble_adjacency(cycle(n)));
        CHECK(std::abs(p.rho - 2.0) <= 1e-12);
        for (double x : p.vector) CHECK(std::abs(x - 1.0 / std::sqrt(double(n))) <= 1e-10);
      }
    }
    SUBCASE("P_4 monotone and symmetric") {
      const auto p = perron(assemble_adjacency(path(4)));
      CHECK(p.vector[0] < p.vector[1]);
      CHECK(std::abs(p.vector[1] - p.vector[2]) <= 1e-10);
    }
    SUBCASE("residual, positivity, unit norm") {
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 10; ++trial) {
        const Graph g = testing::random_tree(20 + 3 * trial, rng);
        const auto m = assemble_alpha_matrix(g, AlphaParam(0.1 * trial));
        const auto p = perron(m);
        double norm = 0.0, res = 0.0;
        const auto mx = m.multiply(p.vector);
        for (std::size_t i = 0; i < p.vector.size(); ++i) {
          CHECK(p.vector[i] > 0.0);
          norm += p.vector[i] * p.vector[i];
          res += std::pow(mx[i] - p.rho * p.vector[i], 2);
        }
        CHECK(std::abs(norm - 1.0) <= 1e-12);
        CHECK(std::sqrt(res) <= 1e-10 * std::max(1.0, p.rho));
        CHECK(std::abs(p.rho - max_eigenvalue(m)) <= 1e-9);
      }
    }
    SUBCASE("negative entries rejected") {
      DenseSymMatrix m(2);
      m(0, 1) = m(1, 0) = -1.0;
      CHECK_THROWS_AS(perron(m), ContractViolation);
    }
  }

  TEST_CASE("spectral radius of paths and regular graphs") {
    for (int n = 2; n <= 40; ++n) {
      CHECK(std::abs(spectral_radius(path(n), AlphaParam(0.0)) - 2.0 * std::cos(pi / (n + 1))) <= 1e-9);
      CHECK(std::abs(spectral_radius(path(n), AlphaParam(0.5)) - (1.0 + std::cos(pi / n))) <= 1e-9);
    }
    for (double a : {0.0, 0.2, 0.7, 1.0}) {
      CHECK(std::abs(spectral_radius(cycle(9), AlphaParam(a)) - 2.0) <= 1e-9);
      CHECK(std::abs(spectral_radius(complete(6), AlphaParam(a)) - 5.0) <= 1e-9);
    }
  }

  TEST_CASE("disconnected graphs use the largest component") {
    const Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}});  // K_2 + C_5
    for (double a : {0.0, 0.4, 1.0}) CHECK(std::abs(spectral_radius(g, AlphaParam(a)) - 2.0) <= 1e-9);
  }

  TEST_CASE("perron, tridiagonal and dense paths agree on fixtures") {
    for (const auto& spec : {bethe_spec(2, 5), bethe_spec(3, 4), spec_from_degrees({1, 3, 3, 4, 3})}) {
      const Graph t = build_tree(spec);
      for (int i = 0; i <= 10; ++i) {
        const AlphaParam a(i / 10.0);
        const double dense = max_eigenvalue(assemble_alpha_matrix(t, a));
        CHECK(std::abs(spectral_radius(t, a) - dense) <= 1e-9);
        CHECK(std::abs(bethe_spectral_radius(spec, a) - dense) <= 1e-9);
      }
    }
  }

  TEST_CASE("T_{j-1} strictly interlaces T_j") {
    const auto spec = spec_from_degrees({1, 3, 3, 4, 3});
    for (double alpha : {0.0, 0.3, 0.8}) {
      const AlphaParam a(alpha);
      for (int j = 2; j <= spec.levels(); ++j) {
        const auto big = tridiagonal_eigenvalues(tridiagonal_T(spec, a, j));
        const auto small = tridiagonal_eigenvalues(tridiagonal_T(spec, a, j - 1));
        for (std::size_t i = 0; i < small.size(); ++i) {
          CHECK(big[i] < small[i] - 1e-9);
          CHECK(small[i] < big[i + 1] - 1e-9);
        }
      }
    }
  }
}
