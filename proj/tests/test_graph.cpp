#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "aspec/enumerate.hpp"
#include "aspec/eigen.hpp"
#include "aspec/error.hpp"
#include "aspec/graph.hpp"
#include "support.hpp"

using namespace aspec;

TEST_SUITE("graph_core") {
  TEST_CASE("alpha parameter range") {
    CHECK(AlphaParam(0.0).beta() == 1.0);
    CHECK(AlphaParam(1.0).beta() == 0.0);
    CHECK(AlphaParam(0.3).beta() == doctest::Approx(0.7));
    CHECK_THROWS_AS(AlphaParam(-0.01), ArgumentError);
    CHECK_THROWS_AS(AlphaParam(1.01), ArgumentError);
    CHECK_THROWS_AS(AlphaParam(std::nan("")), ArgumentError);
  }

  TEST_CASE("P_3 assembly") {
    const auto m = assemble_alpha_matrix(path(3), AlphaParam(0.5));
    CHECK(m(0, 0) == 0.5);
    CHECK(m(1, 1) == 1.0);
    CHECK(m(2, 2) == 0.5);
    CHECK(m(0, 1) == 0.5);
    CHECK(m(1, 2) == 0.5);
    CHECK(m(0, 2) == 0.0);
    CHECK(assemble_alpha_matrix(path(3), AlphaParam(0.0)) == assemble_adjacency(path(3)));
    CHECK(assemble_alpha_matrix(path(3), AlphaParam(1.0)) == assemble_degree(path(3)));
  }

  TEST_CASE("A_alpha + A_{1-alpha} = Q and 2 A_{1/2} = Q") {
    for (const auto& g : {path(6), star(5), cycle(7), complete(5), smith_F9()}) {
      const auto q = assemble_Q(g);
      for (int i = 0; i <= 20; ++i) {
        const double a = i / 20.0;
        const auto m = assemble_alpha_matrix(g, AlphaParam(a));
        const auto c = assemble_alpha_matrix(g, AlphaParam(1.0 - a));
        CHECK(m.is_symmetric());
        for (std::size_t r = 0; r < q.order(); ++r) {
          for (std::size_t s = 0; s < q.order(); ++s) {
            CHECK(m(r, s) >= 0.0);
            CHECK(std::abs(m(r, s) + c(r, s) - q(r, s)) <= 1e-15);
          }
        }
      }
      const auto half = assemble_alpha_matrix(g, AlphaParam(0.5));
      for (std::size_t r = 0; r < q.order(); ++r)
        for (std::size_t s = 0; s < q.order(); ++s) CHECK(2.0 * half(r, s) == q(r, s));
    }
  }

  TEST_CASE("L = D - A") {
    const Graph g = smith_Y(8);
    const auto l = assemble_L(g);
    const auto d = assemble_degree(g);
    const auto a = assemble_adjacency(g);
    for (std::size_t r = 0; r < l.order(); ++r)
      for (std::size_t s = 0; s < l.order(); ++s) CHECK(l(r, s) == d(r, s) - a(r, s));
  }

  TEST_CASE("quadratic form") {
    SUBCASE("all-ones gives 2m") {
      for (const auto& g : {path(5), cycle(6), complete(4), smith_F8()}) {
        std::vector<double> ones(g.order(), 1.0);
        for (double a : {0.0, 0.3, 1.0}) CHECK(quadratic_form(g, AlphaParam(a), ones) == doctest::Approx(2.0 * g.size()));
      }
    }
    SUBCASE("edgeless graph") {
      std::vector<double> x{1.5, -2.0, 3.0};
      CHECK(quadratic_form(Graph(3, {}), AlphaParam(0.4), x) == 0.0);
    }
    SUBCASE("P_3 at alpha 0.3 matches x^T M x") {
      std::vector<double> x{1.0, 2.0, 1.0};
      const auto m = assemble_alpha_matrix(path(3), AlphaParam(0.3));
      const auto mx = m.multiply(x);
      double dense = 0.0;
      for (int i = 0; i < 3; ++i) dense += x[i] * mx[i];
      CHECK(std::abs(quadratic_form(path(3), AlphaParam(0.3), x) - dense) <= 1e-12);
    }
    SUBCASE("random vectors") {
      std::mt19937_64 rng(7);
      std::normal_distribution<double> nd;
      for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_tree(12, rng);
        std::vector<double> x(12);
        for (auto& v : x) v = nd(rng);
        const AlphaParam a(trial / 19.0);
        const auto mx = assemble_alpha_matrix(g, a).multiply(x);
        double dense = 0.0;
        for (int i = 0; i < 12; ++i) dense += x[i] * mx[i];
        CHECK(std::abs(quadratic_form(g, a, x) - dense) <= 1e-12 * std::max(1.0, std::abs(dense)));
      }
    }
    SUBCASE("length mismatch") {
      std::vector<double> x{1.0, 2.0};
      CHECK_THROWS_AS(quadratic_form(path(3), AlphaParam(0.5), x), DimensionError);
    }
  }

  TEST_CASE("edge rotation") {
    SUBCASE("P_5 rotation gives the pendant-on-v3 graph") {
      const Graph h = rotate_edge(path(5), 0, 1, 2);
      CHECK(h == Graph(5, {{1, 2}, {2, 3}, {3, 4}, {0, 2}}));
    }
    SUBCASE("inverse rotation restores the star") {
      const Graph s = star(5);
      const Graph moved = rotate_edge(s, 1, 0, 2);
      CHECK(rotate_edge(moved, 1, 2, 0) == s);
    }
    SUBCASE("K_1,3 leaf onto leaf is P_4") {
      const Graph h = rotate_edge(star(4), 1, 0, 2);
      CHECK(h.is_path());
      CHECK(h == Graph(4, {{0, 2}, {0, 3}, {1, 2}}));
    }
    SUBCASE("precondition violations") {
      CHECK_THROWS_AS(rotate_edge(path(4), 0, 2, 3), InvalidRotation);  // {0,2} absent
      CHECK_THROWS_AS(rotate_edge(cycle(4), 0, 1, 3), InvalidRotation);  // {0,3} present
      CHECK_THROWS_AS(rotate_edge(path(4), 1, 0, 1), InvalidRotation);   // u == w
      CHECK_THROWS_AS(rotate_edge(path(4), 0, 1, 9), InvalidRotation);
    }
  }

  TEST_CASE("rotation toward a heavier Perron entry increases rho") {
    std::mt19937_64 rng(20170104);
    int rotations = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 6 + trial % 10;
      const Graph g = testing::random_tree(n, rng);
      for (double alpha : {0.0, 0.3, 0.6, 0.9}) {
        const AlphaParam a(alpha);
        const auto p = perron(assemble_alpha_matrix(g, a));
        const auto& x = p.vector;
        for (const auto& [u0, v0] : g.edges()) {
          for (auto [u, v] : {Edge{u0, v0}, Edge{v0, u0}}) {
            Vertex w = -1;
            for (Vertex c = 0; c < n; ++c) {
              if (c == u || g.has_edge(u, c)) continue;
              if (w < 0 || x[c] > x[w]) w = c;
            }
            if (w < 0) continue;
            const Graph h = rotate_edge(g, u, v, w);
            if (quadratic_form(h, a, x) < quadratic_form(g, a, x)) continue;
            ++rotations;
            CHECK(spectral_radius(h, a) > p.rho + 1e-12);
          }
        }
      }
    }
    CHECK(rotations > 100);
  }

  TEST_CASE("constructors") {
    CHECK(testing::sorted_degrees(star(4)) == std::vector<int>{1, 1, 1, 3});
    CHECK(star(4).is_star());
    CHECK(path(2).is_star());
    CHECK(path(6).is_path());
    CHECK_FALSE(star(5).is_path());
    const Graph c = cycle(8);
    CHECK(c.is_regular());
    CHECK(c.size() == 8);
    CHECK(complete(5).size() == 10);

    const Graph f7 = smith_F7();
    CHECK(f7.order() == 7);
    CHECK(f7.is_tree());
    CHECK(testing::sorted_degrees(f7) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
    CHECK(f7.degree(2) == 3);  // center of the 5-vertex spine carries the 2-vertex tail

    CHECK(smith_F8().order() == 8);
    CHECK(smith_F9().order() == 9);
    CHECK(smith_Y(7).order() == 7);
    CHECK(testing::sorted_degrees(smith_Y(7)) == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    CHECK(smith_K14() == star(5));

    CHECK_THROWS_AS(path(1), ArgumentError);
    CHECK_THROWS_AS(star(1), ArgumentError);
    CHECK_THROWS_AS(cycle(2), ArgumentError);
    CHECK_THROWS_AS(smith_Y(5), ArgumentError);
  }

  TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ArgumentError);
    const Graph g(4, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_FALSE(g.is_connected());
    CHECK(g.components().size() == 2);
  }

  TEST_CASE("Smith graphs have rho(A) = 2") {
    for (const auto& g : {cycle(8), smith_Y(7), smith_K14(), smith_F7(), smith_F8(), smith_F9()}) {
      CHECK(std::abs(spectral_radius(g, AlphaParam(0.0)) - 2.0) <= 1e-9);
      CHECK(std::abs(max_eigenvalue(assemble_adjacency(g)) - 2.0) <= 1e-9);
    }
    for (int n = 6; n <= 12; ++n) CHECK(std::abs(spectral_radius(smith_Y(n), AlphaParam(0.0)) - 2.0) <= 1e-9);
  }

  TEST_CASE("rho(Q) = rho(L) on every tree up to order 10") {
    int trees = 0;
    for (int n = 2; n <= 10; ++n) {
      for (const auto& t : free_trees(n)) {
        ++trees;
        CHECK(std::abs(spectral_radius_Q(t) - spectral_radius_L(t)) <= 1e-9);
      }
    }
    CHECK(trees == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  }

  TEST_CASE("edge-list parser") {
    SUBCASE("round trip") {
      const Graph g = smith_F8();
      std::stringstream ss;
      write_edge_list(ss, g);
      CHECK(parse_edge_list(ss) == g);
    }
    SUBCASE("comments and blank lines") {
      std::istringstream in("# triangle\n3 3\n0 1\n\n# middle\n1 2\n0 2\n");
      CHECK(parse_edge_list(in) == cycle(3));
    }
    SUBCASE("errors") {
      auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_edge_list(in), ParseError);
      };
      bad("");
      bad("3\n");
      bad("3 2\n0 1\n");        // fewer edges than declared
      bad("3 1\n0 1\n1 2\n");   // more edges than declared
      bad("3 1\n0 0\n");        // loop
      bad("3 2\n0 1\n1 0\n");   // duplicate
      bad("3 1\n0 5\n");        // out of range
      bad("3 1\n0 x\n");
      bad("3 1\n0 1 2\n");
      CHECK_THROWS_AS(read_edge_list("/nonexistent/graph.txt"), ParseError);
    }
  }
}
