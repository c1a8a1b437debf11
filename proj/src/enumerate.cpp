#include "aspec/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "aspec/error.hpp"

namespace aspec {

std::uint64_t labeled_tree_count(int n) {
  if (n < 1) throw ArgumentError("tree order must be positive");
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

Graph labeled_tree(int n, std::uint64_t index) {
  if (n < 2) throw ArgumentError("labeled_tree requires n >= 2");
  if (index >= labeled_tree_count(n)) throw ArgumentError("labeled tree index out of range");
  std::vector<int> seq(n - 2);
  for (int i = n - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return tree_from_pruefer(seq);
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

std::vector<Vertex> centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg = t.degrees();
  std::vector<Vertex> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw ArgumentError("tree_canonical_form requires a tree");
  std::string best;
  for (Vertex c : centers(tree)) {
    auto code = rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw ArgumentError("free_trees requires n >= 1");
  std::vector<Graph> level{Graph(1, {})};
  for (int order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, order - 1);
        Graph grown(order, std::move(edges));
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

int complete_edge_count(int n) { return n * (n - 1) / 2; }

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return e;
}

bool mask_is_connected(int n, std::uint64_t mask, const std::vector<Edge>& all_edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int components = n;
  for (std::size_t i = 0; i < all_edges.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    const int a = find(all_edges[i].first);
    const int b = find(all_edges[i].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& all_edges) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    if (mask >> i & 1u) e.push_back(all_edges[i]);
  return Graph(n, std::move(e));
}

}  // namespace aspec
