#include "aspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "aspec/error.hpp"

namespace aspec {

AlphaParam::AlphaParam(double alpha) : alpha_(alpha), beta_(1.0 - alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in [0,1], got " + std::to_string(alpha));
  }
}

DenseSymMatrix::DenseSymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
  if (order == 0) throw ArgumentError("matrix order must be positive");
}

bool DenseSymMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double DenseSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymMatrix::max_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

std::vector<double> DenseSymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != order_) throw DimensionError("matrix-vector size mismatch");
  std::vector<double> y(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    const double* r = data_.data() + i * order_;
    double s = 0.0;
    for (std::size_t j = 0; j < order_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n > 0 ? n : 0) {
  if (n <= 0) throw ArgumentError("graph order must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for order " + std::to_string(n));
    }
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ArgumentError("duplicate edge {" + std::to_string(dup->first) + "," +
                        std::to_string(dup->second) + "}");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : adj_[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Graph::is_connected() const { return components().size() == 1; }

bool Graph::is_regular() const {
  for (const auto& a : adj_)
    if (a.size() != adj_[0].size()) return false;
  return true;
}

bool Graph::is_path() const {
  if (n_ == 1) return edges_.empty();
  if (!is_tree()) return false;
  int leaves = 0;
  for (const auto& a : adj_) {
    if (a.size() == 1) ++leaves;
    else if (a.size() != 2) return false;
  }
  return leaves == 2;
}

bool Graph::is_star() const {
  if (!is_tree()) return false;
  return n_ <= 2 || max_degree() == n_ - 1;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

DenseSymMatrix assemble_alpha_matrix(const Graph& g, AlphaParam a) {
  DenseSymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m(v, v) = a.alpha() * g.degree(v);
  for (auto [u, v] : g.edges()) {
    m(u, v) = a.beta();
    m(v, u) = a.beta();
  }
  return m;
}

DenseSymMatrix assemble_adjacency(const Graph& g) { return assemble_alpha_matrix(g, AlphaParam(0.0)); }

DenseSymMatrix assemble_degree(const Graph& g) { return assemble_alpha_matrix(g, AlphaParam(1.0)); }

DenseSymMatrix assemble_Q(const Graph& g) {
  DenseSymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  }
  return m;
}

DenseSymMatrix assemble_L(const Graph& g) {
  DenseSymMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    m(u, v) = -1.0;
    m(v, u) = -1.0;
  }
  return m;
}

double quadratic_form(const Graph& g, AlphaParam a, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw DimensionError("quadratic_form: vector length " + std::to_string(x.size()) +
                         " != graph order " + std::to_string(g.order()));
  }
  double s = 0.0;
  for (auto [u, v] : g.edges()) {
    s += a.alpha() * x[u] * x[u] + 2.0 * a.beta() * x[u] * x[v] + a.alpha() * x[v] * x[v];
  }
  return s;
}

Graph rotate_edge(const Graph& g, Vertex u, Vertex v, Vertex w) {
  const int n = g.order();
  auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
  if (!in_range(u) || !in_range(v) || !in_range(w)) throw InvalidRotation("vertex out of range");
  if (!g.has_edge(u, v)) throw InvalidRotation("{u,v} is not an edge");
  if (u == w) throw InvalidRotation("u and w coincide");
  if (g.has_edge(u, w)) throw InvalidRotation("{u,w} is already an edge");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  const Edge removed{std::min(u, v), std::max(u, v)};
  for (const auto& e : g.edges())
    if (e != removed) edges.push_back(e);
  edges.emplace_back(u, w);
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 2) throw ArgumentError("path requires n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star(int n) {
  if (n < 2) throw ArgumentError("star requires n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw ArgumentError("cycle requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  if (n < 1) throw ArgumentError("complete graph requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

// Smith graphs, read off the drawing of the six families with spectral radius 2.
//
// Y_n: spine 0..n-3 (drawn horizontally at y=0), forked at both ends: vertex
// n-2 hangs on spine vertex 1 and vertex n-1 on spine vertex n-4. Equivalently
// both spine endpoints carry two leaves.
Graph smith_Y(int n) {
  if (n <= 5) throw ArgumentError("Y_n requires n > 5");
  const int spine = n - 2;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n - 2);
  e.emplace_back(spine - 2, n - 1);
  return Graph(n, std::move(e));
}

// F_7: 5-vertex path at y=-4 (x = -9..-6.2), two-vertex tail rising from the
// center (x=-7.6) at y=-3.3 and y=-2.6.
Graph smith_F7() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
  return Graph(7, std::move(e));
}

// F_8: 7-vertex path at y=-4 (x = -4.8..-0.6), one pendant above the 4th
// vertex (x=-2.7).
Graph smith_F8() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
  return Graph(8, std::move(e));
}

// F_9: 8-vertex path at y=-4 (x = 0.8..5.7), one pendant above the 3rd vertex
// (x=2.2).
Graph smith_F9() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}};
  return Graph(9, std::move(e));
}

Graph smith_K14() { return star(5); }

Graph tree_from_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw ArgumentError("Pruefer label out of range");
    ++degree[s];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` follows
  // chains of newly created leaves below it.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, std::move(edges));
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("edge list: missing header line");
  long long n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"n m\"");
    }
  }
  if (n <= 0 || m < 0 || m > n * (n - 1) / 2) {
    throw ParseError("edge list: invalid header n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace aspec
