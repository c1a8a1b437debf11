#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

/// Convex-combination weight: A_alpha = alpha*D + beta*A with beta = 1 - alpha.
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Full (unpacked) symmetric matrix, row-major.
class DenseSymMatrix {
 public:
  explicit DenseSymMatrix(std::size_t order);

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * order_, order_};
  }
  std::span<const double> data() const { return data_; }

  bool is_symmetric(double tol = 0.0) const;
  double frobenius_norm() const;
  double trace() const;
  double max_row_sum() const;

  std::vector<double> multiply(std::span<const double> x) const;

  friend bool operator==(const DenseSymMatrix&, const DenseSymMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<double> data_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Throws ArgumentError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<int> degrees() const;
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_regular() const;
  bool is_tree() const { return is_connected() && size() + 1 == static_cast<std::size_t>(n_); }
  bool is_path() const;
  bool is_star() const;

  /// Vertex sets of the connected components, each sorted ascending.
  std::vector<std::vector<Vertex>> components() const;
  /// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Matrix assembly.
DenseSymMatrix assemble_alpha_matrix(const Graph& g, AlphaParam a);
DenseSymMatrix assemble_adjacency(const Graph& g);
DenseSymMatrix assemble_degree(const Graph& g);
DenseSymMatrix assemble_Q(const Graph& g);
DenseSymMatrix assemble_L(const Graph& g);

/// <A_alpha(G) x, x> evaluated as a sum over edges.
double quadratic_form(const Graph& g, AlphaParam a, std::span<const double> x);

/// Deletes {u,v} and adds {u,w}.
Graph rotate_edge(const Graph& g, Vertex u, Vertex v, Vertex w);

// Named constructors.
Graph path(int n);
Graph star(int n);  // K_{1,n-1}, center is vertex 0
Graph cycle(int n);
Graph complete(int n);
Graph smith_Y(int n);
Graph smith_F7();
Graph smith_F8();
Graph smith_F9();
Graph smith_K14();

/// Tree decoded from a Prüfer sequence over labels 0..n-1 (n = seq.size() + 2).
Graph tree_from_pruefer(std::span<const int> seq);

// Edge-list text format: "n m", then m lines "u v" with u < v; '#' comments.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace aspec
