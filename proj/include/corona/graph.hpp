#pragma once

#include <Eigen/Core>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corona {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

MatrixKind matrix_kind_from_string(std::string_view s);  // "A" | "L" | "Q"
std::string to_string(MatrixKind kind);

/// Undirected simple graph on vertices 0..n-1. Immutable after construction,
/// so instances can be shared freely across threads.
class Graph {
 public:
  /// Validates and canonicalizes the edge list (u < v, lexicographically
  /// sorted). Throws std::invalid_argument on self-loops, duplicates, or
  /// endpoints out of range.
  Graph(int n, std::vector<std::pair<int, int>> edges, std::string name = "");

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
  std::string name_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  bool is_regular = false;
  int regularity = -1;  // shared degree when regular
  int max_degree = 0;
  int component_count = 0;
};

DegreeProfile analyze(const Graph& g);

/// Number of K4 subgraphs; distinguishes cospectral strongly regular pairs.
long count_k4_subgraphs(const Graph& g);

/// (p, q) when g is a complete bipartite graph (p <= q), nullopt otherwise.
std::optional<std::pair<int, int>> as_complete_bipartite(const Graph& g);

// --- named builders (deterministic vertex numbering, documented per builder) ---

Graph path_graph(int n);                    // 0-1-2-...-(n-1)
Graph cycle_graph(int n);                   // n >= 3, path plus closing edge
Graph complete_graph(int n);                // K_n
Graph empty_graph(int n);                   // n isolated vertices
Graph complete_bipartite(int p, int q);     // part one = 0..p-1, part two = p..p+q-1
Graph star_graph(int leaves);               // K_{1,leaves}, center = 0
Graph petersen_graph();                     // outer C5 = 0..4, inner 5-cycle = 5..9
Graph cube_graph();                         // 3-cube, vertex = bit pattern 0..7
Graph rook_graph(int n);                    // n x n rook; vertex (i,j) = n*i + j
Graph shrikhande_graph();                   // Cayley graph on Z4 x Z4, vertex (a,b) = 4*a + b

/// Dispatch by kind: path, cycle, complete, empty, complete_bipartite, star,
/// petersen, cube, rook, shrikhande. Throws on unknown kind or bad params.
Graph build_named(const std::string& kind, const std::vector<int>& params);

/// Vertices of `a` first, then `b` shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Each possible edge present independently with the given probability;
/// deterministic for a given generator state.
Graph random_graph(std::mt19937_64& rng, int n, double edge_probability);

/// A, L = D - A, or Q = D + A as a dense integer matrix.
Eigen::MatrixXi matrix_of(const Graph& g, MatrixKind kind);

}  // namespace corona
