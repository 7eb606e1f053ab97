#include "corona/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace corona {

MatrixKind matrix_kind_from_string(std::string_view s) {
  if (s == "A" || s == "a") return MatrixKind::Adjacency;
  if (s == "L" || s == "l") return MatrixKind::Laplacian;
  if (s == "Q" || s == "q") return MatrixKind::SignlessLaplacian;
  throw std::invalid_argument("unknown matrix kind: " + std::string(s));
}

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Laplacian: return "L";
    case MatrixKind::SignlessLaplacian: return "Q";
  }
  return "?";
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

DegreeProfile analyze(const Graph& g) {
  DegreeProfile p;
  const int n = g.vertex_count();
  p.degrees.resize(n);
  for (int v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                             [&](int d) { return d == p.degrees[0]; });
  p.regularity = p.is_regular ? p.degrees[0] : -1;

  std::vector<int> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++p.component_count;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return p;
}

long count_k4_subgraphs(const Graph& g) {
  const int n = g.vertex_count();
  long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.has_edge(a, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d <= c) continue;
          if (g.has_edge(a, d) && g.has_edge(b, d)) ++count;
        }
      }
    }
  return count;
}

std::optional<std::pair<int, int>> as_complete_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return std::nullopt;
  std::vector<int> color(n, -1);
  std::vector<int> stack = {0};
  color[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  int p = 0;
  for (int v = 0; v < n; ++v) {
    if (color[v] < 0) return std::nullopt;  // disconnected
    if (color[v] == 0) ++p;
  }
  const int q = n - p;
  if (g.edge_count() != p * q) return std::nullopt;
  return std::make_pair(std::min(p, q), std::max(p, q));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e), "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e), "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e), "K" + std::to_string(n));
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(n, {}, std::to_string(n) + "K1");
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite needs p, q >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
  return Graph(p + q, std::move(e), "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);        // outer cycle
    e.emplace_back(i, i + 5);              // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(e), "Petersen");
}

Graph cube_graph() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph(8, std::move(e), "Q3");
}

Graph rook_graph(int n) {
  if (n < 2) throw std::invalid_argument("rook graph needs n >= 2");
  std::vector<std::pair<int, int>> e;
  auto id = [n](int i, int j) { return n * i + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int j2 = j + 1; j2 < n; ++j2) e.emplace_back(id(i, j), id(i, j2));
      for (int i2 = i + 1; i2 < n; ++i2) e.emplace_back(id(i, j), id(i2, j));
    }
  return Graph(n * n, std::move(e), "Rook" + std::to_string(n));
}

Graph shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
  const std::vector<std::pair<int, int>> conn = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& [da, db] : conn) {
        const int u = 4 * a + b;
        const int v = 4 * ((a + da) % 4) + (b + db) % 4;
        if (u < v) e.emplace_back(u, v);
      }
  return Graph(16, std::move(e), "Shrikhande");
}

Graph build_named(const std::string& kind, const std::vector<int>& params) {
  auto want = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("builder '" + kind + "' expects " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (kind == "path") { want(1); return path_graph(params[0]); }
  if (kind == "cycle") { want(1); return cycle_graph(params[0]); }
  if (kind == "complete") { want(1); return complete_graph(params[0]); }
  if (kind == "empty") { want(1); return empty_graph(params[0]); }
  if (kind == "complete_bipartite" || kind == "kpq") {
    want(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (kind == "star") { want(1); return star_graph(params[0]); }
  if (kind == "petersen") { want(0); return petersen_graph(); }
  if (kind == "cube") { want(0); return cube_graph(); }
  if (kind == "rook") { want(1); return rook_graph(params[0]); }
  if (kind == "shrikhande") { want(0); return shrikhande_graph(); }
  throw std::invalid_argument("unknown builder kind: " + kind);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges();
  const int off = a.vertex_count();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  std::string name = a.name().empty() || b.name().empty() ? "" : a.name() + "+" + b.name();
  return Graph(a.vertex_count() + b.vertex_count(), std::move(e), std::move(name));
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
  std::bernoulli_distribution flip(edge_probability);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Eigen::MatrixXi matrix_of(const Graph& g, MatrixKind kind) {
  const int n = g.vertex_count();
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  const int off_diag = kind == MatrixKind::Laplacian ? -1 : 1;
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = off_diag;
    m(v, u) = off_diag;
  }
  if (kind != MatrixKind::Adjacency)
    for (int v = 0; v < n; ++v) m(v, v) = g.degree(v);
  return m;
}

}  // namespace corona
