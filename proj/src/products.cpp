#include "corona/products.hpp"

namespace corona {

Graph neighbourhood_corona(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  auto copy_vertex = [&](int copy, int j) { return n1 + copy * n2 + j; };

  std::vector<std::pair<int, int>> edges = g1.edges();
  edges.reserve(g1.edge_count() * (1 + 2 * n2) + n1 * g2.edge_count());
  for (int i = 0; i < n1; ++i)
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(copy_vertex(i, u), copy_vertex(i, v));
  // Copy i's vertices attach to every neighbour of base vertex i.
  for (const auto& [u, v] : g1.edges())
    for (int j = 0; j < n2; ++j) {
      edges.emplace_back(u, copy_vertex(v, j));
      edges.emplace_back(v, copy_vertex(u, j));
    }
  std::string name =
      g1.name().empty() || g2.name().empty() ? "" : g1.name() + "*" + g2.name();
  return Graph(n1 * (n2 + 1), std::move(edges), std::move(name));
}

Graph edge_corona(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  const int m1 = g1.edge_count();
  auto copy_vertex = [&](int copy, int j) { return n1 + copy * n2 + j; };

  std::vector<std::pair<int, int>> edges = g1.edges();
  edges.reserve(m1 * (1 + 2 * n2) + m1 * g2.edge_count());
  for (int i = 0; i < m1; ++i) {
    const auto& [u, v] = g1.edges()[i];
    for (const auto& [a, b] : g2.edges()) edges.emplace_back(copy_vertex(i, a), copy_vertex(i, b));
    for (int j = 0; j < n2; ++j) {
      edges.emplace_back(u, copy_vertex(i, j));
      edges.emplace_back(v, copy_vertex(i, j));
    }
  }
  std::string name =
      g1.name().empty() || g2.name().empty() ? "" : g1.name() + "<>" + g2.name();
  return Graph(n1 + m1 * n2, std::move(edges), std::move(name));
}

}  // namespace corona
