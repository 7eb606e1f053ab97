#include "corona/expander.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "corona/exact.hpp"
#include "corona/products.hpp"
#include "corona/util.hpp"

namespace corona {

namespace {

constexpr double kConnectedEps = 1e-9;

void require_scalar_params(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("scalar functions need n, k >= 1");
}

}  // namespace

double expander_f(int n, int k, double x) {
  require_scalar_params(n, k);
  const double nk1 = static_cast<double>(n + 1) * k;
  const double radicand = (4.0 * n + 1.0) * x * x - 2.0 * (3.0 * n + 1.0) * k * x + nk1 * nk1;
  return x + nk1 - std::sqrt(std::max(radicand, 0.0));
}

double expander_g(int n, int k, double x) {
  require_scalar_params(n, k);
  const double b = x + static_cast<double>(n) * k + 2.0;
  const double radicand = b * b - 4.0 * (n + 2.0) * x;
  return b - std::sqrt(std::max(radicand, 0.0));
}

double expander_delta(int n, int k, double eps) {
  require_scalar_params(n, k);
  return 0.5 * std::min(expander_f(n, k, eps), expander_f(n, k, 2.0 * k));
}

ConnectivityReport algebraic_connectivity(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("algebraic connectivity needs at least two vertices");
  const SymEigen eig = eigensolve_sym(matrix_of(g, MatrixKind::Laplacian).cast<double>());
  ConnectivityReport rep;
  rep.a = eig.values(1);
  rep.mu_max = eig.values(g.vertex_count() - 1);
  rep.connected = rep.a > kConnectedEps;
  return rep;
}

NcConnectivity nc_alg_connectivity(const Graph& g, const Graph& h) {
  const DegreeProfile pg = analyze(g);
  if (!pg.is_regular || pg.regularity < 1)
    throw std::invalid_argument("base graph must be regular of degree >= 1");
  if (pg.component_count != 1) throw std::invalid_argument("base graph must be connected");
  const DegreeProfile ph = analyze(h);
  if (!ph.is_regular) throw std::invalid_argument("copy graph must be regular");
  const int n = h.vertex_count();
  if (2 * h.edge_count() == static_cast<long>(n) * (n - 1))
    throw std::invalid_argument("copy graph must not be complete");

  const int k = pg.regularity;
  const ConnectivityReport base = algebraic_connectivity(g);
  NcConnectivity out;
  out.exact = 0.5 * std::min(expander_f(n, k, base.a), expander_f(n, k, base.mu_max));
  out.lower_bound = 0.5 * std::min(expander_f(n, k, base.a), expander_f(n, k, 2.0 * k));
  return out;
}

void CayleySpec::validate() const {
  if (order < 1 || static_cast<int>(mul.size()) != order ||
      static_cast<int>(inv.size()) != order)
    throw std::invalid_argument("cayley spec: malformed tables");
  for (const auto& row : mul)
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("cayley spec: malformed multiplication table");
  for (int i = 0; i < order; ++i)
    if (mul[i][inv[i]] != identity || mul[inv[i]][i] != identity)
      throw std::invalid_argument("cayley spec: inverse table is wrong");
  for (int s : gens) {
    if (s == identity) throw std::invalid_argument("cayley spec: identity in generating set");
    if (std::find(gens.begin(), gens.end(), inv[s]) == gens.end())
      throw std::invalid_argument("cayley spec: generating set not closed under inverse");
  }
  for (int s : gens0)
    if (std::find(gens.begin(), gens.end(), s) == gens.end())
      throw std::invalid_argument("cayley spec: distinguished subset not inside generating set");
}

Graph CayleySpec::cayley_graph() const {
  validate();
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < order; ++x)
    for (int s : gens) {
      const int y = mul[x][s];
      if (x < y) edges.emplace_back(x, y);
    }
  return Graph(order, std::move(edges), name);
}

CayleySpec sl2_cayley(int m) {
  if (m < 3)
    throw std::invalid_argument("sl2 cayley graph needs modulus >= 3 (shears are involutions mod 2)");

  // Brute-force enumeration of all det = 1 matrices (a b; c d) over Z_m.
  struct M2 {
    int a, b, c, d;
  };
  std::vector<M2> elems;
  std::map<std::array<int, 4>, int> index;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if (((a * d - b * c) % m + m) % m == 1) {
            index[{a, b, c, d}] = static_cast<int>(elems.size());
            elems.push_back({a, b, c, d});
          }

  CayleySpec spec;
  spec.name = "SL2(Z" + std::to_string(m) + ")";
  spec.order = static_cast<int>(elems.size());
  spec.labels.reserve(spec.order);
  for (const auto& e : elems)
    spec.labels.push_back("[" + std::to_string(e.a) + "," + std::to_string(e.b) + ";" +
                          std::to_string(e.c) + "," + std::to_string(e.d) + "]");

  auto mul2 = [&](const M2& x, const M2& y) {
    return M2{(x.a * y.a + x.b * y.c) % m, (x.a * y.b + x.b * y.d) % m,
              (x.c * y.a + x.d * y.c) % m, (x.c * y.b + x.d * y.d) % m};
  };
  auto at = [&](const M2& x) { return index.at({x.a, x.b, x.c, x.d}); };

  spec.mul.assign(spec.order, std::vector<int>(spec.order));
  for (int i = 0; i < spec.order; ++i)
    for (int j = 0; j < spec.order; ++j) spec.mul[i][j] = at(mul2(elems[i], elems[j]));

  spec.identity = at({1, 0, 0, 1});
  spec.inv.assign(spec.order, -1);
  for (int i = 0; i < spec.order; ++i)
    for (int j = 0; j < spec.order; ++j)
      if (spec.mul[i][j] == spec.identity) {
        spec.inv[i] = j;
        break;
      }

  const int a = at({1, 1, 0, 1});
  const int b = at({1, 0, 1, 1});
  spec.gens = {a, spec.inv[a], b, spec.inv[b]};
  std::sort(spec.gens.begin(), spec.gens.end());
  if (std::adjacent_find(spec.gens.begin(), spec.gens.end()) != spec.gens.end() ||
      std::find(spec.gens.begin(), spec.gens.end(), spec.identity) != spec.gens.end())
    throw std::invalid_argument("sl2 generating set degenerates (involution in S)");
  spec.gens0 = {a, spec.inv[a]};
  std::sort(spec.gens0.begin(), spec.gens0.end());
  spec.validate();
  return spec;
}

CayleySpec cyclic_cayley(int n) {
  if (n < 3) throw std::invalid_argument("cyclic cayley graph needs n >= 3");
  CayleySpec spec;
  spec.name = "Z" + std::to_string(n);
  spec.order = n;
  spec.identity = 0;
  spec.mul.assign(n, std::vector<int>(n));
  spec.inv.assign(n, 0);
  spec.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    spec.labels[i] = std::to_string(i);
    spec.inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) spec.mul[i][j] = (i + j) % n;
  }
  spec.gens = n == 3 ? std::vector<int>{1, 2} : std::vector<int>{1, n - 1};
  std::sort(spec.gens.begin(), spec.gens.end());
  spec.validate();
  return spec;
}

Graph regularized_corona(const Graph& g, const Graph& h, const Graph& u, const Graph& w) {
  const DegreeProfile pg = analyze(g);
  const DegreeProfile ph = analyze(h);
  if (!pg.is_regular || !ph.is_regular)
    throw std::invalid_argument("regularized corona needs regular g and h");
  const int k = pg.regularity;
  const int r = ph.regularity;
  const int n = h.vertex_count();
  if (k < 1 || k % 2 != 0 || r % 2 != 0)
    throw std::invalid_argument("regularized corona needs even degrees for g and h");
  const int s = r / k;
  const int t = r % k;
  if (t % 2 != 0) throw std::invalid_argument("regularized corona: residual degree t is odd");
  if (n - s - 1 < 0) throw std::invalid_argument("regularized corona: copies too small for bundles");

  const DegreeProfile pu = analyze(u);
  const DegreeProfile pw = analyze(w);
  if (u.vertex_count() != g.vertex_count() || !pu.is_regular || pu.regularity != k)
    throw std::invalid_argument("u must be k-regular on g's vertex set");
  if (w.vertex_count() != g.vertex_count() || !pw.is_regular || pw.regularity != k - t)
    throw std::invalid_argument("w must be (k-t)-regular on g's vertex set");

  const Graph corona = neighbourhood_corona(g, h);
  const int n1 = g.vertex_count();
  auto copy_vertex = [&](int copy, int j) { return n1 + copy * n + j; };

  std::vector<std::pair<int, int>> edges = corona.edges();
  // Bundle per u-edge: circulant bipartite graph between the two copies.
  for (const auto& [a, b] : u.edges())
    for (int j = 0; j < n; ++j)
      for (int d = 1; d <= n - s - 1; ++d)
        edges.emplace_back(copy_vertex(a, j), copy_vertex(b, (j + d) % n));
  // Matching per w-edge: offset 0, disjoint from every bundle.
  for (const auto& [a, b] : w.edges())
    for (int j = 0; j < n; ++j) edges.emplace_back(copy_vertex(a, j), copy_vertex(b, j));

  Graph out(corona.vertex_count(), std::move(edges),
            corona.name().empty() ? "" : corona.name() + "^");
  const DegreeProfile pout = analyze(out);
  if (!pout.is_regular || pout.regularity != (n + 1) * k)
    throw std::logic_error("regularized corona degree audit failed");
  return out;
}

Graph cayley_regularized_corona(const CayleySpec& g_spec, const CayleySpec& h_spec,
                                const std::vector<int>& s0) {
  g_spec.validate();
  h_spec.validate();
  const int k = static_cast<int>(g_spec.gens.size());
  const int r = static_cast<int>(h_spec.gens.size());
  const int n = h_spec.order;
  if (r >= k) throw std::invalid_argument("copy degree must be smaller than base degree");
  if (static_cast<int>(s0.size()) != k - r)
    throw std::invalid_argument("distinguished subset must have size k - r");
  for (int s : s0) {
    if (std::find(g_spec.gens.begin(), g_spec.gens.end(), s) == g_spec.gens.end())
      throw std::invalid_argument("distinguished subset must lie inside the generating set");
    if (std::find(s0.begin(), s0.end(), g_spec.inv[s]) == s0.end())
      throw std::invalid_argument("distinguished subset must be closed under inverse");
  }
  if ((static_cast<long>(n) * k) % 2 != 0)
    throw std::invalid_argument("n * k must be even");

  // Vertex (x, y): y in 0..n-1 is a copy coordinate, y = n is the base layer.
  const int columns = n + 1;
  const int order = g_spec.order * columns;
  auto vid = [&](int x, int y) { return x * columns + y; };
  auto in_gens = [&](int d) {
    return std::find(g_spec.gens.begin(), g_spec.gens.end(), d) != g_spec.gens.end();
  };
  auto in_s0 = [&](int d) { return std::find(s0.begin(), s0.end(), d) != s0.end(); };
  auto in_t = [&](int d) {
    return std::find(h_spec.gens.begin(), h_spec.gens.end(), d) != h_spec.gens.end();
  };

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g_spec.order; ++x) {
    for (int x2 = 0; x2 < g_spec.order; ++x2) {
      const int diff = g_spec.mul[g_spec.inv[x]][x2];
      const bool step = in_gens(diff);
      const bool step0 = step && in_s0(diff);
      for (int y = 0; y < columns; ++y)
        for (int y2 = 0; y2 < columns; ++y2) {
          const int a = vid(x, y), b = vid(x2, y2);
          if (a >= b) continue;
          bool adjacent = false;
          if (y == n || y2 == n) {
            adjacent = step;  // base layer reaches every coordinate of a base neighbour
          } else if (x == x2) {
            adjacent = in_t(h_spec.mul[h_spec.inv[y]][y2]);
          } else if (step) {
            adjacent = y != y2 || step0;
          }
          if (adjacent) edges.emplace_back(a, b);
        }
    }
  }
  Graph out(order, std::move(edges), g_spec.name + "^" + h_spec.name);
  const DegreeProfile p = analyze(out);
  if (!p.is_regular || p.regularity != (n + 1) * k)
    throw std::logic_error("cayley regularized corona degree audit failed");
  return out;
}

FamilyReport family_report(const std::vector<Graph>& graphs, int n, int k, double eps) {
  if (graphs.empty()) throw std::invalid_argument("family report needs at least one graph");
  require_scalar_params(n, k);

  FamilyReport rep;
  rep.n = n;
  rep.k = k;
  rep.eps = eps;
  rep.delta = expander_delta(n, k, eps);
  rep.expected_degree = (n + 1) * k;
  rep.graphs.resize(graphs.size());

  parallel_for(static_cast<int>(graphs.size()), [&](int i) {
    const Graph& g = graphs[i];
    FamilyGraphEntry& e = rep.graphs[i];
    e.label = g.name().empty() ? "graph-" + std::to_string(i) : g.name();
    e.order = g.vertex_count();
    const DegreeProfile p = analyze(g);
    e.regular = p.is_regular;
    e.degree = p.regularity;
    const ConnectivityReport conn = algebraic_connectivity(g);
    e.connected = conn.connected;
    e.a = conn.a;
    e.pass = true;
    if (!e.regular || e.degree != rep.expected_degree) {
      e.pass = false;
      e.diagnostic = "degree " + std::to_string(e.degree) + " != expected " +
                     std::to_string(rep.expected_degree);
    } else if (!e.connected) {
      e.pass = false;
      e.diagnostic = "disconnected";
    } else if (e.a < rep.delta - kConnectedEps) {
      e.pass = false;
      e.diagnostic = "algebraic connectivity below certificate";
    }
  });

  rep.min_a = rep.graphs.front().a;
  rep.pass = true;
  for (const auto& e : rep.graphs) {
    rep.min_a = std::min(rep.min_a, e.a);
    rep.pass = rep.pass && e.pass;
  }
  return rep;
}

Sl2FamilyResult sl2_family(int m_lo, int m_hi, std::optional<double> eps) {
  if (m_lo < 3 || m_hi < m_lo) throw std::invalid_argument("sl2 family needs 3 <= m_lo <= m_hi");

  const CayleySpec triangle = cyclic_cayley(3);
  const int n = 3, k = 4;

  Sl2FamilyResult result;
  std::vector<Graph> hats;
  for (int m = m_lo; m <= m_hi; ++m) {
    const CayleySpec spec = sl2_cayley(m);
    const Graph base = spec.cayley_graph();
    const Graph corona = neighbourhood_corona(base, triangle.cayley_graph());
    const Graph hat = cayley_regularized_corona(spec, triangle, spec.gens0);

    Sl2FamilyEntry e;
    e.m = m;
    e.group_order = spec.order;
    e.base_a = algebraic_connectivity(base).a;
    e.corona_a = algebraic_connectivity(corona).a;
    const ConnectivityReport hat_conn = algebraic_connectivity(hat);
    e.hat_a = hat_conn.a;
    e.connected = hat_conn.connected;
    const DegreeProfile p = analyze(hat);
    e.regular16 = p.is_regular && p.regularity == (n + 1) * k;
    e.lower_bound =
        0.5 * std::min(expander_f(n, k, e.base_a), expander_f(n, k, 2.0 * k));
    e.monotone = e.hat_a >= e.corona_a - kConnectedEps;
    e.bound_ok = e.hat_a >= e.lower_bound - kConnectedEps;
    result.entries.push_back(e);
    hats.push_back(hat);
  }

  if (eps) {
    result.eps = *eps;
  } else {
    result.eps_measured = true;
    result.eps = result.entries.front().base_a;
    for (const auto& e : result.entries) result.eps = std::min(result.eps, e.base_a);
  }

  result.report = family_report(hats, n, k, result.eps);
  result.pass = result.report.pass;
  for (const auto& e : result.entries)
    result.pass = result.pass && e.regular16 && e.connected && e.monotone && e.bound_ok;
  return result;
}

}  // namespace corona
