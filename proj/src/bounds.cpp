#include "corona/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "corona/expander.hpp"
#include "corona/products.hpp"

namespace corona {

namespace {

Fraction make_fraction(long long num, long long den) {
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

// a/b < c/d for positive denominators.
bool fraction_less(const Fraction& a, const Fraction& b) {
  return a.num * b.den < b.num * a.den;
}

}  // namespace

double bisection_bound(int m, int n, int k, double a_g) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("bisection bound needs m, n, k >= 1");
  if (a_g < 0) throw std::invalid_argument("bisection bound needs a_g >= 0");
  const double fmin = std::min(expander_f(n, k, a_g), expander_f(n, k, 2.0 * k));
  const long order = static_cast<long>(m) * (n + 1);
  if (order % 2 == 0) return static_cast<double>(order) / 8.0 * fmin;
  return (static_cast<double>(order) * order - 1.0) / (8.0 * order) * fmin;
}

double vertex_expansion_bound(int n, int k, double a_g) {
  if (n < 1 || k < 1) throw std::invalid_argument("vertex expansion bound needs n, k >= 1");
  if (a_g < 0) throw std::invalid_argument("vertex expansion bound needs a_g >= 0");
  const double fmin = std::min(expander_f(n, k, a_g), expander_f(n, k, 2.0 * k));
  return fmin / (static_cast<double>(n + 1) * k + fmin);
}

PartitionOracle brute_force_partition_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("partition oracle is exhaustive; limited to 20 vertices");
  if (n < 2) throw std::invalid_argument("partition oracle needs at least 2 vertices");

  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  auto cut_edges = [&](uint32_t side) {
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (side & (1u << v)) cut += __builtin_popcount(adj[v] & ~side);
    return cut;
  };
  auto boundary_vertices = [&](uint32_t side) {
    uint32_t touched = 0;
    for (int v = 0; v < n; ++v)
      if (side & (1u << v)) touched |= adj[v];
    return __builtin_popcount(touched & ~side);
  };

  const int half_lo = n / 2;
  const int half_hi = n - half_lo;

  PartitionOracle oracle;
  bool have_bw = false, have_ratio = false;
  Fraction best_ivx, best_iso;

  // Pin vertex 0 into the enumerated side; the complement of each mask covers
  // the subsets without vertex 0.
  const uint32_t full = (1u << n) - 1;
  for (uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const uint32_t side = (rest << 1) | 1u;
    const int size = __builtin_popcount(side);
    const int cut = cut_edges(side);

    if (size == half_lo || size == half_hi) {
      if (!have_bw || cut < oracle.bisection_width) oracle.bisection_width = cut;
      have_bw = true;
    }
    for (const uint32_t s : {side, full & ~side}) {
      const int sz = __builtin_popcount(s);
      if (sz < 1 || 2 * sz > n) continue;
      const Fraction iso = make_fraction(cut, sz);
      const Fraction ivx = make_fraction(boundary_vertices(s), sz);
      if (!have_ratio || fraction_less(iso, best_iso)) best_iso = iso;
      if (!have_ratio || fraction_less(ivx, best_ivx)) best_ivx = ivx;
      have_ratio = true;
    }
  }
  oracle.isoperimetric = best_iso;
  oracle.vertex_expansion = best_ivx;
  return oracle;
}

BoundsReport corona_bounds(const Graph& g, const Graph& h, bool with_oracle) {
  const DegreeProfile pg = analyze(g);
  if (!pg.is_regular || pg.regularity < 1)
    throw std::invalid_argument("corona bounds need a regular base of degree >= 1");

  BoundsReport rep;
  rep.m = g.vertex_count();
  rep.n = h.vertex_count();
  rep.k = pg.regularity;
  rep.a_g = algebraic_connectivity(g).a;
  rep.bw_lower = bisection_bound(rep.m, rep.n, rep.k, rep.a_g);
  rep.ivx_lower = vertex_expansion_bound(rep.n, rep.k, rep.a_g);

  if (with_oracle) {
    const Graph product = neighbourhood_corona(g, h);
    rep.oracle = brute_force_partition_oracle(product);
    rep.consistent = rep.oracle->bisection_width >= rep.bw_lower - 1e-9 &&
                     rep.oracle->vertex_expansion.value() >= rep.ivx_lower - 1e-9;
  }
  return rep;
}

MoharCheck mohar_check(const Graph& g) {
  MoharCheck check;
  const int n = g.vertex_count();
  const long m = g.edge_count();
  // Excluded cases: K1, K2, K3.
  const bool complete_small = n <= 3 && 2 * m == static_cast<long>(n) * (n - 1);
  check.applicable = !complete_small;
  if (n >= 2) {
    check.a = algebraic_connectivity(g).a;
    const int max_deg = analyze(g).max_degree;
    check.lower = check.a / 2;
    check.upper = std::sqrt(std::max(check.a * (2.0 * max_deg - check.a), 0.0));
    check.iso = brute_force_partition_oracle(g).isoperimetric;
    const double iso = check.iso.value();
    check.holds = check.lower <= iso + 1e-9 && iso <= check.upper + 1e-9;
  }
  return check;
}

}  // namespace corona
