#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// f_{n,k}(x) = x + (n+1)k - sqrt((4n+1)x^2 - 2(3n+1)kx + ((n+1)k)^2).
/// Total over the reals; the radicand is nonnegative for all x.
double expander_f(int n, int k, double x);

/// g_{n,k}(x) = x + nk + 2 - sqrt((x + nk + 2)^2 - 4(n+2)x).
double expander_g(int n, int k, double x);

/// delta(n, k, eps) = min(f_{n,k}(eps), f_{n,k}(2k)) / 2.
double expander_delta(int n, int k, double eps);

struct ConnectivityReport {
  double a;        // second-smallest Laplacian eigenvalue
  double mu_max;   // largest Laplacian eigenvalue
  bool connected;  // a > 0 up to numerical noise
};

/// Throws on fewer than two vertices.
ConnectivityReport algebraic_connectivity(const Graph& g);

struct NcConnectivity {
  double exact;        // min(f(a(g)), f(mu_max(g))) / 2, equals a(g * h)
  double lower_bound;  // min(f(a(g)), f(2k)) / 2
};

/// Algebraic connectivity of the neighbourhood corona g * h from base-graph
/// data alone. Requires g connected and regular, h regular and not complete.
NcConnectivity nc_alg_connectivity(const Graph& g, const Graph& h);

/// Finite group presented as operation tables, plus a symmetric generating
/// set; enough to build Cayley graphs and the regularized corona on them.
struct CayleySpec {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;  // mul[i][j] = index of element i * j
  std::vector<int> inv;
  std::vector<int> gens;   // symmetric: closed under inverse, identity excluded
  std::vector<int> gens0;  // optional distinguished subset of gens

  void validate() const;  // throws std::invalid_argument on a broken table
  Graph cayley_graph() const;
};

/// All 2x2 matrices over Z_m with determinant 1, generated set
/// {a, a^-1, b, b^-1} for the two unit shear matrices. m >= 3: modulo 2 the
/// shears are involutions and the graph degenerates.
CayleySpec sl2_cayley(int m);

/// Cyclic group Z_n with generators {1, -1}; its Cayley graph is the n-cycle.
CayleySpec cyclic_cayley(int n);

/// Regularizes the neighbourhood corona g * h up to degree (n+1)k by adding,
/// per u-edge, a circulant bipartite bundle (offsets 1..n-s-1) between the two
/// copies, and per w-edge the offset-0 perfect matching; the offset sets are
/// disjoint by construction. Requires k = deg(g) and r = deg(h) even, u
/// k-regular and w (k-t)-regular on g's vertex set, where r = s k + t.
Graph regularized_corona(const Graph& g, const Graph& h, const Graph& u, const Graph& w);

/// The same augmentation built directly from group data: vertices are
/// (group element, copy coordinate) pairs with an adjoined coordinate for the
/// base layer; s0 (size |S| - |T|) supplies the same-coordinate matchings.
/// Requires |T| < |S|, s0 a symmetric subset of S, and n*k even.
Graph cayley_regularized_corona(const CayleySpec& g_spec, const CayleySpec& h_spec,
                                const std::vector<int>& s0);

struct FamilyGraphEntry {
  std::string label;
  int order = 0;
  int degree = -1;  // -1 when irregular
  bool regular = false;
  bool connected = false;
  double a = 0;
  bool pass = false;
  std::string diagnostic;
};

struct FamilyReport {
  int n = 0;
  int k = 0;
  double eps = 0;
  double delta = 0;
  int expected_degree = 0;  // (n+1)k
  std::vector<FamilyGraphEntry> graphs;
  double min_a = 0;
  bool pass = false;
};

/// Certifies each graph as (n+1)k-regular and connected with algebraic
/// connectivity at least delta(n, k, eps).
FamilyReport family_report(const std::vector<Graph>& graphs, int n, int k, double eps);

struct Sl2FamilyEntry {
  int m = 0;
  int group_order = 0;
  double base_a = 0;     // a of the 4-regular Cayley graph
  double corona_a = 0;   // a of its corona with the triangle
  double hat_a = 0;      // a of the augmented 16-regular graph
  double lower_bound = 0;  // min(f(base_a), f(2k)) / 2
  bool regular16 = false;
  bool connected = false;
  bool monotone = false;  // hat_a >= corona_a
  bool bound_ok = false;  // hat_a >= lower_bound (up to 1e-9)
};

struct Sl2FamilyResult {
  std::vector<Sl2FamilyEntry> entries;
  double eps = 0;  // supplied, or the measured min base_a
  bool eps_measured = false;
  FamilyReport report;
  bool pass = false;
};

/// Builds the 16-regular family over SL2(Z_m) for m in [m_lo, m_hi] with the
/// 3-cycle as copy graph; eps defaults to the measured minimum of the base
/// connectivities, which is recorded in the result.
Sl2FamilyResult sl2_family(int m_lo, int m_hi, std::optional<double> eps = std::nullopt);

}  // namespace corona
