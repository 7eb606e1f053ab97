#pragma once

#include <optional>

#include "corona/graph.hpp"

namespace corona {

/// Exact reduced fraction for the partition-oracle ratios.
struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Lower bound on the bisection width of the corona of an m-vertex k-regular
/// base (algebraic connectivity a_g) with an n-vertex copy graph. Picks the
/// even or odd branch by the parity of the product order m(n+1).
double bisection_bound(int m, int n, int k, double a_g);

/// Lower bound on the vertex expansion of the same corona; lies in [0, 1).
double vertex_expansion_bound(int n, int k, double a_g);

struct PartitionOracle {
  int bisection_width = 0;      // min cut over splits of sizes floor(n/2), ceil(n/2)
  Fraction vertex_expansion;    // min |boundary vertices| / |S| over 1 <= |S| <= n/2
  Fraction isoperimetric;       // min |cut edges| / |S| over the same range
};

/// Exhaustive subset sweep; vertex 0 is pinned to one side and both sides of
/// each split are scored, which covers all subsets. Throws above 20 vertices.
PartitionOracle brute_force_partition_oracle(const Graph& g);

struct BoundsReport {
  int m = 0;  // base order
  int n = 0;  // copy order
  int k = 0;  // base regularity
  double a_g = 0;
  double bw_lower = 0;
  double ivx_lower = 0;
  std::optional<PartitionOracle> oracle;
  bool consistent = true;  // oracle values respect the bounds when present
};

/// Bounds for the neighbourhood corona g * h, with the exhaustive oracle run
/// on the explicit product when requested (product must stay within 20 vertices).
BoundsReport corona_bounds(const Graph& g, const Graph& h, bool with_oracle);

/// a(G)/2 <= i(G) <= sqrt(a(G) (2 max_degree - a(G))); holds for every graph
/// other than K1, K2, K3.
struct MoharCheck {
  double a = 0;
  double lower = 0;     // a / 2
  double upper = 0;     // sqrt(a (2 max_degree - a))
  Fraction iso;         // oracle isoperimetric number
  bool applicable = false;  // false exactly for K1, K2, K3
  bool holds = false;
};
MoharCheck mohar_check(const Graph& g);

}  // namespace corona
