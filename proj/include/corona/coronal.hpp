#pragma once

#include <Eigen/Core>

#include "corona/poly.hpp"

namespace corona {

/// The all-ones quadratic form of (xI - M)^{-1} as an exact rational function.
/// Returns the unreduced pair (N, D) with D = char_poly_exact(M) and
/// deg N < dim(M); call .reduce() for the lowest-terms copy. Downstream
/// spectrum assembly always consumes the unreduced pair so per-factor
/// polynomials keep full degree and pole cancellations resolve implicitly.
RationalFunction coronal_exact(const Eigen::MatrixXi& m);

/// Exact value of the form at an integer point outside the spectrum, by a
/// rational linear solve. Throws if x0 makes the matrix singular.
mpq_class coronal_value_at(const Eigen::MatrixXi& m, const mpz_class& x0);

// Closed forms for the shapes that admit one. All returned unreduced-flagged
// (they may share factors when parameters coincide, e.g. p == q).

/// n/(x - t): any n x n matrix whose row sums all equal t.
RationalFunction coronal_constant_row_sum(int n, long t);
/// ((p+q)x + 2pq) / (x^2 - pq): adjacency of the complete bipartite graph.
RationalFunction coronal_complete_bipartite_adjacency(int p, int q);
/// ((p+q)x - (p-q)^2) / (x^2 - (p+q)x): signless Laplacian of the same.
RationalFunction coronal_complete_bipartite_signless(int p, int q);

/// Dispatcher for the CLI: shape is "constant-row-sum" (params n, t),
/// "kpq-A" or "kpq-Q" (params p, q).
RationalFunction coronal_closed_form(const std::string& shape, const std::vector<long>& params);

}  // namespace corona
