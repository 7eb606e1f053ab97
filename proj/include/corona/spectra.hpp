#pragma once

#include <string>
#include <vector>

#include "corona/exact.hpp"
#include "corona/graph.hpp"
#include "corona/products.hpp"

namespace corona {

/// Characteristic polynomial of a neighbourhood corona in factored form: one
/// degree-(n2+1) factor per eigenvalue of g1 (repeats included), so the factor
/// degrees sum to n1*(n2+1).
struct FactoredCharPoly {
  MatrixKind kind;
  std::string provenance;
  std::vector<std::vector<double>> outer_factors;  // ascending coefficients
  Spectrum spectrum;
};

/// Spectrum of the neighbourhood corona g1 * g2 from the factorized
/// characteristic polynomial. Kind A accepts arbitrary graphs; kinds L and Q
/// require g1 regular with degree >= 1 on >= 2 vertices (throws otherwise).
FactoredCharPoly nc_spectrum(MatrixKind kind, const Graph& g1, const Graph& g2,
                             double cluster_tol = kDefaultClusterTol);

struct DiscriminantProbe {
  double lambda;        // eigenvalue of g1 feeding the quadratic
  double squared_form;  // (lambda - r2)^2 + 4*n2*lambda^2, the form used
  double linear_form;   // (lambda - r2)^2 + 4*n2*lambda, goes negative on real inputs
};

struct RegularAdjacencyFastpath {
  Spectrum spectrum;
  std::vector<DiscriminantProbe> probes;
  bool linear_form_negative_somewhere = false;
};

/// Explicit A-spectrum for regular g2 (degree >= 1, n2 >= 2): kept eigenvalues
/// of g2 plus quadratic-formula pairs per eigenvalue of g1. The quadratic
/// discriminant uses the squared-eigenvalue form; the probe records show the
/// linear variant produces negative discriminants on valid inputs.
RegularAdjacencyFastpath nc_spectrum_fast_a_regular(const Graph& g1, const Graph& g2,
                                                    double cluster_tol = kDefaultClusterTol);

/// Explicit A-spectrum for g2 = K_{p,q}: zeros plus cubic roots per eigenvalue of g1.
Spectrum nc_spectrum_fast_a_kpq(const Graph& g1, int p, int q,
                                double cluster_tol = kDefaultClusterTol);

/// Explicit Q-spectrum for regular g1 and regular g2 (both degrees >= 1, n1, n2 >= 2).
Spectrum nc_spectrum_fast_q_regular(const Graph& g1, const Graph& g2,
                                    double cluster_tol = kDefaultClusterTol);

/// Explicit Q-spectrum for regular g1 and g2 = K_{p,q}.
Spectrum nc_spectrum_fast_q_kpq(const Graph& g1, int p, int q,
                                double cluster_tol = kDefaultClusterTol);

/// Explicit L-spectrum for regular g1 and arbitrary g2.
Spectrum nc_spectrum_fast_l(const Graph& g1, const Graph& g2,
                            double cluster_tol = kDefaultClusterTol);

enum class Fastpath {
  RegularCopyAdjacency,        // g2 regular
  CompleteBipartiteAdjacency,  // g2 = K_{p,q}
  RegularPairSignless,         // g1, g2 regular
  CompleteBipartiteSignless,   // g1 regular, g2 = K_{p,q}
  LaplacianAnyCopy,            // g1 regular
};

Fastpath fastpath_from_string(std::string_view s);  // regular-a|kpq-a|regular-q|kpq-q|l

/// Dispatcher over the explicit routes; complete-bipartite parameters are
/// recovered from g2 (which must then actually be a K_{p,q}).
Spectrum nc_spectrum_fastpath(Fastpath which, const Graph& g1, const Graph& g2,
                              double cluster_tol = kDefaultClusterTol);

/// L-spectrum of the edge corona g1 <> g2 for g1 regular of degree >= 2 and
/// g2 regular: fixed eigenvalue 2, shifted g2 eigenvalues, and quadratic pairs
/// per Laplacian eigenvalue of g1.
Spectrum edge_corona_l_spectrum(const Graph& g1, const Graph& g2,
                                double cluster_tol = kDefaultClusterTol);

struct VerificationRecord {
  std::string kind;  // "A", "L", "Q", or "EC-L"
  int n1 = 0;
  int n2 = 0;
  int product_order = 0;
  double tol = 0;
  double max_abs_error = 0;
  bool multiplicities_match = false;
  bool pass = false;
  std::vector<std::pair<double, double>> mismatches;  // (closed, oracle) offenders
};

/// Sorted-multiset comparison of a closed-form spectrum against an oracle
/// spectrum; mismatches are reported, never thrown.
VerificationRecord verify_spectra(const std::string& kind, int n1, int n2,
                                  const Spectrum& closed, const Spectrum& oracle, double tol);

/// Builds the product explicitly, eigensolves it, and compares.
VerificationRecord verify_nc_spectrum(MatrixKind kind, const Graph& g1, const Graph& g2,
                                      double tol = kDefaultVerifyTol,
                                      double cluster_tol = kDefaultClusterTol);

VerificationRecord verify_ec_spectrum(const Graph& g1, const Graph& g2,
                                      double tol = kDefaultVerifyTol,
                                      double cluster_tol = kDefaultClusterTol);

}  // namespace corona
