#include "corona/cospectral.hpp"

#include <stdexcept>

#include "corona/coronal.hpp"
#include "corona/exact.hpp"
#include "corona/products.hpp"

namespace corona {

CospectralMode cospectral_mode_from_string(std::string_view s) {
  if (s == "A-left") return CospectralMode::ALeft;
  if (s == "A-right") return CospectralMode::ARight;
  if (s == "Q") return CospectralMode::Q;
  throw std::invalid_argument("unknown cospectral mode: " + std::string(s));
}

std::string to_string(CospectralMode mode) {
  switch (mode) {
    case CospectralMode::ALeft: return "A-left";
    case CospectralMode::ARight: return "A-right";
    case CospectralMode::Q: return "Q";
  }
  return "?";
}

CospectralCheck verify_cospectral(const Graph& a, const Graph& b, MatrixKind kind) {
  CospectralCheck check{false, char_poly_exact(matrix_of(a, kind)),
                        char_poly_exact(matrix_of(b, kind))};
  check.equal = check.char_a == check.char_b;
  return check;
}

CospectralCertificate generate_cospectral_pair(CospectralMode mode, const Graph& g,
                                               const Graph& g_prime, const Graph& h) {
  const MatrixKind kind =
      mode == CospectralMode::Q ? MatrixKind::SignlessLaplacian : MatrixKind::Adjacency;

  if (!verify_cospectral(g, g_prime, kind).equal)
    throw std::invalid_argument("seed graphs are not " + to_string(kind) + "-cospectral");

  std::optional<bool> coronal_check;
  if (mode == CospectralMode::ARight || mode == CospectralMode::Q) {
    const bool same = coronal_exact(matrix_of(g, kind))
                          .same_function(coronal_exact(matrix_of(g_prime, kind)));
    coronal_check = same;
    if (mode == CospectralMode::ARight && !same)
      throw std::invalid_argument("seed graphs have different adjacency coronals");
  }
  if (mode == CospectralMode::Q) {
    if (!analyze(g).is_regular || !analyze(g_prime).is_regular)
      throw std::invalid_argument("Q-mode seeds must be regular");
  }

  // A-right puts the shared graph on the base side; the other modes vary the base.
  const Graph left = mode == CospectralMode::ARight ? neighbourhood_corona(h, g)
                                                    : neighbourhood_corona(g, h);
  const Graph right = mode == CospectralMode::ARight ? neighbourhood_corona(h, g_prime)
                                                     : neighbourhood_corona(g_prime, h);

  CospectralCertificate cert{mode,
                             left,
                             right,
                             char_poly_exact(matrix_of(left, kind)),
                             char_poly_exact(matrix_of(right, kind)),
                             false,
                             coronal_check,
                             ""};
  cert.equal = cert.char_left == cert.char_right;
  cert.detail = to_string(kind) + "-characteristic polynomials " +
                (cert.equal ? "identical" : "differ");
  return cert;
}

}  // namespace corona
