#pragma once

#include <optional>
#include <string>

#include "corona/graph.hpp"
#include "corona/poly.hpp"

namespace corona {

enum class CospectralMode { ALeft, ARight, Q };

CospectralMode cospectral_mode_from_string(std::string_view s);  // "A-left" | "A-right" | "Q"
std::string to_string(CospectralMode mode);

struct CospectralCertificate {
  CospectralMode mode;
  Graph left;   // first corona product
  Graph right;  // second corona product
  IntPoly char_left;
  IntPoly char_right;
  bool equal = false;                     // exact coefficient-by-coefficient
  std::optional<bool> coronal_check;      // exact coronal equality, when the mode needs it
  std::string detail;
};

/// Exact characteristic-polynomial comparison of the kind-matrices.
struct CospectralCheck {
  bool equal;
  IntPoly char_a;
  IntPoly char_b;
};
CospectralCheck verify_cospectral(const Graph& a, const Graph& b, MatrixKind kind);

/// Builds a certified cospectral pair of corona products.
///   A-left:  g, g_prime A-cospectral (verified exactly) -> g*h vs g_prime*h, A-certified.
///   A-right: additionally requires equal adjacency coronals -> h*g vs h*g_prime.
///   Q:       g, g_prime Q-cospectral regular graphs -> g*h vs g_prime*h, Q-certified;
///            the exact Q-coronal equality is recorded as well.
/// Throws std::invalid_argument when a precondition fails verification.
CospectralCertificate generate_cospectral_pair(CospectralMode mode, const Graph& g,
                                               const Graph& g_prime, const Graph& h);

}  // namespace corona
