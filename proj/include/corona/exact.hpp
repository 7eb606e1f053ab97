#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "corona/poly.hpp"
#include "corona/spectrum.hpp"

namespace corona {

/// det(xI - M), exact, via the Faddeev-LeVerrier recurrence over
/// arbitrary-precision integers. Throws on non-square input.
IntPoly char_poly_exact(const Eigen::MatrixXi& m);

struct SymEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, col(i) pairs with values[i]
  Spectrum spectrum(double tol = kDefaultClusterTol) const;
};

/// Dense symmetric eigensolve: the brute-force oracle every closed form is
/// checked against. Throws if m deviates from symmetry by more than 1e-12.
SymEigen eigensolve_sym(const Eigen::MatrixXd& m);

struct RootSet {
  std::vector<double> real_roots;                   // ascending
  std::vector<std::complex<double>> complex_roots;  // nonreal eigenvalues, reported
                                                    // so symmetry violations surface
};

/// Roots of a real-coefficient polynomial (ascending coefficients) via a
/// balanced companion matrix, each real root polished by one Newton step.
/// Exact zero leading coefficients are trimmed, exact zero trailing
/// coefficients become roots at 0. Throws on the zero polynomial or degree 0.
RootSet poly_real_roots(std::vector<double> coeffs);

}  // namespace corona
