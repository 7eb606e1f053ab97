#include "corona/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corona {

namespace {

mpz_class trace_of(const std::vector<mpz_class>& b, int n) {
  mpz_class t = 0;
  for (int i = 0; i < n; ++i) t += b[i * static_cast<size_t>(n) + i];
  return t;
}

// EISPACK-style balancing: diagonal similarity with powers of two, so
// eigenvalues are untouched but row/column norms are comparable.
void balance_in_place(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0 || r == 0) continue;
      double f = 1.0;
      const double s = c + r;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

IntPoly char_poly_exact(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<mpz_class> coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));

  // Faddeev-LeVerrier: B_1 = M, c_{n-k} = -tr(B_k)/k, B_{k+1} = M(B_k + c_{n-k} I).
  // Every division is exact over the integers.
  const size_t nn = static_cast<size_t>(n);
  std::vector<mpz_class> b(nn * nn), next(nn * nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i * nn + j] = m(i, j);
  coeffs[n - 1] = -trace_of(b, n);

  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) b[i * nn + i] += coeffs[n - k + 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_class& acc = next[i * nn + j];
        acc = 0;
        for (int l = 0; l < n; ++l) {
          const int v = m(i, l);
          if (v > 0)
            mpz_addmul_ui(acc.get_mpz_t(), b[l * nn + j].get_mpz_t(), static_cast<unsigned long>(v));
          else if (v < 0)
            mpz_submul_ui(acc.get_mpz_t(), b[l * nn + j].get_mpz_t(), static_cast<unsigned long>(-v));
        }
      }
    b.swap(next);
    mpz_class tr = trace_of(b, n);
    mpz_class ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = -ck;
  }
  return IntPoly(std::move(coeffs));
}

Spectrum SymEigen::spectrum(double tol) const {
  std::vector<double> v(values.data(), values.data() + values.size());
  return cluster_spectrum(std::move(v), tol);
}

SymEigen eigensolve_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigensolve needs a square matrix");
  const double skew = m.size() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12)
    throw std::invalid_argument("matrix is not symmetric (max skew " + std::to_string(skew) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RootSet poly_real_roots(std::vector<double> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("root finding on the zero polynomial");
  if (coeffs.size() == 1) throw std::invalid_argument("root finding needs degree >= 1");

  RootSet out;
  while (coeffs.size() > 1 && coeffs.front() == 0.0) {
    out.real_roots.push_back(0.0);
    coeffs.erase(coeffs.begin());
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 1) {
    out.real_roots.push_back(-coeffs[0] / coeffs[1]);
  } else if (n >= 2) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
    balance_in_place(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigensolver failed");

    std::vector<double> dcoeffs(n);
    for (int i = 1; i <= n; ++i) dcoeffs[i - 1] = i * coeffs[i];
    for (int i = 0; i < n; ++i) {
      std::complex<double> z = solver.eigenvalues()(i);
      const std::complex<double> dz = horner(dcoeffs, z);
      if (std::abs(dz) > 0) z -= horner(coeffs, z) / dz;  // one Newton step
      if (std::abs(z.imag()) <= 1e-6 * (1.0 + std::abs(z.real())))
        out.real_roots.push_back(z.real());
      else
        out.complex_roots.push_back(z);
    }
  }
  std::sort(out.real_roots.begin(), out.real_roots.end());
  return out;
}

}  // namespace corona
