#include "corona/coronal.hpp"

#include <stdexcept>
#include <vector>

#include "corona/exact.hpp"

namespace corona {

namespace {

// Exact solve of (x0 I - M) y = 1 by rational Gaussian elimination, then the
// form value is sum(y). Throws std::domain_error when singular.
mpq_class ones_form_value(const Eigen::MatrixXi& m, const mpz_class& x0) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = -m(i, j);
    a[i][i] += x0;
    a[i][n] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular system: x0 is an eigenvalue");
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  mpq_class total = 0;
  for (int i = 0; i < n; ++i) total += a[i][n] / a[i][i];
  return total;
}

}  // namespace

mpq_class coronal_value_at(const Eigen::MatrixXi& m, const mpz_class& x0) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("coronal needs a square matrix of dimension >= 1");
  return ones_form_value(m, x0);
}

RationalFunction coronal_exact(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("coronal needs a square matrix of dimension >= 1");
  const int n = static_cast<int>(m.rows());
  const IntPoly den = char_poly_exact(m);

  // N(x) = form(x) * D(x) is an integer polynomial of degree < n; recover it
  // by interpolation at n integer nodes 0, 1, -1, 2, -2, ... skipping integer
  // eigenvalues (detected exactly by D(node) == 0).
  std::vector<mpz_class> nodes;
  std::vector<mpq_class> values;
  for (long trial = 0; static_cast<int>(nodes.size()) < n; ++trial) {
    const mpz_class x0 = trial == 0 ? 0 : (trial % 2 == 1 ? (trial + 1) / 2 : -trial / 2);
    const mpz_class d_at = den(x0);
    if (d_at == 0) continue;
    nodes.push_back(x0);
    values.push_back(ones_form_value(m, x0) * mpq_class(d_at));
  }

  // Newton interpolation over Q.
  std::vector<mpq_class> divided(values);
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / mpq_class(nodes[i] - nodes[i - level]);

  std::vector<mpq_class> poly;  // ascending, rational while assembling
  for (int i = n - 1; i >= 0; --i) {
    // poly = poly * (x - nodes[i]) + divided[i]
    std::vector<mpq_class> shifted(poly.size() + 1);
    for (size_t j = 0; j < poly.size(); ++j) {
      shifted[j + 1] += poly[j];
      shifted[j] -= poly[j] * mpq_class(nodes[i]);
    }
    if (shifted.empty()) shifted.resize(1);
    shifted[0] += divided[i];
    poly = std::move(shifted);
  }

  std::vector<mpz_class> num_coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1)
      throw std::domain_error("coronal numerator interpolation produced a non-integer");
    num_coeffs[i] = poly[i].get_num();
  }
  IntPoly num(std::move(num_coeffs));
  if (num.degree() >= n) throw std::domain_error("coronal numerator degree out of range");
  return {std::move(num), den, false};
}

RationalFunction coronal_constant_row_sum(int n, long t) {
  if (n < 1) throw std::invalid_argument("constant-row-sum coronal needs n >= 1");
  return {IntPoly({n}), IntPoly({-t, 1}), false};
}

RationalFunction coronal_complete_bipartite_adjacency(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite coronal needs p, q >= 1");
  const long pl = p, ql = q;
  return {IntPoly({2 * pl * ql, pl + ql}), IntPoly({-pl * ql, 0, 1}), false};
}

RationalFunction coronal_complete_bipartite_signless(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite coronal needs p, q >= 1");
  const long pl = p, ql = q;
  return {IntPoly({-(pl - ql) * (pl - ql), pl + ql}), IntPoly({0, -(pl + ql), 1}), false};
}

RationalFunction coronal_closed_form(const std::string& shape, const std::vector<long>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("coronal shape '" + shape + "' expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (shape == "constant-row-sum") {
    want(2);
    return coronal_constant_row_sum(static_cast<int>(params[0]), params[1]);
  }
  if (shape == "kpq-A") {
    want(2);
    return coronal_complete_bipartite_adjacency(static_cast<int>(params[0]),
                                                static_cast<int>(params[1]));
  }
  if (shape == "kpq-Q") {
    want(2);
    return coronal_complete_bipartite_signless(static_cast<int>(params[0]),
                                               static_cast<int>(params[1]));
  }
  throw std::invalid_argument("unknown coronal shape: " + shape);
}

}  // namespace corona
