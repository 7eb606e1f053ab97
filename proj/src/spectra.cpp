#include "corona/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "corona/coronal.hpp"

namespace corona {

namespace {

// Coupling terms are squares of eigenvalue expressions; anything below this
// is an exact structural zero (true zeros land near 1e-28, genuine couplings
// stay far above 1e-12).
constexpr double kCouplingZero = 1e-16;

// Eigenvalues of g1 grouped into (value, multiplicity); exact repeats land
// within 1e-12 of each other, so a tight tolerance recovers multiplicities.
std::vector<std::pair<double, int>> grouped_eigenvalues(const Graph& g, MatrixKind kind) {
  const SymEigen eig = eigensolve_sym(matrix_of(g, kind).cast<double>());
  const Spectrum s = eig.spectrum(1e-9);
  std::vector<std::pair<double, int>> out;
  out.reserve(s.entries.size());
  for (const auto& e : s.entries) out.emplace_back(e.value, e.multiplicity);
  return out;
}

std::vector<double> real_roots_of_exact(const IntPoly& p) {
  if (p.degree() < 1) return {};
  RootSet roots = poly_real_roots(p.as_doubles());
  if (!roots.complex_roots.empty())
    throw std::runtime_error("unexpected nonreal root of an exact symmetric factor");
  return roots.real_roots;
}

// Shared per-(g2, kind) data: the unreduced coronal pair, its gcd split, and
// the numeric roots of both exact parts.
struct CoronalKit {
  IntPoly den, num;          // unreduced (N, D), argument already shifted for L/Q
  IntPoly shared;            // monic_gcd(num, den)
  IntPoly den_red, num_red;  // coprime parts; den_red is square-free
  std::vector<std::pair<double, int>> shared_roots;  // with exact multiplicities
  std::vector<double> pole_roots;                    // simple roots of den_red
};

CoronalKit make_kit(const Graph& g2, MatrixKind kind, long arg_shift) {
  CoronalKit kit;
  RationalFunction cor = coronal_exact(matrix_of(g2, kind));
  if (arg_shift != 0) {
    cor.den = cor.den.composed_with_x_plus(mpz_class(-arg_shift));
    cor.num = cor.num.composed_with_x_plus(mpz_class(-arg_shift));
  }
  kit.den = cor.den;
  kit.num = cor.num;
  kit.shared = monic_gcd(kit.num, kit.den);
  kit.den_red = kit.den.divide_exact(kit.shared);
  kit.num_red = kit.num.divide_exact(kit.shared);
  for (const auto& [part, mult] : square_free_decomposition(kit.shared))
    for (double r : real_roots_of_exact(part)) kit.shared_roots.emplace_back(r, mult);
  kit.pole_roots = real_roots_of_exact(kit.den_red);
  return kit;
}

// (x - offset) * d - coupling * n, in doubles.
std::vector<double> outer_factor(double offset, const std::vector<double>& d, double coupling,
                                 const std::vector<double>& n) {
  std::vector<double> f(d.size() + 1, 0.0);
  for (size_t i = 0; i < d.size(); ++i) {
    f[i + 1] += d[i];
    f[i] -= offset * d[i];
  }
  for (size_t i = 0; i < n.size(); ++i) f[i] -= coupling * n[i];
  return f;
}

// Roots of one factor, exact parts deflated: the shared roots are appended by
// the caller; here we solve (x - offset) * den_red - coupling * num_red.
std::vector<double> coupled_roots(const CoronalKit& kit, double offset, double coupling) {
  if (coupling < kCouplingZero) {
    std::vector<double> roots = kit.pole_roots;
    roots.push_back(offset);
    return roots;
  }
  const std::vector<double> c =
      outer_factor(offset, kit.den_red.as_doubles(), coupling, kit.num_red.as_doubles());
  RootSet roots = poly_real_roots(c);
  if (!roots.complex_roots.empty())
    throw std::runtime_error("coupled corona factor produced nonreal roots");
  return roots.real_roots;
}

void require_regular_base(const Graph& g1, const char* what) {
  const DegreeProfile p = analyze(g1);
  if (!p.is_regular || p.regularity < 1 || g1.vertex_count() < 2)
    throw std::invalid_argument(std::string(what) +
                                " requires a regular base graph of degree >= 1 on >= 2 vertices");
}

int regular_degree(const Graph& g, const char* what) {
  const DegreeProfile p = analyze(g);
  if (!p.is_regular)
    throw std::invalid_argument(std::string(what) + " requires a regular graph");
  return p.regularity;
}

std::pair<double, double> quadratic_roots(double b, double c) {
  // x^2 + b x + c with a real spectrum behind it; clamp tiny negative noise.
  double disc = b * b - 4 * c;
  if (disc < 0 && disc > -1e-9 * (1 + b * b)) disc = 0;
  if (disc < 0) throw std::runtime_error("negative discriminant in explicit spectrum");
  const double s = std::sqrt(disc);
  return {(-b - s) / 2, (-b + s) / 2};
}

}  // namespace

FactoredCharPoly nc_spectrum(MatrixKind kind, const Graph& g1, const Graph& g2,
                             double cluster_tol) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();

  long r1 = 0;
  if (kind != MatrixKind::Adjacency) {
    require_regular_base(g1, "L/Q corona factorization");
    r1 = analyze(g1).regularity;
  }

  const long arg_shift = kind == MatrixKind::Adjacency ? 0 : r1;
  const CoronalKit kit = make_kit(g2, kind, arg_shift);
  const std::vector<double> full_den = kit.den.as_doubles();
  const std::vector<double> full_num = kit.num.as_doubles();

  FactoredCharPoly out;
  out.kind = kind;
  switch (kind) {
    case MatrixKind::Adjacency: out.provenance = "adjacency-factorization"; break;
    case MatrixKind::Laplacian: out.provenance = "laplacian-factorization"; break;
    case MatrixKind::SignlessLaplacian: out.provenance = "signless-factorization"; break;
  }

  std::vector<std::pair<double, int>> roots;
  roots.reserve(n1 * (n2 + 1));
  for (const auto& [base_val, mult] : grouped_eigenvalues(g1, kind)) {
    double offset = 0, coupling = 0;
    switch (kind) {
      case MatrixKind::Adjacency:
        offset = base_val;
        coupling = base_val * base_val;
        break;
      case MatrixKind::Laplacian:
        offset = static_cast<double>(n2) * r1 + base_val;
        coupling = (r1 - base_val) * (r1 - base_val);
        break;
      case MatrixKind::SignlessLaplacian:
        offset = static_cast<double>(n2) * r1 + base_val;
        coupling = (base_val - r1) * (base_val - r1);
        break;
    }
    for (int rep = 0; rep < mult; ++rep)
      out.outer_factors.push_back(outer_factor(offset, full_den, coupling, full_num));
    for (const auto& [r, shared_mult] : kit.shared_roots)
      roots.emplace_back(r, shared_mult * mult);
    for (double r : coupled_roots(kit, offset, coupling)) roots.emplace_back(r, mult);
  }
  out.spectrum = cluster_weighted(std::move(roots), cluster_tol);
  if (out.spectrum.total_multiplicity() != n1 * (n2 + 1))
    throw std::runtime_error("corona factorization lost eigenvalues");
  return out;
}

RegularAdjacencyFastpath nc_spectrum_fast_a_regular(const Graph& g1, const Graph& g2,
                                                    double cluster_tol) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  const int r2 = regular_degree(g2, "regular-copy adjacency fastpath");
  if (n2 < 2 || r2 < 1)
    throw std::invalid_argument(
        "regular-copy adjacency fastpath requires n2 >= 2 and copy degree >= 1");

  RegularAdjacencyFastpath out;
  std::vector<std::pair<double, int>> roots;

  // Kept copy eigenvalues: all but one instance of the top value r2.
  const SymEigen g2_eig = eigensolve_sym(matrix_of(g2, MatrixKind::Adjacency).cast<double>());
  for (int i = 0; i + 1 < n2; ++i) roots.emplace_back(g2_eig.values(i), n1);

  for (const auto& [lambda, mult] : grouped_eigenvalues(g1, MatrixKind::Adjacency)) {
    const double squared = (lambda - r2) * (lambda - r2) + 4.0 * n2 * lambda * lambda;
    const double linear = (lambda - r2) * (lambda - r2) + 4.0 * n2 * lambda;
    out.probes.push_back({lambda, squared, linear});
    if (linear < 0) out.linear_form_negative_somewhere = true;
    const double s = std::sqrt(std::max(squared, 0.0));
    roots.emplace_back((lambda + r2 - s) / 2, mult);
    roots.emplace_back((lambda + r2 + s) / 2, mult);
  }
  out.spectrum = cluster_weighted(std::move(roots), cluster_tol);
  return out;
}

Spectrum nc_spectrum_fast_a_kpq(const Graph& g1, int p, int q, double cluster_tol) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite copy needs p, q >= 1");
  const int n = g1.vertex_count();
  std::vector<std::pair<double, int>> roots;
  if (p + q > 2) roots.emplace_back(0.0, n * (p + q - 2));
  const double pq = static_cast<double>(p) * q;
  for (const auto& [lambda, mult] : grouped_eigenvalues(g1, MatrixKind::Adjacency)) {
    const std::vector<double> cubic = {-pq * lambda * (2 * lambda - 1),
                                       -(pq + (p + q) * lambda * lambda), -lambda, 1.0};
    RootSet rs = poly_real_roots(cubic);
    if (!rs.complex_roots.empty())
      throw std::runtime_error("complete bipartite cubic produced nonreal roots");
    for (double r : rs.real_roots) roots.emplace_back(r, mult);
  }
  return cluster_weighted(std::move(roots), cluster_tol);
}

Spectrum nc_spectrum_fast_q_regular(const Graph& g1, const Graph& g2, double cluster_tol) {
  require_regular_base(g1, "regular-pair signless fastpath");
  const int r1 = analyze(g1).regularity;
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  const int r2 = regular_degree(g2, "regular-pair signless fastpath");
  if (n2 < 2 || r2 < 1)
    throw std::invalid_argument("regular-pair signless fastpath requires n2 >= 2 and copy degree >= 1");

  std::vector<std::pair<double, int>> roots;
  // Kept copy eigenvalues r1 + nu_i(g2), all but the largest nu = 2 r2.
  const SymEigen g2_eig =
      eigensolve_sym(matrix_of(g2, MatrixKind::SignlessLaplacian).cast<double>());
  for (int i = 0; i + 1 < n2; ++i) roots.emplace_back(r1 + g2_eig.values(i), n1);

  for (const auto& [nu, mult] : grouped_eigenvalues(g1, MatrixKind::SignlessLaplacian)) {
    const double b = -((n2 + 1.0) * r1 + 2.0 * r2 + nu);
    const double c = 2.0 * n2 * r1 * r2 + (2.0 * n2 * r1 + 2.0 * r2 + r1) * nu - n2 * nu * nu;
    const auto [lo, hi] = quadratic_roots(b, c);
    roots.emplace_back(lo, mult);
    roots.emplace_back(hi, mult);
  }
  return cluster_weighted(std::move(roots), cluster_tol);
}

Spectrum nc_spectrum_fast_q_kpq(const Graph& g1, int p, int q, double cluster_tol) {
  require_regular_base(g1, "complete-bipartite signless fastpath");
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite copy needs p, q >= 1");
  const int r = analyze(g1).regularity;
  const int n = g1.vertex_count();

  std::vector<std::pair<double, int>> roots;
  if (q > 1) roots.emplace_back(static_cast<double>(p + r), n * (q - 1));
  if (p > 1) roots.emplace_back(static_cast<double>(q + r), n * (p - 1));

  for (const auto& [nu, mult] : grouped_eigenvalues(g1, MatrixKind::SignlessLaplacian)) {
    // (x-r)(x-r-p-q)(x-(p+q)r-nu) - ((p+q)(x-r) - (p-q)^2)(nu-r)^2, ascending.
    const double a0 = r, a1 = r + p + q, a2 = static_cast<double>(p + q) * r + nu;
    std::vector<double> cubic = {-a0 * a1 * a2, a0 * a1 + a0 * a2 + a1 * a2, -(a0 + a1 + a2), 1.0};
    const double w = (nu - r) * (nu - r);
    cubic[0] -= w * (-(p + q) * static_cast<double>(r) - (p - q) * static_cast<double>(p - q));
    cubic[1] -= w * (p + q);
    RootSet rs = poly_real_roots(cubic);
    if (!rs.complex_roots.empty())
      throw std::runtime_error("complete bipartite signless cubic produced nonreal roots");
    for (double root : rs.real_roots) roots.emplace_back(root, mult);
  }
  return cluster_weighted(std::move(roots), cluster_tol);
}

Spectrum nc_spectrum_fast_l(const Graph& g1, const Graph& g2, double cluster_tol) {
  require_regular_base(g1, "laplacian fastpath");
  const int r1 = analyze(g1).regularity;
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();

  std::vector<std::pair<double, int>> roots;
  // Kept copy eigenvalues r1 + mu_i(g2) for i >= 2 (ascending order).
  const SymEigen g2_eig = eigensolve_sym(matrix_of(g2, MatrixKind::Laplacian).cast<double>());
  for (int i = 1; i < n2; ++i) roots.emplace_back(r1 + g2_eig.values(i), n1);

  for (const auto& [mu, mult] : grouped_eigenvalues(g1, MatrixKind::Laplacian)) {
    const double b = -((n2 + 1.0) * r1 + mu);
    const double c = mu * ((2.0 * n2 + 1.0) * r1 - n2 * mu);
    const auto [lo, hi] = quadratic_roots(b, c);
    roots.emplace_back(lo, mult);
    roots.emplace_back(hi, mult);
  }
  return cluster_weighted(std::move(roots), cluster_tol);
}

Fastpath fastpath_from_string(std::string_view s) {
  if (s == "regular-a") return Fastpath::RegularCopyAdjacency;
  if (s == "kpq-a") return Fastpath::CompleteBipartiteAdjacency;
  if (s == "regular-q") return Fastpath::RegularPairSignless;
  if (s == "kpq-q") return Fastpath::CompleteBipartiteSignless;
  if (s == "l") return Fastpath::LaplacianAnyCopy;
  throw std::invalid_argument("unknown fastpath: " + std::string(s));
}

Spectrum nc_spectrum_fastpath(Fastpath which, const Graph& g1, const Graph& g2,
                              double cluster_tol) {
  auto bipartite_params = [&] {
    const auto pq = as_complete_bipartite(g2);
    if (!pq)
      throw std::invalid_argument("this fastpath needs a complete bipartite copy graph");
    return *pq;
  };
  switch (which) {
    case Fastpath::RegularCopyAdjacency:
      return nc_spectrum_fast_a_regular(g1, g2, cluster_tol).spectrum;
    case Fastpath::CompleteBipartiteAdjacency: {
      const auto [p, q] = bipartite_params();
      return nc_spectrum_fast_a_kpq(g1, p, q, cluster_tol);
    }
    case Fastpath::RegularPairSignless:
      return nc_spectrum_fast_q_regular(g1, g2, cluster_tol);
    case Fastpath::CompleteBipartiteSignless: {
      const auto [p, q] = bipartite_params();
      return nc_spectrum_fast_q_kpq(g1, p, q, cluster_tol);
    }
    case Fastpath::LaplacianAnyCopy:
      return nc_spectrum_fast_l(g1, g2, cluster_tol);
  }
  throw std::invalid_argument("unknown fastpath");
}

Spectrum edge_corona_l_spectrum(const Graph& g1, const Graph& g2, double cluster_tol) {
  const DegreeProfile p1 = analyze(g1);
  if (!p1.is_regular || p1.regularity < 2)
    throw std::invalid_argument("edge corona L-spectrum requires base regular of degree >= 2");
  const int r1 = p1.regularity;
  const int n2 = g2.vertex_count();
  regular_degree(g2, "edge corona L-spectrum");

  const int n1 = g1.vertex_count();
  const int m1 = g1.edge_count();

  std::vector<std::pair<double, int>> roots;
  if (m1 > n1) roots.emplace_back(2.0, m1 - n1);
  const SymEigen g2_eig = eigensolve_sym(matrix_of(g2, MatrixKind::Laplacian).cast<double>());
  for (int i = 1; i < n2; ++i) roots.emplace_back(2.0 + g2_eig.values(i), m1);

  for (const auto& [mu, mult] : grouped_eigenvalues(g1, MatrixKind::Laplacian)) {
    const double b = -(static_cast<double>(r1) * n2 + mu + 2.0);
    const double c = (n2 + 2.0) * mu;
    const auto [lo, hi] = quadratic_roots(b, c);
    roots.emplace_back(lo, mult);
    roots.emplace_back(hi, mult);
  }
  return cluster_weighted(std::move(roots), cluster_tol);
}

VerificationRecord verify_spectra(const std::string& kind, int n1, int n2,
                                  const Spectrum& closed, const Spectrum& oracle, double tol) {
  VerificationRecord rec;
  rec.kind = kind;
  rec.n1 = n1;
  rec.n2 = n2;
  rec.tol = tol;
  rec.product_order = oracle.total_multiplicity();

  const std::vector<double> a = closed.expanded();
  const std::vector<double> b = oracle.expanded();
  if (a.size() != b.size()) {
    rec.max_abs_error = std::numeric_limits<double>::infinity();
    rec.pass = false;
    return rec;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    const double err = std::abs(a[i] - b[i]);
    rec.max_abs_error = std::max(rec.max_abs_error, err);
    if (err > tol && rec.mismatches.size() < 8) rec.mismatches.emplace_back(a[i], b[i]);
  }

  rec.multiplicities_match = closed.entries.size() == oracle.entries.size();
  if (rec.multiplicities_match)
    for (size_t i = 0; i < closed.entries.size(); ++i)
      if (closed.entries[i].multiplicity != oracle.entries[i].multiplicity) {
        rec.multiplicities_match = false;
        break;
      }

  rec.pass = rec.max_abs_error <= tol && rec.multiplicities_match;
  return rec;
}

VerificationRecord verify_nc_spectrum(MatrixKind kind, const Graph& g1, const Graph& g2,
                                      double tol, double cluster_tol) {
  const FactoredCharPoly closed = nc_spectrum(kind, g1, g2, cluster_tol);
  const Graph product = neighbourhood_corona(g1, g2);
  const Spectrum oracle =
      eigensolve_sym(matrix_of(product, kind).cast<double>()).spectrum(cluster_tol);
  return verify_spectra(to_string(kind), g1.vertex_count(), g2.vertex_count(), closed.spectrum,
                        oracle, tol);
}

VerificationRecord verify_ec_spectrum(const Graph& g1, const Graph& g2, double tol,
                                      double cluster_tol) {
  const Spectrum closed = edge_corona_l_spectrum(g1, g2, cluster_tol);
  const Graph product = edge_corona(g1, g2);
  const Spectrum oracle =
      eigensolve_sym(matrix_of(product, MatrixKind::Laplacian).cast<double>())
          .spectrum(cluster_tol);
  return verify_spectra("EC-L", g1.vertex_count(), g2.vertex_count(), closed, oracle, tol);
}

}  // namespace corona
