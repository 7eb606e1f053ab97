#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corona/coronal.hpp"
#include "corona/cospectral.hpp"
#include "corona/exact.hpp"
#include "corona/io.hpp"

using namespace corona;

namespace {

Graph saltire_star() { return star_graph(4).renamed("K1,4"); }
Graph saltire_cycle() {
  return disjoint_union(cycle_graph(4), empty_graph(1)).renamed("C4+K1");
}

}  // namespace

TEST_CASE("the stock seed pairs are cospectral in the right kinds") {
  // Both seeds have adjacency characteristic polynomial x^5 - 4x^3.
  const CospectralCheck a = verify_cospectral(saltire_star(), saltire_cycle(), MatrixKind::Adjacency);
  CHECK(a.equal);
  CHECK(a.char_a == IntPoly({0, 0, 0, -4, 0, 1}));

  // Component counts differ (1 vs 2), so the Laplacian zero multiplicity differs.
  CHECK(!verify_cospectral(saltire_star(), saltire_cycle(), MatrixKind::Laplacian).equal);

  CHECK(verify_cospectral(shrikhande_graph(), rook_graph(4), MatrixKind::Adjacency).equal);
  // Identity is trivially cospectral with itself.
  CHECK(verify_cospectral(petersen_graph(), petersen_graph(), MatrixKind::SignlessLaplacian).equal);
}

TEST_CASE("A-left certificates: saltire pair against several shared graphs") {
  const CospectralCertificate cert = generate_cospectral_pair(
      CospectralMode::ALeft, saltire_star(), saltire_cycle(), path_graph(2));
  CHECK(cert.equal);
  CHECK(cert.left.vertex_count() == 15);
  CHECK(cert.right.vertex_count() == 15);
  CHECK(cert.char_left == cert.char_right);
  CHECK(!cert.coronal_check.has_value());

  // Same construction across random shared graphs.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph h = random_graph(rng, 1 + trial % 5, 0.5);
    const CospectralCertificate c =
        generate_cospectral_pair(CospectralMode::ALeft, saltire_star(), saltire_cycle(), h);
    CHECK(c.equal);
  }
}

TEST_CASE("certificates are exact: serialized polynomials are byte-identical") {
  const CospectralCertificate cert = generate_cospectral_pair(
      CospectralMode::ALeft, saltire_star(), saltire_cycle(), path_graph(2));
  CHECK(poly_to_json(cert.char_left).dump() == poly_to_json(cert.char_right).dump());

  // The certified pair is NOT L-cospectral: the construction is A-only.
  CHECK(!verify_cospectral(cert.left, cert.right, MatrixKind::Laplacian).equal);
}

TEST_CASE("A-right certificates need equal coronals and put the shared graph on the base side") {
  const CospectralCertificate cert = generate_cospectral_pair(
      CospectralMode::ARight, shrikhande_graph(), rook_graph(4), path_graph(2));
  CHECK(cert.equal);
  CHECK(cert.coronal_check.has_value());
  CHECK(*cert.coronal_check);
  CHECK(cert.left.vertex_count() == 2 * (16 + 1));

  // Both coronals reduce to 16/(x - 6).
  const RationalFunction expected{IntPoly({16}), IntPoly({-6, 1}), true};
  CHECK(coronal_exact(matrix_of(shrikhande_graph(), MatrixKind::Adjacency))
            .reduce()
            .same_function(expected));

  // The saltire pair is A-cospectral but has different coronals, so A-right refuses.
  CHECK_THROWS_AS(generate_cospectral_pair(CospectralMode::ARight, saltire_star(),
                                           saltire_cycle(), path_graph(2)),
                  std::invalid_argument);
}

TEST_CASE("Q certificates from the strongly regular pair") {
  const CospectralCertificate cert = generate_cospectral_pair(
      CospectralMode::Q, shrikhande_graph(), rook_graph(4), path_graph(3));
  CHECK(cert.equal);
  CHECK(cert.left.vertex_count() == 64);
  CHECK(cert.coronal_check.has_value());
  CHECK(*cert.coronal_check);
}

TEST_CASE("precondition gates") {
  // Not cospectral at all.
  CHECK_THROWS_AS(generate_cospectral_pair(CospectralMode::ALeft, cycle_graph(4), cycle_graph(5),
                                           path_graph(2)),
                  std::invalid_argument);
  // Q mode requires regular seeds.
  CHECK_THROWS_AS(generate_cospectral_pair(CospectralMode::Q, saltire_star(), saltire_cycle(),
                                           path_graph(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cospectral_mode_from_string("sideways"), std::invalid_argument);
}
