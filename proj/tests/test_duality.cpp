#include <catch2/catch_amalgamated.hpp>

#include "fqh/constructions.hpp"
#include "fqh/duality.hpp"
#include "fqh/random.hpp"

using namespace fqh;

namespace {

Scalar sc(int n, int d = 1) { return Scalar(Rat(n, d)); }

PairBundle s3_coset_pair() {
  FiniteGroup s3 = preset("S3");
  Subgroup h = subgroup_generate(s3, {element_by_label(s3, "(1 2)")});
  return hecke_pair(s3, h);
}

}  // namespace

TEST_CASE("fourier transform values on the coset pair") {
  PairBundle hk = s3_coset_pair();
  const DualPair& d = hk.pair;
  const Vec& phi = hk.side_a.integral;
  CHECK(fourier(d, phi, Vec(2)) == Vec(2));
  // φ(· u/2) is the counit, whose representer in B is the unit coset class.
  CHECK(fourier(d, phi, Vec{sc(1, 2), sc(0)}) == basis_vec(2, 0));
  Matrix f = fourier_matrix(d, phi);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(pair_value(d, basis_vec(2, i), f.col(c)) ==
            dot(phi, multiply(d.a, basis_vec(2, i), basis_vec(2, c))));
  CHECK(rank(f) == 2);
  CHECK_THROWS_AS(fourier_matrix(d, hk.side_a.counit), PreconditionError);
}

TEST_CASE("fourier intertwines the module action with multiplication") {
  PairBundle hk = s3_coset_pair();
  const DualPair& d = hk.pair;
  const Vec& phi = hk.side_a.integral;
  Matrix s = *hk.side_a.antipode;
  Matrix s_b = adjoint_map(d, s);
  auto sinv = inverse(s_b);
  REQUIRE(sinv.has_value());
  Matrix f = fourier_matrix(d, phi);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec dvec = basis_vec(2, j);
      Vec lhs = f * right_act_on_a(d, basis_vec(2, c), *sinv * dvec);
      Vec rhs = multiply(d.b, dvec, f.col(c));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("dual right integral on the coset pair") {
  PairBundle hk = s3_coset_pair();
  Vec psi = dual_right_integral(hk.pair, hk.side_a.integral, *hk.side_a.antipode);
  CHECK(psi == Vec{sc(1, 2), sc(0)});
  CHECK(is_invariant(hk.pair.b, hk.side_b->coproduct, psi, Side::right));
}

TEST_CASE("dual right integral of the idempotent family") {
  PairBundle vw = alpha_dual_pair(AlphaKind::vw, sc(-3, 2));
  Vec psi = dual_right_integral(vw.pair, vw.side_a.integral, Matrix::identity(2));
  CHECK(psi == Vec{sc(2), sc(4, 3)});
}

TEST_CASE("inverse transform identity") {
  PairBundle hk = s3_coset_pair();
  const DualPair& d = hk.pair;
  const Vec& phi = hk.side_a.integral;
  Matrix s = *hk.side_a.antipode;
  Vec psi = dual_right_integral(d, phi, s);
  auto sinv = inverse(s);
  REQUIRE(sinv.has_value());
  Matrix f = fourier_matrix(d, phi);
  for (std::size_t c = 0; c < 2; ++c) {
    Vec b = f.col(c);
    // ψ(· b) pairs as the functional represented by S⁻¹(c).
    for (std::size_t j = 0; j < 2; ++j) {
      Vec db = multiply(d.b, basis_vec(2, j), b);
      CHECK(dot(psi, db) ==
            pair_value(d, *sinv * basis_vec(2, c), basis_vec(2, j)));
    }
  }
}

TEST_CASE("biduality returns the original integral exactly") {
  PairBundle hk = s3_coset_pair();
  CHECK(check_biduality(hk.pair, hk.side_a.integral, *hk.side_a.antipode));
  PairBundle ts = twosub_pair(omega_free_product(preset("Z2"), preset("Z2")));
  CHECK(check_biduality(ts.pair, ts.side_a.integral, *ts.side_a.antipode));
  PairBundle vw = alpha_dual_pair(AlphaKind::vw, sc(-2));
  CHECK(check_biduality(vw.pair, vw.side_a.integral, *vw.side_a.antipode));
}

TEST_CASE("plancherel identity on the coset pair") {
  PairBundle hk = s3_coset_pair();
  const DualPair& d = hk.pair;
  const Vec& phi = hk.side_a.integral;
  Vec psi = dual_right_integral(d, phi, *hk.side_a.antipode);
  Matrix f = fourier_matrix(d, phi);

  // φ(u*u) = 2 transfers to ψ((2 b_H)*(2 b_H)) = 2.
  Vec b = f * basis_vec(2, 0);
  CHECK(dot(psi, multiply(d.b, star_apply(d.b, b), b)) == sc(2));
  // φ(1·1) = 6 transfers through the transform of the unit.
  Vec bu = f * d.a.unit;
  CHECK(dot(psi, multiply(d.b, star_apply(d.b, bu), bu)) == sc(6));

  Sampler s(Sampler::env_seed(73));
  CHECK(check_plancherel(d, phi, psi, s));
  CHECK(is_positive(d.a, phi));
  CHECK(is_positive(d.b, psi));
}

TEST_CASE("certificate passes on the coset hypergroup and its dual side") {
  PairBundle hk = s3_coset_pair();
  for (const FQH& f : {hk.side_a, *hk.side_b}) {
    FQHCertificate cert = verify_fqh(f.algebra, f.coproduct, f.counit, f.integral);
    CHECK(cert.all());
    REQUIRE(cert.antipode.has_value());
    CHECK(*cert.antipode == *f.antipode);
  }
}

TEST_CASE("certificate pinpoints the failing axiom") {
  // Family data at the forbidden parameter: the integral Gram collapses.
  FQH fam = alpha_family(sc(-1, 2));
  fam.coproduct(3, 1) = sc(-1);  // force α = -1 inside the coproduct
  fam.integral = Vec{sc(1), sc(1)};
  FQHCertificate cert =
      verify_fqh(fam.algebra, fam.coproduct, fam.counit, fam.integral);
  CHECK_FALSE(cert.integral_faithful);
  CHECK_FALSE(cert.all());

  PairBundle m2 = counterexample_m2(Rat(1), Rat(2));
  FQHCertificate cm =
      verify_fqh(m2.side_a.algebra, m2.side_a.coproduct, m2.side_a.counit,
                 m2.side_a.integral);
  CHECK(cm.integral_faithful);
  CHECK_FALSE(cm.integral_equation);
  CHECK(is_invariant(m2.side_a.algebra, m2.side_a.coproduct, m2.side_a.integral,
                     Side::left));
  CHECK_FALSE(cm.all());
  CHECK(cm.witnesses.count("integral_equation") == 1);

  PairBundle g2 = counterexample_groupoid2();
  FQHCertificate cg = verify_fqh(g2.side_a.algebra, g2.side_a.coproduct,
                                 g2.side_a.counit, g2.side_a.integral);
  CHECK_FALSE(cg.delta_unital);
  CHECK_FALSE(cg.counit_hom);
}

TEST_CASE("dualization reproduces the constructed dual side exactly") {
  PairBundle hk = s3_coset_pair();
  FQH dual = dual_fqh(hk.pair, hk.side_a);
  CHECK(fqh_equal(dual, *hk.side_b));
}

TEST_CASE("dual of the group-like family is the two-element group algebra") {
  PairBundle vw = alpha_dual_pair(AlphaKind::vw, sc(-2));
  FQH dual = dual_fqh(vw.pair, vw.side_a);
  CoproductReport rep = validate_coproduct(dual.algebra, dual.coproduct, dual.counit);
  CHECK(rep.homomorphism);
  FQHCertificate cert =
      verify_fqh(dual.algebra, dual.coproduct, dual.counit, dual.integral);
  CHECK(cert.all());
}

TEST_CASE("double dual equals the original bundle matrix for matrix") {
  for (PairBundle bundle :
       {s3_coset_pair(), alpha_dual_pair(AlphaKind::vw, sc(5, 7)),
        twosub_pair(omega_free_product(preset("Z2"), preset("Z2")))}) {
    FQH dual = dual_fqh(bundle.pair, bundle.side_a);
    DualPair flipped = flip_pair(bundle.pair);
    flipped.a = dual.algebra;
    flipped.b = bundle.side_a.algebra;
    FQH dd = dual_fqh(flipped, dual);
    FQH original = bundle.side_a;
    if (!original.antipode) original.antipode = dd.antipode;
    CHECK(fqh_equal(dd, original));
  }
}

TEST_CASE("dualize rejects inconsistent input") {
  PairBundle hk = s3_coset_pair();
  PairBundle c3 = counterexample_c3();
  CHECK_THROWS_AS(dual_fqh(hk.pair, c3.side_a), PreconditionError);
  CHECK_THROWS_AS(dual_fqh(c3.pair, c3.side_a), PreconditionError);
}

TEST_CASE("counit uniqueness as a linear system") {
  PairBundle hk = s3_coset_pair();
  auto eps = solve_counit(hk.side_a.algebra, hk.side_a.coproduct);
  REQUIRE(eps.has_value());
  CHECK(*eps == hk.side_a.counit);
  FQH fam = alpha_family(sc(1));
  auto eps2 = solve_counit(fam.algebra, fam.coproduct);
  REQUIRE(eps2.has_value());
  CHECK(*eps2 == fam.counit);
}

TEST_CASE("invariance space on verified hypergroups is one-dimensional") {
  std::vector<FQH> cases;
  PairBundle hk = s3_coset_pair();
  cases.push_back(hk.side_a);
  cases.push_back(*hk.side_b);
  cases.push_back(alpha_family(sc(-3, 2)));
  PairBundle ts = twosub_pair(omega_free_product(preset("Z2"), preset("Z2")));
  cases.push_back(ts.side_a);
  cases.push_back(*ts.side_b);
  for (const FQH& f : cases) {
    REQUIRE(verify_fqh(f.algebra, f.coproduct, f.counit, f.integral).all());
    CHECK(invariant_space(f.algebra, f.coproduct, Side::left).size() == 1);
  }
}
