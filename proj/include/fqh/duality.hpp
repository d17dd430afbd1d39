#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqh/algebra.hpp"
#include "fqh/integrals.hpp"
#include "fqh/pairing.hpp"
#include "fqh/random.hpp"

namespace fqh {

/// A finite quantum hypergroup candidate: algebra, coproduct, counit, left
/// integral, and (when already known) its antipode. verify_fqh decides
/// whether the data actually is one.
struct FQH {
  Algebra algebra;
  Matrix coproduct;
  Vec counit;
  Vec integral;
  std::optional<Matrix> antipode;
};

struct FQHCertificate {
  bool algebra_ok = false;
  bool coassoc = false;
  bool counit_law = false;
  bool counit_hom = false;
  bool delta_unital = false;
  bool integral_faithful = false;
  bool integral_equation = false;
  bool antipode_anti_iso = false;
  bool antipode_flips = false;
  std::optional<bool> star_ok;

  std::map<std::string, std::vector<std::string>> witnesses;
  std::optional<Matrix> antipode;  // the solved antipode, when unique

  bool all() const {
    return algebra_ok && coassoc && counit_law && counit_hom && delta_unital &&
           integral_faithful && integral_equation && antipode_anti_iso &&
           antipode_flips && star_ok.value_or(true);
  }
};

inline bool counit_is_homomorphism(const Algebra& a, const Vec& eps) {
  if (dot(eps, a.unit) != Scalar(1)) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (dot(eps, a.product_of(i, j)) != eps[i] * eps[j]) return false;
  return true;
}

inline FQHCertificate verify_fqh(const Algebra& a, const Matrix& cop,
                                 const Vec& eps, const Vec& phi) {
  FQHCertificate cert;
  auto witness = [&cert](const std::string& field, std::string text) {
    cert.witnesses[field].push_back(std::move(text));
  };

  AlgebraReport ar = validate_algebra(a);
  cert.algebra_ok = ar.ok();
  for (const auto& t : ar.associativity_failures)
    witness("algebra_ok", "associativity fails at basis triple (" +
                              std::to_string(t[0]) + "," + std::to_string(t[1]) +
                              "," + std::to_string(t[2]) + ")");
  for (auto i : ar.unit_failures)
    witness("algebra_ok", "unit law fails at basis index " + std::to_string(i));
  for (const auto& s : ar.star_failures) witness("algebra_ok", s);

  CoproductReport cr = validate_coproduct(a, cop, eps);
  cert.coassoc = cr.coassociative;
  cert.counit_law = cr.counit_law;
  cert.delta_unital = cr.unital;
  if (!cr.coassociative) witness("coassoc", "coassociativity fails");
  if (!cr.counit_law) witness("counit_law", "counit law fails");
  if (!cr.unital) witness("delta_unital", "coproduct is not unital");

  cert.counit_hom = counit_is_homomorphism(a, eps);
  if (!cert.counit_hom) witness("counit_hom", "counit is not a homomorphism");

  cert.integral_faithful = is_faithful(a, phi);
  if (!cert.integral_faithful)
    witness("integral_faithful", "integral Gram matrix is singular");

  AntipodeResult ares = solve_antipode(a, cop, phi, Side::left);
  cert.integral_equation = ares.status == AntipodeResult::Status::unique;
  if (ares.status == AntipodeResult::Status::no_solution && ares.witness)
    witness("integral_equation",
            "integral equation inconsistent at basis pair (" +
                std::to_string(ares.witness->first) + "," +
                std::to_string(ares.witness->second) + ")");
  if (ares.status == AntipodeResult::Status::non_unique)
    witness("integral_equation",
            "antipode not unique; solution freedom " +
                std::to_string(ares.freedom_dim));

  if (cert.integral_equation) {
    const Matrix& s = *ares.antipode;
    cert.antipode = s;
    cert.antipode_anti_iso = anti_multiplicative(a, s) && rank(s) == a.dim &&
                             s * a.unit == a.unit;
    if (!cert.antipode_anti_iso)
      witness("antipode_anti_iso",
              "antipode is not a unit-preserving anti-isomorphism");
    cert.antipode_flips = flips_coproduct(a, cop, s);
    if (!cert.antipode_flips) witness("antipode_flips", "antipode does not flip the coproduct");
  } else {
    witness("antipode_anti_iso", "no antipode available");
    witness("antipode_flips", "no antipode available");
  }

  if (a.star) {
    cert.star_ok = cr.star_map.value_or(false);
    if (!*cert.star_ok) witness("star_ok", "coproduct is not a *-map");
  }
  return cert;
}

/// The Fourier transform c ↦ φ(·c) in matrix form: column c of the result is
/// the element of B pairing as <a, F c> = φ(a c).
inline Matrix fourier_matrix(const DualPair& d, const Vec& phi) {
  Matrix m = gram(d.a, phi);
  if (rank(m) != d.a.dim)
    throw PreconditionError("fourier transform requires a faithful functional");
  return solve_unique(d.p, m);
}

inline Vec fourier(const DualPair& d, const Vec& phi, const Vec& c) {
  return fourier_matrix(d, phi) * c;
}

/// The dual right integral ψ on B: ψ(b) = ε(c) when b = φ(·c). Verified to
/// be a faithful right integral with the adjoint antipode.
inline Vec dual_right_integral(const DualPair& d, const Vec& phi,
                               const Matrix& s) {
  if (!anti_multiplicative(d.a, s) || rank(s) != d.a.dim)
    throw PreconditionError(
        "dual integral requires an anti-isomorphism antipode");
  if (!verify_integral(d.a, induced_coproduct(d, AlgebraSide::a), phi, s,
                       Side::left))
    throw PreconditionError("dual integral requires a left integral");
  Matrix f = fourier_matrix(d, phi);
  Vec eps_a = induced_counit(d, AlgebraSide::a);
  Vec psi = solve_unique(f.transpose(), eps_a);
  Matrix s_b = adjoint_map(d, s);
  if (!verify_integral(d.b, induced_coproduct(d, AlgebraSide::b), psi, s_b,
                       Side::right))
    throw std::logic_error("dual functional fails the right integral equation");
  if (!is_faithful(d.b, psi))
    throw std::logic_error("dual integral is not faithful");
  return psi;
}

/// Round trip: dualize the left integral twice and compare exactly.
inline bool check_biduality(const DualPair& d, const Vec& phi,
                            const Matrix& s) {
  Matrix s_b = adjoint_map(d, s);
  Vec psi = dual_right_integral(d, phi, s);
  Vec phi_b = s_b.transpose() * psi;
  DualPair flipped = flip_pair(d);
  Vec psi2 = dual_right_integral(flipped, phi_b, s_b);
  Vec phi2 = s.transpose() * psi2;
  return phi2 == phi;
}

/// ψ(b*b) = conj(φ(a*a)) for b = φ(·a), on the whole basis and on seeded
/// random vectors; positivity of φ must propagate to ψ.
inline bool check_plancherel(const DualPair& d, const Vec& phi, const Vec& psi,
                             Sampler& sampler, std::size_t extra_vectors = 10) {
  if (!d.a.star || !d.b.star)
    throw PreconditionError("plancherel check requires involutions");
  Matrix f = fourier_matrix(d, phi);
  auto matches = [&](const Vec& a) {
    Vec b = f * a;
    Scalar lhs = dot(psi, multiply(d.b, star_apply(d.b, b), b));
    Scalar rhs = conj(dot(phi, multiply(d.a, star_apply(d.a, a), a)));
    return lhs == rhs;
  };
  for (std::size_t i = 0; i < d.a.dim; ++i)
    if (!matches(basis_vec(d.a.dim, i))) return false;
  for (std::size_t t = 0; t < extra_vectors; ++t)
    if (!matches(sampler.covector(d.a.dim))) return false;
  if (is_positive(d.a, phi) && !is_positive(d.b, psi)) return false;
  return true;
}

/// The dual finite quantum hypergroup on B: induced coproduct and counit,
/// left integral from the dual right integral composed with the adjoint
/// antipode, and, in the involutive case, the involution defined by
/// <a, b*> = conj<S(a)*, b>.
inline FQH dual_fqh(const DualPair& d, const FQH& on_a,
                    std::vector<std::string>* notes = nullptr) {
  if (on_a.algebra.dim != d.a.dim || on_a.algebra.mult != d.a.mult ||
      on_a.algebra.unit != d.a.unit)
    throw PreconditionError("dual pair does not carry the hypergroup algebra");
  if (induced_coproduct(d, AlgebraSide::a) != on_a.coproduct)
    throw PreconditionError(
        "pairing is not compatible with the hypergroup coproduct");
  FQHCertificate cert =
      verify_fqh(on_a.algebra, on_a.coproduct, on_a.counit, on_a.integral);
  if (!cert.all())
    throw PreconditionError("dualization requires a verified hypergroup");
  const Matrix& s_a = *cert.antipode;

  DualPair work = d;
  work.a = on_a.algebra;

  FQH out;
  out.algebra = d.b;
  out.coproduct = induced_coproduct(d, AlgebraSide::b);
  out.counit = induced_counit(d, AlgebraSide::b);
  Matrix s_b = adjoint_map(d, s_a);
  Vec psi = dual_right_integral(work, on_a.integral, s_a);
  out.integral = s_b.transpose() * psi;
  out.antipode = s_b;

  out.algebra.star.reset();
  if (on_a.algebra.star) {
    // <e_i, f_j*> = conj<S(e_i)*, f_j> determines the dual involution.
    const Matrix& star_a = *on_a.algebra.star;
    Matrix rhs = (s_a.transpose() * (star_a.transpose() * d.p).conjugate());
    Matrix star_b = solve_unique(d.p, rhs);
    Algebra with_star = out.algebra;
    with_star.star = star_b;
    AlgebraReport rep = validate_algebra(with_star);
    bool star_map_ok =
        validate_coproduct(with_star, out.coproduct, out.counit).star_map.value_or(false);
    if (rep.star_ok.value_or(false) && star_map_ok) {
      out.algebra = std::move(with_star);
    } else if (notes) {
      notes->push_back(
          "dual involution dropped: derived map fails the *-algebra or *-map axioms");
    }
  } else if (notes) {
    notes->push_back("no involution on the primal side");
  }

  FQHCertificate dual_cert =
      verify_fqh(out.algebra, out.coproduct, out.counit, out.integral);
  if (!dual_cert.all())
    throw std::logic_error("dual data fails the hypergroup axioms");
  return out;
}

inline bool fqh_equal(const FQH& x, const FQH& y) {
  return x.algebra.dim == y.algebra.dim && x.algebra.mult == y.algebra.mult &&
         x.algebra.unit == y.algebra.unit && x.algebra.star == y.algebra.star &&
         x.coproduct == y.coproduct && x.counit == y.counit &&
         x.integral == y.integral && x.antipode == y.antipode;
}

/// Any counit candidate satisfying the counit law (both legs) is unique;
/// returns it when the linear system pins it down.
inline std::optional<Vec> solve_counit(const Algebra& a, const Matrix& cop) {
  std::size_t d = a.dim;
  Matrix sys(2 * d * d, d);
  Matrix rhs(2 * d * d, 1);
  for (std::size_t j = 0; j < d; ++j) {
    Matrix x = reshape(cop.col(j), d, d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) {
        sys(j * d + k, l) = x(l, k);
        sys(d * d + j * d + k, l) = x(k, l);
      }
      Scalar want = j == k ? Scalar(1) : Scalar(0);
      rhs(j * d + k, 0) = want;
      rhs(d * d + j * d + k, 0) = want;
    }
  }
  auto sol = solve(sys, rhs);
  if (sol.kind != SolutionSet::Kind::unique) return std::nullopt;
  return sol.particular.col(0);
}

}  // namespace fqh
