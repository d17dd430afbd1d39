#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqh/algebra.hpp"
#include "fqh/matrix.hpp"

namespace fqh {

enum class AlgebraSide { a, b };

/// Non-degenerate pairing of two algebras of equal dimension,
/// p(i, j) = <e_i^A, e_j^B>.
struct DualPair {
  Algebra a;
  Algebra b;
  Matrix p;
};

inline DualPair make_dual_pair(Algebra a, Algebra b, Matrix p) {
  if (a.dim != b.dim)
    throw StructuralError("paired algebras must have equal dimension");
  if (p.rows() != a.dim || p.cols() != b.dim)
    throw StructuralError("pairing matrix has wrong shape");
  return DualPair{std::move(a), std::move(b), std::move(p)};
}

inline bool check_nondegenerate(const DualPair& d) {
  return rank(d.p) == d.a.dim;
}

inline Scalar pair_value(const DualPair& d, const Vec& x, const Vec& y) {
  return dot(x, d.p * y);
}

inline DualPair flip_pair(const DualPair& d) {
  return DualPair{d.b, d.a, d.p.transpose()};
}

namespace detail {
inline Matrix pairing_inverse(const DualPair& d) {
  auto inv = inverse(d.p);
  if (!inv) throw PreconditionError("pairing is degenerate");
  return *inv;
}
}  // namespace detail

/// The coproduct on one side induced by the product on the other:
/// <a, bb'> = <Δ_A(a), b⊗b'> and <aa', b> = <a⊗a', Δ_B(b)>.
inline Matrix induced_coproduct(const DualPair& d, AlgebraSide side) {
  std::size_t n = d.a.dim;
  Matrix pinv = detail::pairing_inverse(d);
  Matrix cop(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix rhs(n, n);
    if (side == AlgebraSide::a) {
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          rhs(s, t) = dot(d.p.row(j), d.b.product_of(s, t));
      cop.set_col(j, flatten(pinv.transpose() * rhs * pinv));
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          rhs(i, k) = dot(d.a.product_of(i, k), d.p.col(j));
      cop.set_col(j, flatten(pinv * rhs * pinv.transpose()));
    }
  }
  return cop;
}

/// ε_A(a) = <a, 1_B>, ε_B(b) = <1_A, b>.
inline Vec induced_counit(const DualPair& d, AlgebraSide side) {
  return side == AlgebraSide::a ? d.p * d.b.unit
                                : d.p.transpose() * d.a.unit;
}

/// b ▷ a, characterized by <b▷a, b'> = <a, b'b> for all b'.
inline Vec left_act_on_a(const DualPair& d, const Vec& b, const Vec& a) {
  Matrix pt = d.p.transpose();
  return solve_unique(pt, right_mult_matrix(d.b, b).transpose() * (pt * a));
}

/// a ◁ b, characterized by <a◁b, b'> = <a, bb'> for all b'.
inline Vec right_act_on_a(const DualPair& d, const Vec& a, const Vec& b) {
  Matrix pt = d.p.transpose();
  return solve_unique(pt, left_mult_matrix(d.b, b).transpose() * (pt * a));
}

/// a ▷ b, characterized by <a', a▷b> = <a'a, b> for all a'.
inline Vec left_act_on_b(const DualPair& d, const Vec& a, const Vec& b) {
  return solve_unique(d.p, right_mult_matrix(d.a, a).transpose() * (d.p * b));
}

/// b ◁ a, characterized by <a', b◁a> = <aa', b> for all a'.
inline Vec right_act_on_b(const DualPair& d, const Vec& b, const Vec& a) {
  return solve_unique(d.p, left_mult_matrix(d.a, a).transpose() * (d.p * b));
}

/// The four actions of one algebra on the other. The kind names the
/// expression shape; arguments are passed in written order.
enum class ActionKind { b_tri_a, a_tri_b, a_lt_b, b_lt_a };

inline Vec act(const DualPair& d, ActionKind kind, const Vec& x, const Vec& y) {
  switch (kind) {
    case ActionKind::b_tri_a:  // x=b, y=a, result b▷a in A
      return left_act_on_a(d, x, y);
    case ActionKind::a_lt_b:  // x=a, y=b, result a◁b in A
      return right_act_on_a(d, x, y);
    case ActionKind::a_tri_b:  // x=a, y=b, result a▷b in B
      return left_act_on_b(d, x, y);
    case ActionKind::b_lt_a:  // x=b, y=a, result b◁a in B
      return right_act_on_b(d, x, y);
  }
  throw StructuralError("unknown action kind");
}

/// Stacked-matrix rank conditions: an action is faithful when the actor
/// determines the operator, non-degenerate when the actee does.
struct ActionReport {
  bool faithful = true;
  bool unital = true;
  bool nondegenerate = true;
};

inline ActionReport check_action(const DualPair& d, ActionKind kind) {
  std::size_t n = d.a.dim;
  // In a▷b and b◁a the acting element lives in A; in b▷a and a◁b it is in B.
  bool actor_in_a = kind == ActionKind::a_tri_b || kind == ActionKind::b_lt_a;
  auto apply = [&](const Vec& actor, const Vec& actee) {
    switch (kind) {
      case ActionKind::b_tri_a: return left_act_on_a(d, actor, actee);
      case ActionKind::a_lt_b: return right_act_on_a(d, actee, actor);
      case ActionKind::a_tri_b: return left_act_on_b(d, actor, actee);
      case ActionKind::b_lt_a: return right_act_on_b(d, actee, actor);
    }
    throw StructuralError("unknown action kind");
  };
  // Swap roles so "actor" is always the algebra element acting.
  auto actor_of = [&](std::size_t i) { return basis_vec(n, i); };
  ActionReport rep;
  Matrix by_actor(n * n, n), by_actee(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = apply(actor_of(i), basis_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        by_actor(j * n + k, i) = v[k];
        by_actee(i * n + k, j) = v[k];
      }
    }
  rep.faithful = rank(by_actor) == n;
  rep.nondegenerate = rank(by_actee) == n;
  const Vec& unit = actor_in_a ? d.a.unit : d.b.unit;
  for (std::size_t j = 0; j < n; ++j)
    if (apply(unit, basis_vec(n, j)) != basis_vec(n, j)) rep.unital = false;
  return rep;
}

/// The pre-antipode determined by the involutions: <S_A(a)*, b> = conj<a, b*>
/// on side a, <a, S_B(b)*> = conj<a*, b> on side b. Computed by one exact
/// linear solve per basis vector.
inline Matrix star_antipode(const DualPair& d, AlgebraSide side) {
  if (!d.a.star || !d.b.star)
    throw PreconditionError("star antipode requires involutions on both sides");
  if (side == AlgebraSide::a) {
    Matrix lhs = d.p.transpose() * (*d.a.star);
    Matrix rhs = (d.p * (*d.b.star)).conjugate().transpose();
    return solve_unique(lhs, rhs).conjugate();
  }
  Matrix lhs = d.p * (*d.b.star);
  Matrix rhs = (d.a.star->transpose() * d.p).conjugate();
  return solve_unique(lhs, rhs).conjugate();
}

/// Adjoint transfer of a linear map on A to B: S_Aᵀ P = P S_B.
inline Matrix adjoint_map(const DualPair& d, const Matrix& s_on_a) {
  return solve_unique(d.p, s_on_a.transpose() * d.p);
}

struct StarPairingReport {
  bool delta_star_a = true;
  bool delta_star_b = true;
  bool s_anti_iso_a = true;
  bool s_anti_iso_b = true;
  bool s_flips_a = true;
  bool s_flips_b = true;
  bool adjointness = true;
  bool action_star_exchange = true;   // S(b▷a)* = S(a)*◁b* and its mirror
  bool action_star_absorb = true;     // (a◁b)* = a*◁S(b)* and its mirror
  bool action_antipode_slide = true;  // S(S(b)▷a) = S(a)◁b and its mirror

  bool all() const {
    return delta_star_a && delta_star_b && s_anti_iso_a && s_anti_iso_b &&
           s_flips_a && s_flips_b && adjointness && action_star_exchange &&
           action_star_absorb && action_antipode_slide;
  }
};

inline bool anti_multiplicative(const Algebra& a, const Matrix& s) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec lhs = s * a.product_of(i, j);
      Vec rhs = multiply(a, s.col(j), s.col(i));
      if (lhs != rhs) return false;
    }
  return true;
}

inline bool flips_coproduct(const Algebra& a, const Matrix& cop,
                            const Matrix& s) {
  std::size_t d = a.dim;
  for (std::size_t j = 0; j < d; ++j) {
    Vec lhs = cop * s.col(j);
    Vec rhs = flip_tensor(apply_kron(s, s, cop.col(j)), d);
    if (lhs != rhs) return false;
  }
  return true;
}

inline StarPairingReport check_star_pairing(const DualPair& d) {
  StarPairingReport rep;
  std::size_t n = d.a.dim;
  Matrix cop_a = induced_coproduct(d, AlgebraSide::a);
  Matrix cop_b = induced_coproduct(d, AlgebraSide::b);
  Matrix sa = star_antipode(d, AlgebraSide::a);
  Matrix sb = star_antipode(d, AlgebraSide::b);
  const Matrix& star_a = *d.a.star;
  const Matrix& star_b = *d.b.star;

  rep.delta_star_a = (cop_a * star_a == kron(star_a, star_a) * cop_a.conjugate());
  rep.delta_star_b = (cop_b * star_b == kron(star_b, star_b) * cop_b.conjugate());
  rep.s_anti_iso_a = anti_multiplicative(d.a, sa) && rank(sa) == n;
  rep.s_anti_iso_b = anti_multiplicative(d.b, sb) && rank(sb) == n;
  rep.adjointness = (sa.transpose() * d.p == d.p * sb);

  // S flips the coproduct, and the conjugated variant
  // Δ(S(a)*) = ζ((S⊗S)Δ(a))* holds alongside.
  auto flips_with_star = [](const Algebra& alg, const Matrix& cop,
                            const Matrix& s) {
    std::size_t dd = alg.dim;
    const Matrix& st = *alg.star;
    for (std::size_t j = 0; j < dd; ++j) {
      Vec sj = s.col(j);
      Vec lhs = cop * (st * conj(sj));
      Vec rhs = kron(st, st) *
                conj(flip_tensor(apply_kron(s, s, cop.col(j)), dd));
      if (lhs != rhs) return false;
    }
    return true;
  };
  rep.s_flips_a = flips_coproduct(d.a, cop_a, sa) && flips_with_star(d.a, cop_a, sa);
  rep.s_flips_b = flips_coproduct(d.b, cop_b, sb) && flips_with_star(d.b, cop_b, sb);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec a = basis_vec(n, i), b = basis_vec(n, j);
      Vec as = star_apply(d.a, a), bs = star_apply(d.b, b);
      if (star_apply(d.a, sa * left_act_on_a(d, b, a)) !=
              right_act_on_a(d, star_apply(d.a, sa * a), bs) ||
          star_apply(d.b, sb * left_act_on_b(d, a, b)) !=
              right_act_on_b(d, star_apply(d.b, sb * b), as))
        rep.action_star_exchange = false;
      if (star_apply(d.a, right_act_on_a(d, a, b)) !=
              right_act_on_a(d, as, star_apply(d.b, sb * b)) ||
          star_apply(d.b, left_act_on_b(d, a, b)) !=
              left_act_on_b(d, star_apply(d.a, sa * a), bs))
        rep.action_star_absorb = false;
      if (sa * left_act_on_a(d, sb * b, a) != right_act_on_a(d, sa * a, b) ||
          sb * left_act_on_b(d, sa * a, b) != right_act_on_b(d, sb * b, a))
        rep.action_antipode_slide = false;
    }
  return rep;
}

/// Re-derives the product on the opposite side from an induced coproduct;
/// equality with the stored structure constants is the biduality of the
/// induction.
inline bool product_roundtrip(const DualPair& d, AlgebraSide side) {
  std::size_t n = d.a.dim;
  Matrix cop = induced_coproduct(d, side);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Vec rhs(n);
      if (side == AlgebraSide::a) {
        // <e_j, f_s f_t> = <Δ_A(e_j), f_s ⊗ f_t> determines f_s f_t.
        for (std::size_t j = 0; j < n; ++j) {
          Matrix x = reshape(cop.col(j), n, n);
          rhs[j] = dot(d.p.col(s), x * d.p.col(t));
        }
        Vec prod = solve_unique(d.p, rhs);
        if (prod != d.b.product_of(s, t)) return false;
      } else {
        // <e_s e_t, f_j> = <e_s ⊗ e_t, Δ_B(f_j)> determines e_s e_t.
        for (std::size_t j = 0; j < n; ++j) {
          Matrix x = reshape(cop.col(j), n, n);
          rhs[j] = dot(d.p.row(s), x * d.p.row(t));
        }
        Vec prod = solve_unique(d.p.transpose(), rhs);
        if (prod != d.a.product_of(s, t)) return false;
      }
    }
  return true;
}

}  // namespace fqh
