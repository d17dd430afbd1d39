#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqh/duality.hpp"
#include "fqh/groups.hpp"
#include "fqh/integrals.hpp"
#include "fqh/pairing.hpp"

namespace fqh {

/// A Hopf-algebra package used as raw material for the hypergroup
/// constructions.
struct HopfData {
  Algebra algebra;
  Matrix coproduct;
  Vec counit;
  Vec integral;
  Matrix antipode;
};

/// Function algebra C(G): pointwise product, Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b,
/// ε(f) = f(e), φ(f) = Σ_p f(p), S(f)(p) = f(p⁻¹).
inline HopfData function_hopf(const FiniteGroup& g) {
  std::size_t n = g.order;
  std::vector<Vec> mult(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) mult[i * n + i][i] = Scalar(1);
  Vec unit(n, Scalar(1));
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("d[" + l + "]");
  Algebra a = make_algebra(labels, mult, unit, Matrix::identity(n));

  HopfData h;
  h.algebra = std::move(a);
  h.coproduct = Matrix(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      h.coproduct(x * n + y, g.mul(x, y)) = Scalar(1);
  h.counit = basis_vec(n, g.identity);
  h.integral = Vec(n, Scalar(1));
  h.antipode = Matrix(n, n);
  for (std::size_t x = 0; x < n; ++x) h.antipode(g.inv(x), x) = Scalar(1);
  return h;
}

/// Group algebra CG: λ_p λ_q = λ_pq, Δ(λ_p) = λ_p ⊗ λ_p, ε(λ_p) = 1,
/// φ(λ_p) = [p = e], S(λ_p) = λ_{p⁻¹}, λ_p* = λ_{p⁻¹}.
inline HopfData group_hopf(const FiniteGroup& g) {
  std::size_t n = g.order;
  std::vector<Vec> mult(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j][g.mul(i, j)] = Scalar(1);
  Matrix star(n, n);
  for (std::size_t x = 0; x < n; ++x) star(g.inv(x), x) = Scalar(1);
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("l[" + l + "]");
  Algebra a = make_algebra(labels, mult, basis_vec(n, g.identity), star);

  HopfData h;
  h.algebra = std::move(a);
  h.coproduct = Matrix(n * n, n);
  for (std::size_t x = 0; x < n; ++x) h.coproduct(x * n + x, x) = Scalar(1);
  h.counit = Vec(n, Scalar(1));
  h.integral = basis_vec(n, g.identity);
  h.antipode = Matrix(n, n);
  for (std::size_t x = 0; x < n; ++x) h.antipode(g.inv(x), x) = Scalar(1);
  return h;
}

/// The natural pairing <f, λ_p> = f(p) of C(G) with CG.
inline DualPair group_duality_pair(const FiniteGroup& g) {
  HopfData f = function_hopf(g);
  HopfData c = group_hopf(g);
  return make_dual_pair(f.algebra, c.algebra, Matrix::identity(g.order));
}

/// A dual pair together with hypergroup data on each side.
struct PairBundle {
  std::string kind;
  DualPair pair;
  FQH side_a;
  std::optional<FQH> side_b;
};

/// E(f)(p) = (1/n²) Σ_{h,k∈H} f(hpk) on C(G), the projection onto functions
/// constant on double cosets.
inline Matrix conditional_expectation(const FiniteGroup& g, const Subgroup& h) {
  std::size_t n = g.order;
  Matrix e(n, n);
  Scalar w = Scalar(1) / Scalar(static_cast<int>(h.size() * h.size()));
  for (std::size_t p = 0; p < n; ++p)
    for (auto x : h.members)
      for (auto y : h.members) e(p, g.mul(g.mul(x, p), y)) += w;
  return e;
}

/// u = (1/n) Σ_{h∈H} λ_h in the group algebra.
inline Vec group_like_projection(const FiniteGroup& g, const Subgroup& h) {
  Vec u(g.order);
  Scalar w = Scalar(1) / Scalar(static_cast<int>(h.size()));
  for (auto x : h.members) u[x] = w;
  return u;
}

namespace detail {

inline std::size_t coset_index(const std::vector<std::vector<std::size_t>>& parts,
                               std::size_t g) {
  for (std::size_t d = 0; d < parts.size(); ++d)
    if (std::binary_search(parts[d].begin(), parts[d].end(), g)) return d;
  throw StructuralError("element not covered by the partition");
}

}  // namespace detail

/// The double-coset hypergroup pair of (G, H): on one side the functions
/// constant on double cosets with the averaged coproduct, on the other the
/// compression uCGu of the group algebra by the group-like projection u.
inline PairBundle hecke_pair(const FiniteGroup& g, const Subgroup& h) {
  std::size_t n = h.size();
  auto dcs = double_cosets(g, h, h);
  std::size_t m = dcs.size();
  std::vector<std::size_t> rep(m);
  std::vector<std::size_t> coset_of(g.order);
  for (std::size_t d = 0; d < m; ++d) {
    rep[d] = dcs[d][0];
    for (auto x : dcs[d]) coset_of[x] = d;
  }
  std::vector<std::size_t> inverse_coset(m);
  for (std::size_t d = 0; d < m; ++d) inverse_coset[d] = coset_of[g.inv(rep[d])];

  // Side A: indicator functions of double cosets, pointwise product.
  std::vector<std::string> labels_a;
  for (std::size_t d = 0; d < m; ++d) labels_a.push_back("[" + g.labels[rep[d]] + "]");
  std::vector<Vec> mult_a(m * m, Vec(m));
  for (std::size_t d = 0; d < m; ++d) mult_a[d * m + d][d] = Scalar(1);
  Algebra a = make_algebra(labels_a, mult_a, Vec(m, Scalar(1)),
                           Matrix::identity(m));

  Matrix cop_a(m * m, m);
  for (std::size_t d1 = 0; d1 < m; ++d1)
    for (std::size_t d2 = 0; d2 < m; ++d2) {
      std::size_t p = rep[d1], q = rep[d2];
      for (auto k : h.members) {
        std::size_t target = coset_of[g.mul(g.mul(p, k), q)];
        cop_a(d1 * m + d2, target) += Scalar(1);
      }
    }
  Scalar inv_n = Scalar(1) / Scalar(static_cast<int>(n));
  cop_a = inv_n * cop_a;

  Vec eps_a(m), phi_a(m);
  for (std::size_t d = 0; d < m; ++d) {
    eps_a[d] = coset_of[g.identity] == d ? Scalar(1) : Scalar(0);
    phi_a[d] = Scalar(static_cast<int>(dcs[d].size()));
  }
  Matrix s_a(m, m);
  for (std::size_t d = 0; d < m; ++d) s_a(inverse_coset[d], d) = Scalar(1);

  // Side B: b_D = u λ_p u computed in the group algebra.
  HopfData cg = group_hopf(g);
  Vec u = group_like_projection(g, h);
  std::vector<Vec> b_elems(m);
  for (std::size_t d = 0; d < m; ++d) {
    Vec lam = basis_vec(g.order, rep[d]);
    b_elems[d] = multiply(cg.algebra, multiply(cg.algebra, u, lam), u);
  }
  auto to_b_coords = [&](const Vec& x) {
    // Elements of uCGu are constant on double cosets up to the 1/|D| profile.
    Vec coords(m);
    for (std::size_t d = 0; d < m; ++d) {
      Scalar c = x[rep[d]] / b_elems[d][rep[d]];
      coords[d] = c;
    }
    Vec rebuilt(g.order);
    for (std::size_t d = 0; d < m; ++d)
      for (std::size_t i = 0; i < g.order; ++i)
        rebuilt[i] += coords[d] * b_elems[d][i];
    if (rebuilt != x)
      throw std::logic_error("element does not lie in the compressed algebra");
    return coords;
  };
  std::vector<std::string> labels_b;
  for (std::size_t d = 0; d < m; ++d) labels_b.push_back("b[" + g.labels[rep[d]] + "]");
  std::vector<Vec> mult_b(m * m);
  for (std::size_t d1 = 0; d1 < m; ++d1)
    for (std::size_t d2 = 0; d2 < m; ++d2)
      mult_b[d1 * m + d2] =
          to_b_coords(multiply(cg.algebra, b_elems[d1], b_elems[d2]));
  Matrix star_b(m, m);
  for (std::size_t d = 0; d < m; ++d) star_b(inverse_coset[d], d) = Scalar(1);
  Algebra b = make_algebra(labels_b, mult_b,
                           basis_vec(m, coset_of[g.identity]), star_b);

  Matrix cop_b(m * m, m);
  for (std::size_t d = 0; d < m; ++d) cop_b(d * m + d, d) = Scalar(1);
  Vec eps_b(m, Scalar(1));
  Vec phi_b(m);
  phi_b[coset_of[g.identity]] = inv_n;
  Matrix s_b = s_a;

  PairBundle out;
  out.kind = "hecke";
  out.pair = make_dual_pair(a, b, Matrix::identity(m));
  out.side_a = FQH{a, cop_a, eps_a, phi_a, s_a};
  out.side_b = FQH{b, cop_b, eps_b, phi_b, s_b};
  return out;
}

/// Coefficient independence of the double-coset coproduct from the chosen
/// representatives, checked over all representative pairs.
inline bool hecke_representatives_consistent(const FiniteGroup& g,
                                             const Subgroup& h) {
  auto dcs = double_cosets(g, h, h);
  std::size_t m = dcs.size();
  std::vector<std::size_t> coset_of(g.order);
  for (std::size_t d = 0; d < m; ++d)
    for (auto x : dcs[d]) coset_of[x] = d;
  for (std::size_t d1 = 0; d1 < m; ++d1)
    for (std::size_t d2 = 0; d2 < m; ++d2) {
      std::optional<std::vector<std::size_t>> expected;
      for (auto p : dcs[d1])
        for (auto q : dcs[d2]) {
          std::vector<std::size_t> counts(m, 0);
          for (auto k : h.members) ++counts[coset_of[g.mul(g.mul(p, k), q)]];
          if (!expected)
            expected = counts;
          else if (*expected != counts)
            return false;
        }
    }
  return true;
}

/// The coproduct Δ₀(f)(p, q) = f(pq) restricted to double-coset functions,
/// expressed in the indicator basis. Lands in A ⊗ A exactly when H is
/// normal, where it coincides with the averaged coproduct.
inline Matrix hecke_restricted_group_coproduct(const FiniteGroup& g,
                                               const Subgroup& h) {
  auto dcs = double_cosets(g, h, h);
  std::size_t m = dcs.size();
  std::vector<std::size_t> coset_of(g.order);
  for (std::size_t d = 0; d < m; ++d)
    for (auto x : dcs[d]) coset_of[x] = d;
  Matrix cop(m * m, m);
  for (std::size_t d1 = 0; d1 < m; ++d1)
    for (std::size_t d2 = 0; d2 < m; ++d2) {
      std::size_t target = coset_of[g.mul(dcs[d1][0], dcs[d2][0])];
      cop(d1 * m + d2, target) = Scalar(1);
    }
  return cop;
}

namespace detail {

inline Scalar require_rational(const Scalar& x, const std::string& what) {
  if (!x.is_real())
    throw PreconditionError(what + " must be a real rational number");
  return x;
}

/// Two-dimensional algebra spanned by 1 and a generator t with t² = t
/// (idempotent = true) or t² = 0.
inline Algebra two_dim_algebra(const std::string& gen, bool idempotent,
                               bool star_fixes_gen) {
  std::vector<Vec> mult(4, Vec(2));
  mult[0 * 2 + 0] = {Scalar(1), Scalar(0)};
  mult[0 * 2 + 1] = {Scalar(0), Scalar(1)};
  mult[1 * 2 + 0] = {Scalar(0), Scalar(1)};
  mult[1 * 2 + 1] = idempotent ? Vec{Scalar(0), Scalar(1)} : Vec{Scalar(0), Scalar(0)};
  std::optional<Matrix> star;
  if (star_fixes_gen) star = Matrix::identity(2);
  return make_algebra({"1", gen}, mult, {Scalar(1), Scalar(0)}, star);
}

}  // namespace detail

/// The one-parameter family on span{1, v}, v² = v:
/// Δ(v) = v⊗1 + 1⊗v + α v⊗v, ε(v) = 0, φ(1) = -α, φ(v) = 1, S = ι.
inline FQH alpha_family(const Scalar& alpha) {
  if (alpha == Scalar(-1))
    throw PreconditionError("alpha = -1 forbidden: phi cannot be faithful");
  Algebra a = detail::two_dim_algebra("v", true, alpha.is_real());
  Matrix cop(4, 2);
  cop(0, 0) = Scalar(1);                      // Δ(1) = 1⊗1
  cop(1 * 2 + 0, 1) = Scalar(1);              // v⊗1
  cop(0 * 2 + 1, 1) = Scalar(1);              // 1⊗v
  cop(1 * 2 + 1, 1) = alpha;                  // α v⊗v
  Vec eps{Scalar(1), Scalar(0)};
  Vec phi{-alpha, Scalar(1)};
  return FQH{a, cop, eps, phi, Matrix::identity(2)};
}

enum class AlphaKind { vw, vy, xy };

/// The two-dimensional dual pairs: idempotent/idempotent (vw),
/// idempotent/nilpotent (vy), nilpotent/nilpotent (xy), with
/// <gen_A, gen_B> = 1/α.
inline PairBundle alpha_dual_pair(AlphaKind kind, const Scalar& alpha) {
  if (alpha == Scalar(0))
    throw PreconditionError("alpha = 0 forbidden: the pairing degenerates");
  if (kind != AlphaKind::xy && alpha == Scalar(-1))
    throw PreconditionError("alpha = -1 forbidden: phi cannot be faithful");
  bool star = alpha.is_real();
  Algebra a, b;
  Vec phi_a(2), phi_b(2);
  std::string kind_name;
  switch (kind) {
    case AlphaKind::vw:
      a = detail::two_dim_algebra("v", true, star);
      b = detail::two_dim_algebra("w", true, star);
      phi_a = {-alpha, Scalar(1)};
      phi_b = {-alpha, Scalar(1)};
      kind_name = "vw";
      break;
    case AlphaKind::vy:
      a = detail::two_dim_algebra("v", true, star);
      b = detail::two_dim_algebra("y", false, star);
      phi_a = {Scalar(0), Scalar(1)};
      phi_b = {-alpha, Scalar(1)};
      kind_name = "vy";
      break;
    case AlphaKind::xy:
      a = detail::two_dim_algebra("x", false, star);
      b = detail::two_dim_algebra("y", false, star);
      phi_a = {Scalar(0), Scalar(1)};
      phi_b = {Scalar(0), Scalar(1)};
      kind_name = "xy";
      break;
  }
  Matrix p(2, 2);
  p(0, 0) = Scalar(1);
  p(1, 1) = Scalar(1) / alpha;
  DualPair pair = make_dual_pair(a, b, p);
  Matrix cop_a = induced_coproduct(pair, AlgebraSide::a);
  Matrix cop_b = induced_coproduct(pair, AlgebraSide::b);
  Vec eps_a = induced_counit(pair, AlgebraSide::a);
  Vec eps_b = induced_counit(pair, AlgebraSide::b);
  PairBundle out;
  out.kind = "family-" + kind_name;
  out.pair = pair;
  out.side_a = FQH{a, cop_a, eps_a, phi_a, Matrix::identity(2)};
  out.side_b = FQH{b, cop_b, eps_b, phi_b, Matrix::identity(2)};
  return out;
}

namespace detail {

/// C^n with a distinguished invertible base change: the columns of c are the
/// coordinates of a group-like basis, the pairing makes that basis dual to
/// the idempotent basis of the mirror C^n.
inline PairBundle grouplike_pair(const std::string& kind, Algebra a,
                                 const Matrix& c,
                                 std::vector<std::string> b_labels) {
  std::size_t n = a.dim;
  std::vector<Vec> mult_b(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) mult_b[i * n + i][i] = Scalar(1);
  Algebra b = make_algebra(std::move(b_labels), mult_b, Vec(n, Scalar(1)),
                           Matrix::identity(n));
  auto cinv = inverse(c);
  if (!cinv) throw StructuralError("base change is singular");
  Matrix p = cinv->transpose();
  DualPair pair = make_dual_pair(std::move(a), std::move(b), p);
  Matrix cop_a = induced_coproduct(pair, AlgebraSide::a);
  Vec eps_a = induced_counit(pair, AlgebraSide::a);
  Vec phi_a = p.col(0);  // dual functional of the first group-like vector
  PairBundle out;
  out.kind = kind;
  out.pair = pair;
  out.side_a = FQH{pair.a, cop_a, eps_a, phi_a, std::nullopt};
  return out;
}

}  // namespace detail

/// Function algebra of the two-point groupoid: Δ(p) = p⊗p, Δ(q) = q⊗q.
/// Integrals exist for every functional, invariant functionals only at 0.
inline PairBundle counterexample_groupoid2() {
  std::vector<Vec> mult(4, Vec(2));
  mult[0] = {Scalar(1), Scalar(0)};
  mult[3] = {Scalar(0), Scalar(1)};
  Algebra a = make_algebra({"p", "q"}, mult, {Scalar(1), Scalar(1)},
                           Matrix::identity(2));
  PairBundle out = detail::grouplike_pair("counterexample-groupoid2", a,
                                          Matrix::identity(2), {"x", "y"});
  out.side_a.integral = {Scalar(1), Scalar(1)};
  return out;
}

/// C³ paired through the basis (1, u, v) with u = e1+e2-e3, v = e1-e2+e3:
/// invariant functional, no integral, not faithful.
inline PairBundle counterexample_c3() {
  std::vector<Vec> mult(9, Vec(3));
  for (std::size_t i = 0; i < 3; ++i) mult[i * 3 + i][i] = Scalar(1);
  Algebra a = make_algebra({"e1", "e2", "e3"}, mult, Vec(3, Scalar(1)),
                           Matrix::identity(3));
  Matrix c = Matrix::of({{Scalar(1), Scalar(1), Scalar(1)},
                         {Scalar(1), Scalar(1), Scalar(-1)},
                         {Scalar(1), Scalar(-1), Scalar(1)}});
  return detail::grouplike_pair("counterexample-c3", a, c, {"h", "x", "y"});
}

/// C⁴ paired through (1, u, v, w + λ1): faithful for λ ∉ {1, -1}, invariant
/// always, an integral only at λ = 0.
inline PairBundle counterexample_c4(const Rat& lambda) {
  std::vector<Vec> mult(16, Vec(4));
  for (std::size_t i = 0; i < 4; ++i) mult[i * 4 + i][i] = Scalar(1);
  Algebra a = make_algebra({"e1", "e2", "e3", "e4"}, mult, Vec(4, Scalar(1)),
                           Matrix::identity(4));
  Scalar l(lambda);
  Matrix c = Matrix::of(
      {{Scalar(1), Scalar(1), Scalar(1), Scalar(1) + l},
       {Scalar(1), Scalar(1), Scalar(-1), Scalar(-1) + l},
       {Scalar(1), Scalar(-1), Scalar(-1), Scalar(1) + l},
       {Scalar(1), Scalar(-1), Scalar(1), Scalar(-1) + l}});
  PairBundle out = detail::grouplike_pair("counterexample-c4", a, c,
                                          {"h", "x", "y", "z"});
  out.kind += "-lambda=" + rational_to_string(lambda);
  return out;
}

/// M₂(C) paired with C⁴ through (1, u, v, w), u = e12+e21, v = e12-e21,
/// w = p e11 + q e22: faithful invariant functional that is not an integral.
inline PairBundle counterexample_m2(const Rat& p, const Rat& q) {
  if (p == q) throw PreconditionError("m2 requires p != q");
  if (p == -q) throw PreconditionError("m2 requires p != -q");
  if (p == 0) throw PreconditionError("m2 requires p != 0");
  if (q == 0) throw PreconditionError("m2 requires q != 0");
  // Basis e11, e12, e21, e22 of M2 with e_ij e_kl = [j=k] e_il.
  std::vector<Vec> mult(16, Vec(4));
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k) mult[idx(i, j) * 4 + idx(k, l)][idx(i, l)] = Scalar(1);
  Matrix star(4, 4);  // e_ij* = e_ji
  star(idx(0, 0), idx(0, 0)) = Scalar(1);
  star(idx(1, 0), idx(0, 1)) = Scalar(1);
  star(idx(0, 1), idx(1, 0)) = Scalar(1);
  star(idx(1, 1), idx(1, 1)) = Scalar(1);
  Algebra a = make_algebra({"e11", "e12", "e21", "e22"}, mult,
                           {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, star);
  Matrix c = Matrix::of({{Scalar(1), Scalar(0), Scalar(0), Scalar(Rat(p))},
                         {Scalar(0), Scalar(1), Scalar(1), Scalar(0)},
                         {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)},
                         {Scalar(1), Scalar(0), Scalar(0), Scalar(Rat(q))}});
  PairBundle out =
      detail::grouplike_pair("counterexample-m2", a, c, {"h", "x", "y", "z"});
  out.kind += "-p=" + rational_to_string(p) + ",q=" + rational_to_string(q);
  return out;
}

/// The set Ω of composable pairs (h, k) with its two partial actions,
/// h k = (h▷k)(h◁k).
struct OmegaStructure {
  FiniteGroup h_group;
  FiniteGroup k_group;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted lex
  std::vector<std::size_t> act_right;  // h◁k per pair, in H
  std::vector<std::size_t> act_left;   // h▷k per pair, in K

  std::optional<std::size_t> index_of(std::size_t h, std::size_t k) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(h, k));
    if (it == pairs.end() || *it != std::make_pair(h, k)) return std::nullopt;
    return static_cast<std::size_t>(it - pairs.begin());
  }
  std::size_t size() const { return pairs.size(); }
};

/// Partial action laws that every Ω must satisfy.
inline bool validate_omega(const OmegaStructure& o) {
  const FiniteGroup& gh = o.h_group;
  const FiniteGroup& gk = o.k_group;
  for (std::size_t h = 0; h < gh.order; ++h)
    if (!o.index_of(h, gk.identity)) return false;
  for (std::size_t k = 0; k < gk.order; ++k)
    if (!o.index_of(gh.identity, k)) return false;
  for (std::size_t i = 0; i < o.size(); ++i) {
    auto [h, k] = o.pairs[i];
    if (k == gk.identity && (o.act_right[i] != h || o.act_left[i] != gk.identity))
      return false;
    if (h == gh.identity && (o.act_left[i] != k || o.act_right[i] != gh.identity))
      return false;
  }
  // Cocycle laws on triples where the staged actions are defined.
  for (std::size_t i = 0; i < o.size(); ++i) {
    auto [h, k] = o.pairs[i];
    std::size_t hk = o.act_right[i];
    std::size_t htk = o.act_left[i];
    for (std::size_t k2 = 0; k2 < gk.order; ++k2) {
      auto j = o.index_of(hk, k2);
      if (!j) continue;
      auto full = o.index_of(h, gk.mul(k, k2));
      if (!full) return false;
      if (o.act_left[*full] != gk.mul(htk, o.act_left[*j])) return false;
      if (o.act_right[*full] != o.act_right[*j]) return false;
    }
    for (std::size_t h2 = 0; h2 < gh.order; ++h2) {
      auto j = o.index_of(h2, htk);
      if (!j) continue;
      auto full = o.index_of(gh.mul(h2, h), k);
      if (!full) return false;
      if (o.act_right[*full] != gh.mul(o.act_right[*j], hk)) return false;
      if (o.act_left[*full] != o.act_left[*j]) return false;
    }
  }
  return true;
}

/// Ω from two subgroups of an ambient group with H ∩ K = {e}: the pairs with
/// hk ∈ KH, acted on by unique factorization hk = (h▷k)(h◁k).
inline OmegaStructure omega_from_group(const FiniteGroup& g, const Subgroup& h,
                                       const Subgroup& k) {
  SetProducts sp = set_products(g, h, k);
  if (sp.intersection != std::vector<std::size_t>{g.identity})
    throw PreconditionError("omega requires H ∩ K = {e}");

  // Restrict both subgroups to standalone groups with their own indexing.
  auto restrict = [&](const Subgroup& s) {
    std::vector<std::string> labels;
    for (auto x : s.members) labels.push_back(g.labels[x]);
    std::vector<std::vector<std::size_t>> table(
        s.members.size(), std::vector<std::size_t>(s.members.size()));
    for (std::size_t i = 0; i < s.members.size(); ++i)
      for (std::size_t j = 0; j < s.members.size(); ++j) {
        std::size_t prod = g.mul(s.members[i], s.members[j]);
        auto it = std::lower_bound(s.members.begin(), s.members.end(), prod);
        table[i][j] = static_cast<std::size_t>(it - s.members.begin());
      }
    return make_group(std::move(labels), std::move(table));
  };

  OmegaStructure o;
  o.h_group = restrict(h);
  o.k_group = restrict(k);
  for (std::size_t hi = 0; hi < h.members.size(); ++hi)
    for (std::size_t ki = 0; ki < k.members.size(); ++ki) {
      std::size_t prod = g.mul(h.members[hi], k.members[ki]);
      std::optional<std::pair<std::size_t, std::size_t>> fact;
      for (std::size_t kj = 0; kj < k.members.size(); ++kj)
        for (std::size_t hj = 0; hj < h.members.size(); ++hj)
          if (g.mul(k.members[kj], h.members[hj]) == prod) {
            if (fact) throw std::logic_error("factorization is not unique");
            fact = {hj, kj};
          }
      if (!fact) continue;
      o.pairs.emplace_back(hi, ki);
      o.act_right.push_back(fact->first);
      o.act_left.push_back(fact->second);
    }
  if (!validate_omega(o))
    throw std::logic_error("omega from subgroups violates the action laws");
  return o;
}

/// Ω for H and K inside their free product: only (h, e) and (e, k) compose.
inline OmegaStructure omega_free_product(const FiniteGroup& h,
                                         const FiniteGroup& k) {
  OmegaStructure o;
  o.h_group = h;
  o.k_group = k;
  for (std::size_t hi = 0; hi < h.order; ++hi)
    for (std::size_t ki = 0; ki < k.order; ++ki) {
      if (hi != h.identity && ki != k.identity) continue;
      o.pairs.emplace_back(hi, ki);
      o.act_right.push_back(hi == h.identity ? h.identity : hi);
      o.act_left.push_back(ki == k.identity ? k.identity : ki);
    }
  std::sort(o.pairs.begin(), o.pairs.end());
  if (!validate_omega(o))
    throw std::logic_error("free-product omega violates the action laws");
  return o;
}

/// The dual pair of groupoid algebras on C(Ω):
///   (f1 f2)(h,k) = Σ_v f1(h,v) f2(h◁v, v⁻¹k)      with unit on k = e,
///   (g1 g2)(h,k) = Σ_u g1(hu⁻¹, u▷k) g2(u,k)      with unit on h = e,
/// counits ε(f) = Σ_k f(e,k) and ε(g) = Σ_h g(h,e), integrals
/// φ(f) = Σ_h f(h,e) and φ(g) = Σ_k g(e,k), antipode
/// S(δ_(h,k)) = δ_((h◁k)⁻¹, (h▷k)⁻¹), and pairing <f, g> = Σ_Ω f g.
inline PairBundle twosub_pair(const OmegaStructure& o) {
  const FiniteGroup& gh = o.h_group;
  const FiniteGroup& gk = o.k_group;
  std::size_t n = o.size();

  std::vector<std::string> labels_a, labels_b;
  for (auto [h, k] : o.pairs) {
    labels_a.push_back("f(" + gh.labels[h] + "|" + gk.labels[k] + ")");
    labels_b.push_back("g(" + gh.labels[h] + "|" + gk.labels[k] + ")");
  }

  std::vector<Vec> mult_a(n * n, Vec(n)), mult_b(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto [h1, k1] = o.pairs[i];
    for (std::size_t j = 0; j < n; ++j) {
      auto [h2, k2] = o.pairs[j];
      if (o.act_right[i] == h2) {
        if (auto t = o.index_of(h1, gk.mul(k1, k2)))
          mult_a[i * n + j][*t] = Scalar(1);
      }
      if (o.act_left[j] == k1) {
        if (auto t = o.index_of(gh.mul(h1, h2), k2))
          mult_b[i * n + j][*t] = Scalar(1);
      }
    }
  }
  Vec unit_a(n), unit_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [h, k] = o.pairs[i];
    if (k == gk.identity) unit_a[i] = Scalar(1);
    if (h == gh.identity) unit_b[i] = Scalar(1);
  }
  Matrix star_a(n, n), star_b(n, n), s_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [h, k] = o.pairs[i];
    std::size_t hk = o.act_right[i], htk = o.act_left[i];
    auto inv1 = o.index_of(hk, gk.inv(k));          // groupoid-1 inverse
    auto inv2 = o.index_of(gh.inv(h), htk);         // groupoid-2 inverse
    auto anti = o.index_of(gh.inv(hk), gk.inv(htk));
    if (!inv1 || !inv2 || !anti)
      throw std::logic_error("omega is not closed under its inverses");
    star_a(*inv1, i) = Scalar(1);
    star_b(*inv2, i) = Scalar(1);
    s_mat(*anti, i) = Scalar(1);
  }

  Algebra a = make_algebra(labels_a, mult_a, unit_a, star_a);
  Algebra b = make_algebra(labels_b, mult_b, unit_b, star_b);

  // Δ(f)(u,v;h,k) = f(uh, k) δ_{h▷k}(v) and
  // Δ(g)(u,v;h,k) = g(u, vk) δ_{u◁v}(h), as coefficient matrices.
  Matrix cop_a(n * n, n), cop_b(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [u, v] = o.pairs[i];
    for (std::size_t j = 0; j < n; ++j) {
      auto [h, k] = o.pairs[j];
      if (o.act_left[j] == v) {
        if (auto t = o.index_of(gh.mul(u, h), k))
          cop_a(i * n + j, *t) += Scalar(1);
      }
      if (o.act_right[i] == h) {
        if (auto t = o.index_of(u, gk.mul(v, k)))
          cop_b(i * n + j, *t) += Scalar(1);
      }
    }
  }
  Vec eps_a(n), eps_b(n), phi_a(n), phi_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [h, k] = o.pairs[i];
    if (h == gh.identity) eps_a[i] = Scalar(1);
    if (k == gk.identity) phi_a[i] = Scalar(1);
    if (k == gk.identity) eps_b[i] = Scalar(1);
    if (h == gh.identity) phi_b[i] = Scalar(1);
  }

  PairBundle out;
  out.kind = "twosub";
  out.pair = make_dual_pair(a, b, Matrix::identity(n));
  out.side_a = FQH{a, cop_a, eps_a, phi_a, s_mat};
  out.side_b = FQH{b, cop_b, eps_b, phi_b, s_mat};
  return out;
}

/// Span of the matrix units e_1j and e_j3 inside M₃: idempotent,
/// non-degenerate, and not unital. The stored unit candidate e11 + e33 is a
/// one-sided approximation that validation rejects.
inline Algebra nonunital_fixture() {
  // Basis: e11, e12, e13, e23, e33.
  const std::size_t n = 5;
  auto cell = [](std::size_t i, std::size_t j) {
    if (i == 1 && j == 1) return 0;
    if (i == 1 && j == 2) return 1;
    if (i == 1 && j == 3) return 2;
    if (i == 2 && j == 3) return 3;
    if (i == 3 && j == 3) return 4;
    return -1;
  };
  std::vector<std::array<std::size_t, 2>> cells = {
      {1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}};
  std::vector<Vec> mult(n * n, Vec(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [i, j] = cells[x];
      auto [k, l] = cells[y];
      if (j == k) {
        int t = cell(i, l);
        if (t >= 0) mult[x * n + y][static_cast<std::size_t>(t)] = Scalar(1);
      }
    }
  Vec unit_candidate(n);
  unit_candidate[0] = Scalar(1);
  unit_candidate[4] = Scalar(1);
  return make_algebra({"e11", "e12", "e13", "e23", "e33"}, mult,
                      unit_candidate);
}

}  // namespace fqh
