#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqh/algebra.hpp"
#include "fqh/pairing.hpp"

namespace fqh {

/// (ι⊗φ)Δ(a) = φ(a)1 on the left, (φ⊗ι)Δ(a) = φ(a)1 on the right.
inline bool is_invariant(const Algebra& a, const Matrix& cop, const Vec& phi,
                         Side side) {
  for (std::size_t j = 0; j < a.dim; ++j) {
    Vec delta = cop.col(j);
    Vec v = side == Side::left ? contract_right(delta, phi)
                               : contract_left(delta, phi);
    if (v != dot(phi, basis_vec(a.dim, j)) * a.unit) return false;
  }
  return true;
}

/// Basis of the space of invariant functionals on the chosen side.
inline std::vector<Vec> invariant_space(const Algebra& a, const Matrix& cop,
                                        Side side) {
  std::size_t d = a.dim;
  Matrix sys(d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Matrix x = reshape(cop.col(j), d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        Scalar coeff = side == Side::left ? x(k, l) : x(l, k);
        if (l == j) coeff -= a.unit[k];
        sys(j * d + k, l) += coeff;
      }
  }
  return null_space(sys);
}

/// The defining vectors of the integral equation, stacked as a dim × dim²
/// matrix; column (i*dim + j) is X_{e_i, e_j}. For a faithful functional
/// these span the whole algebra.
inline Matrix antipode_constraint_matrix(const Algebra& a, const Matrix& cop,
                                         const Vec& phi, Side side) {
  std::size_t d = a.dim;
  Matrix x(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v;
      if (side == Side::left) {
        Vec prod = tensor_multiply(a, cop.col(i),
                                   tensor(a.unit, basis_vec(d, j)));
        v = contract_right(prod, phi);
      } else {
        Vec prod = tensor_multiply(a, tensor(basis_vec(d, j), a.unit),
                                   cop.col(i));
        v = contract_left(prod, phi);
      }
      x.set_col(i * d + j, v);
    }
  return x;
}

struct AntipodeResult {
  enum class Status { no_solution, unique, non_unique };
  Status status = Status::no_solution;
  std::optional<Matrix> antipode;
  std::size_t freedom_dim = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Solves the left integral equation
///   S((ι⊗φ)(Δ(a)(1⊗c))) = (ι⊗φ)((1⊗a)Δ(c))
/// (or its right mirror) for a linear map S, scanning basis pairs (a, c) in
/// lexicographic order. Inconsistency is reported with the first failing
/// pair; a rank-deficient but consistent system yields one solution plus the
/// dimension of the solution space's freedom.
inline AntipodeResult solve_antipode(const Algebra& a, const Matrix& cop,
                                     const Vec& phi, Side side) {
  std::size_t d = a.dim;
  AntipodeResult res;

  // Incremental echelon of rows x with attached right-hand rows y, for the
  // transposed system xᵀ Sᵀ = yᵀ.
  std::vector<Vec> rows, rhs;
  std::vector<std::size_t> pivot_col;

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec x, y;
      if (side == Side::left) {
        x = contract_right(
            tensor_multiply(a, cop.col(i), tensor(a.unit, basis_vec(d, j))),
            phi);
        y = contract_right(
            tensor_multiply(a, tensor(a.unit, basis_vec(d, i)), cop.col(j)),
            phi);
      } else {
        x = contract_left(
            tensor_multiply(a, tensor(basis_vec(d, j), a.unit), cop.col(i)),
            phi);
        y = contract_left(
            tensor_multiply(a, cop.col(j), tensor(basis_vec(d, i), a.unit)),
            phi);
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar& f = x[pivot_col[r]];
        if (f.is_zero()) continue;
        Scalar factor = f;
        for (std::size_t c = 0; c < d; ++c) {
          x[c] -= factor * rows[r][c];
          y[c] -= factor * rhs[r][c];
        }
      }
      if (is_zero(x)) {
        if (!is_zero(y)) {
          res.status = AntipodeResult::Status::no_solution;
          res.witness = {i, j};
          return res;
        }
        continue;
      }
      std::size_t p = 0;
      while (x[p].is_zero()) ++p;
      Scalar inv = x[p];
      for (std::size_t c = 0; c < d; ++c) {
        x[c] = x[c] / inv;
        y[c] = y[c] / inv;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar& f = rows[r][p];
        if (f.is_zero()) continue;
        Scalar factor = f;
        for (std::size_t c = 0; c < d; ++c) {
          rows[r][c] -= factor * x[c];
          rhs[r][c] -= factor * y[c];
        }
      }
      rows.push_back(std::move(x));
      rhs.push_back(std::move(y));
      pivot_col.push_back(p);
    }

  std::size_t rk = rows.size();
  Matrix s_t(d, d);  // Sᵀ, free rows zero
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < d; ++c) s_t(pivot_col[r], c) = rhs[r][c];
  res.antipode = s_t.transpose();
  if (rk == d) {
    res.status = AntipodeResult::Status::unique;
    res.freedom_dim = 0;
  } else {
    res.status = AntipodeResult::Status::non_unique;
    res.freedom_dim = d * (d - rk);
  }
  return res;
}

/// Checks the integral equation for a given antipode candidate on all basis
/// pairs. When a dual pair is supplied (with A as its a side), the pairing
/// form φ((a◁S(b))c) = φ(a(c◁b)) with the adjoint map on B is cross-checked
/// on all basis triples.
inline bool verify_integral(const Algebra& a, const Matrix& cop,
                            const Vec& phi, const Matrix& s, Side side,
                            const DualPair* pair = nullptr) {
  std::size_t d = a.dim;
  if (s.rows() != d || s.cols() != d)
    throw StructuralError("antipode candidate has wrong shape");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec x, y;
      if (side == Side::left) {
        x = contract_right(
            tensor_multiply(a, cop.col(i), tensor(a.unit, basis_vec(d, j))),
            phi);
        y = contract_right(
            tensor_multiply(a, tensor(a.unit, basis_vec(d, i)), cop.col(j)),
            phi);
      } else {
        x = contract_left(
            tensor_multiply(a, tensor(basis_vec(d, j), a.unit), cop.col(i)),
            phi);
        y = contract_left(
            tensor_multiply(a, cop.col(j), tensor(basis_vec(d, i), a.unit)),
            phi);
      }
      if (s * x != y) return false;
    }
  if (pair) {
    if (pair->a.dim != d)
      throw StructuralError("dual pair does not match the algebra");
    Matrix s_b = adjoint_map(*pair, s);
    for (std::size_t j = 0; j < d; ++j) {
      Vec b = basis_vec(d, j);
      Vec sb = s_b * b;
      for (std::size_t i = 0; i < d; ++i) {
        Vec ea = basis_vec(d, i);
        for (std::size_t k = 0; k < d; ++k) {
          Vec ec = basis_vec(d, k);
          Scalar lhs, rhs;
          if (side == Side::left) {
            lhs = dot(phi, multiply(a, right_act_on_a(*pair, ea, sb), ec));
            rhs = dot(phi, multiply(a, ea, right_act_on_a(*pair, ec, b)));
          } else {
            lhs = dot(phi, multiply(a, ec, left_act_on_a(*pair, sb, ea)));
            rhs = dot(phi, multiply(a, left_act_on_a(*pair, b, ec), ea));
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

/// φ∘S is a right integral with the same antipode whenever S is an
/// anti-isomorphism.
inline Vec compose_right_integral(const Algebra& a, const Vec& phi,
                                  const Matrix& s) {
  if (!anti_multiplicative(a, s) || rank(s) != a.dim)
    throw PreconditionError(
        "composing an integral requires an anti-isomorphism antipode");
  return s.transpose() * phi;
}

struct CointegralSpaces {
  std::vector<Vec> left;
  std::vector<Vec> right;
  std::vector<Vec> two_sided;
  std::optional<Vec> normalized;  // two-sided h scaled so ε(h) = 1
};

/// Solution spaces of bh = ε(b)h (left), hb = ε(b)h (right), and both.
inline CointegralSpaces find_cointegral(const Algebra& b, const Vec& eps) {
  std::size_t d = b.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (dot(eps, b.product_of(i, j)) != eps[i] * eps[j])
        throw PreconditionError("cointegral requires a homomorphism counit");
  Matrix left_sys(d * d, d), right_sys(d * d, d), both(2 * d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l = left_mult_matrix(b, basis_vec(d, i));
    Matrix r = right_mult_matrix(b, basis_vec(d, i));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) {
        Scalar lv = l(k, c) - (k == c ? eps[i] : Scalar(0));
        Scalar rv = r(k, c) - (k == c ? eps[i] : Scalar(0));
        left_sys(i * d + k, c) = lv;
        right_sys(i * d + k, c) = rv;
        both(i * d + k, c) = lv;
        both(d * d + i * d + k, c) = rv;
      }
  }
  CointegralSpaces res;
  res.left = null_space(left_sys);
  res.right = null_space(right_sys);
  res.two_sided = null_space(both);
  if (res.two_sided.size() == 1) {
    Scalar e = dot(eps, res.two_sided[0]);
    if (!e.is_zero()) {
      Vec h = res.two_sided[0];
      for (auto& x : h) x = x / e;
      res.normalized = std::move(h);
    }
  }
  return res;
}

/// The element δ with (φ'⊗ι)Δ(a) = φ(a)δ for a left-invariant φ' against a
/// faithful left integral φ whose antipode fixes 1.
inline Vec modular_element(const Algebra& a, const Matrix& cop, const Vec& phi,
                           const Matrix& s, const Vec& phi_prime) {
  if (!is_faithful(a, phi))
    throw PreconditionError("modular element requires a faithful integral");
  if (!verify_integral(a, cop, phi, s, Side::left))
    throw PreconditionError("modular element requires a left integral");
  if (s * a.unit != a.unit)
    throw PreconditionError("modular element requires S(1) = 1");
  if (!is_invariant(a, cop, phi_prime, Side::left))
    throw PreconditionError("modular element requires a left-invariant functional");
  std::optional<std::size_t> i0;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!phi[i].is_zero()) {
      i0 = i;
      break;
    }
  if (!i0) throw PreconditionError("zero integral admits no normalizing element");
  Vec c0 = basis_vec(a.dim, *i0);
  for (auto& x : c0) x = x / phi[*i0];
  Vec delta = contract_left(cop * c0, phi_prime);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (contract_left(cop.col(i), phi_prime) != phi[i] * delta)
      throw std::logic_error("modular element identity failed");
    if (dot(phi_prime, s.col(i)) != dot(phi, multiply(a, basis_vec(a.dim, i), delta)))
      throw std::logic_error("modular element antipode identity failed");
  }
  return delta;
}

}  // namespace fqh
