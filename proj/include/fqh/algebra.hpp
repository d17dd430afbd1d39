#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqh/matrix.hpp"
#include "fqh/random.hpp"
#include "fqh/scalar.hpp"

namespace fqh {

enum class Side { left, right };

/// Finite-dimensional unital algebra given by structure constants.
/// mult[i*dim+j] holds the coordinates of e_i e_j. The optional involution
/// acts as a* = star · conj(coords(a)); the matrix factors out the
/// conjugate-linearity.
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Vec> mult;
  Vec unit;
  std::optional<Matrix> star;

  const Vec& product_of(std::size_t i, std::size_t j) const {
    return mult[i * dim + j];
  }
};

inline Algebra make_algebra(std::vector<std::string> basis,
                            std::vector<Vec> mult, Vec unit,
                            std::optional<Matrix> star = std::nullopt) {
  Algebra a;
  a.dim = basis.size();
  if (a.dim == 0) throw StructuralError("algebra must have dimension >= 1");
  a.basis = std::move(basis);
  a.mult = std::move(mult);
  a.unit = std::move(unit);
  a.star = std::move(star);
  if (a.mult.size() != a.dim * a.dim)
    throw StructuralError("structure constant tensor has wrong shape");
  for (const auto& v : a.mult)
    if (v.size() != a.dim)
      throw StructuralError("structure constant vector has wrong length");
  if (a.unit.size() != a.dim) throw StructuralError("unit vector has wrong length");
  if (a.star && (a.star->rows() != a.dim || a.star->cols() != a.dim))
    throw StructuralError("involution matrix has wrong shape");
  return a;
}

inline Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw StructuralError("coordinate vector length mismatch");
  Vec r(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& m = a.product_of(i, j);
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!m[k].is_zero()) r[k] += c * m[k];
    }
  }
  return r;
}

inline Matrix left_mult_matrix(const Algebra& a, const Vec& x) {
  Matrix m(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j)
    m.set_col(j, multiply(a, x, basis_vec(a.dim, j)));
  return m;
}

inline Matrix right_mult_matrix(const Algebra& a, const Vec& x) {
  Matrix m(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    m.set_col(i, multiply(a, basis_vec(a.dim, i), x));
  return m;
}

inline Vec star_apply(const Algebra& a, const Vec& x) {
  if (!a.star) throw PreconditionError("algebra carries no involution");
  return *a.star * conj(x);
}

/// x ⊗ y in the row-major tensor coordinates (index i*dim + k).
inline Vec tensor(const Vec& x, const Vec& y) {
  Vec r(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < y.size(); ++k)
      if (!y[k].is_zero()) r[i * y.size() + k] = x[i] * y[k];
  }
  return r;
}

/// Product in A ⊗ A of two tensor coordinate vectors.
inline Vec tensor_multiply(const Algebra& a, const Vec& u, const Vec& v) {
  std::size_t d = a.dim;
  if (u.size() != d * d || v.size() != d * d)
    throw StructuralError("tensor coordinate length mismatch");
  Vec r(d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Scalar& upq = u[p * d + q];
      if (upq.is_zero()) continue;
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) {
          const Scalar& vst = v[s * d + t];
          if (vst.is_zero()) continue;
          Scalar c = upq * vst;
          const Vec& m1 = a.product_of(p, s);
          const Vec& m2 = a.product_of(q, t);
          for (std::size_t k = 0; k < d; ++k) {
            if (m1[k].is_zero()) continue;
            Scalar ck = c * m1[k];
            for (std::size_t l = 0; l < d; ++l)
              if (!m2[l].is_zero()) r[k * d + l] += ck * m2[l];
          }
        }
    }
  return r;
}

/// (ι ⊗ f) applied to a tensor coordinate vector.
inline Vec contract_right(const Vec& u, const Vec& f) {
  std::size_t d = f.size();
  Vec r(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      if (!u[k * d + l].is_zero() && !f[l].is_zero()) r[k] += u[k * d + l] * f[l];
  return r;
}

/// (f ⊗ ι) applied to a tensor coordinate vector.
inline Vec contract_left(const Vec& u, const Vec& f) {
  std::size_t d = f.size();
  Vec r(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (f[k].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l)
      if (!u[k * d + l].is_zero()) r[l] += f[k] * u[k * d + l];
  }
  return r;
}

struct AlgebraReport {
  bool associative = true;
  bool unital = true;
  bool abelian = true;
  std::optional<bool> star_ok;
  std::vector<std::array<std::size_t, 3>> associativity_failures;
  std::vector<std::size_t> unit_failures;
  std::vector<std::string> star_failures;

  bool ok() const { return associative && unital && star_ok.value_or(true); }
};

inline AlgebraReport validate_algebra(const Algebra& a) {
  AlgebraReport rep;
  std::size_t d = a.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = multiply(a, a.product_of(i, j), basis_vec(d, k));
        Vec rhs = multiply(a, basis_vec(d, i), a.product_of(j, k));
        if (lhs != rhs) {
          rep.associative = false;
          rep.associativity_failures.push_back({i, j, k});
        }
      }
      if (a.product_of(i, j) != a.product_of(j, i)) rep.abelian = false;
    }
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = basis_vec(d, i);
    if (multiply(a, a.unit, e) != e || multiply(a, e, a.unit) != e) {
      rep.unital = false;
      rep.unit_failures.push_back(i);
    }
  }
  if (a.star) {
    rep.star_ok = true;
    const Matrix& s = *a.star;
    if (s * s.conjugate() != Matrix::identity(d)) {
      rep.star_ok = false;
      rep.star_failures.push_back("involution is not involutive");
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec lhs = star_apply(a, a.product_of(i, j));
        Vec rhs = multiply(a, star_apply(a, basis_vec(d, j)),
                           star_apply(a, basis_vec(d, i)));
        if (lhs != rhs) {
          rep.star_ok = false;
          rep.star_failures.push_back("(e" + std::to_string(i) + " e" +
                                      std::to_string(j) +
                                      ")* != e" + std::to_string(j) + "* e" +
                                      std::to_string(i) + "*");
        }
      }
  }
  return rep;
}

/// Gram matrix M[i][j] = ω(e_i e_j); nonsingular iff ω is faithful.
inline Matrix gram(const Algebra& a, const Vec& omega) {
  Matrix m(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      m(i, j) = dot(omega, a.product_of(i, j));
  return m;
}

inline bool is_faithful(const Algebra& a, const Vec& omega) {
  return rank(gram(a, omega)) == a.dim;
}

/// Elements c, c' with f = ω(· c) = ω(c' ·).
inline std::pair<Vec, Vec> represent_functional(const Algebra& a,
                                                const Vec& omega,
                                                const Vec& f) {
  Matrix m = gram(a, omega);
  if (rank(m) != a.dim)
    throw PreconditionError("represent_functional requires a faithful functional");
  Vec c_right = solve_unique(m, f);
  Vec c_left = solve_unique(m.transpose(), f);
  return {c_right, c_left};
}

/// The unique automorphism σ with ω(ac) = ω(c σ(a)); columns are σ(e_i).
inline Matrix modular_automorphism(const Algebra& a, const Vec& omega) {
  Matrix m = gram(a, omega);
  if (rank(m) != a.dim)
    throw PreconditionError("modular automorphism requires a faithful functional");
  Matrix sigma = solve_unique(m, m.transpose());
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec si = sigma.col(i), sj = sigma.col(j);
      if (multiply(a, si, sj) != sigma * a.product_of(i, j))
        throw std::logic_error("modular automorphism is not multiplicative");
    }
  for (std::size_t i = 0; i < a.dim; ++i)
    if (dot(omega, sigma.col(i)) != omega[i])
      throw std::logic_error("modular automorphism does not preserve the functional");
  return sigma;
}

/// Positivity of ω on a *-algebra: the sesquilinear Gram ω(e_i* e_j) must be
/// Hermitian positive semidefinite.
inline bool is_positive(const Algebra& a, const Vec& omega) {
  if (!a.star) throw PreconditionError("is_positive requires an involution");
  Matrix g(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec istar = star_apply(a, basis_vec(a.dim, i));
    for (std::size_t j = 0; j < a.dim; ++j)
      g(i, j) = dot(omega, multiply(a, istar, basis_vec(a.dim, j)));
  }
  if (!is_hermitian(g)) return false;
  return is_psd_hermitian(g);
}

struct CoproductReport {
  bool coassociative = true;
  bool counit_law = true;
  bool unital = true;
  bool homomorphism = true;
  bool coabelian = true;
  std::optional<bool> star_map;
};

/// Checks a coproduct matrix (dim² × dim, column j = Δ(e_j)) together with a
/// counit candidate.
inline CoproductReport validate_coproduct(const Algebra& a, const Matrix& cop,
                                          const Vec& eps) {
  std::size_t d = a.dim;
  if (cop.rows() != d * d || cop.cols() != d)
    throw StructuralError("coproduct matrix has wrong shape");
  if (eps.size() != d) throw StructuralError("counit has wrong length");
  CoproductReport rep;
  for (std::size_t j = 0; j < d; ++j) {
    Vec delta = cop.col(j);
    Matrix x = reshape(delta, d, d);
    // (Δ⊗ι)Δ = Δ applied to the first leg, (ι⊗Δ)Δ to the second.
    if (flatten(cop * x) != flatten(x * cop.transpose()))
      rep.coassociative = false;
    Vec left(d), right(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        left[k] += eps[i] * x(i, k);
        right[i] += x(i, k) * eps[k];
      }
    if (left != basis_vec(d, j) || right != basis_vec(d, j))
      rep.counit_law = false;
    if (flip_tensor(delta, d) != delta) rep.coabelian = false;
  }
  if (cop * a.unit != tensor(a.unit, a.unit)) rep.unital = false;
  for (std::size_t i = 0; i < d && rep.homomorphism; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = cop * a.product_of(i, j);
      Vec rhs = tensor_multiply(a, cop.col(i), cop.col(j));
      if (lhs != rhs) {
        rep.homomorphism = false;
        break;
      }
    }
  if (a.star) {
    const Matrix& s = *a.star;
    rep.star_map = (cop * s == kron(s, s) * cop.conjugate());
  }
  return rep;
}

/// Samples deterministic Gaussian-integer covectors until one is faithful.
/// Returns nullopt when the budget is exhausted; that outcome is
/// inconclusive, not a proof that no faithful functional exists.
inline std::optional<Vec> find_faithful_functional(const Algebra& a,
                                                   Sampler& sampler,
                                                   std::size_t budget = 64) {
  for (std::size_t t = 0; t < budget; ++t) {
    Vec omega = sampler.covector(a.dim);
    if (is_faithful(a, omega)) return omega;
  }
  return std::nullopt;
}

}  // namespace fqh
