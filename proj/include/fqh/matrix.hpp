#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "fqh/scalar.hpp"

namespace fqh {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, Vec entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw StructuralError("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  /// Convenience for literals in tests and fixtures.
  static Matrix of(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw StructuralError("ragged matrix literal");
      std::size_t j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  static Matrix column(const Vec& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const Vec& entries() const { return entries_; }

  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }
  Vec row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
    return v;
  }
  void set_col(std::size_t c, const Vec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix conjugate() const {
    Matrix m = *this;
    for (auto& x : m.entries_) x = fqh::conj(x);
    return m;
  }

  Matrix conj_transpose() const { return transpose().conjugate(); }

  bool is_zero() const { return fqh::is_zero(entries_); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw StructuralError("matrix shape mismatch in addition");
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] += b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw StructuralError("matrix shape mismatch in subtraction");
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
      r.entries_[i] -= b.entries_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw StructuralError("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.entries_) x *= c;
    return r;
  }

  friend Vec operator*(const Matrix& m, const Vec& v) {
    if (m.cols_ != v.size())
      throw StructuralError("matrix/vector shape mismatch");
    Vec r(m.rows_);
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < m.rows_; ++i) {
        const Scalar& mij = m(i, j);
        if (!mij.is_zero()) r[i] += mij * v[j];
      }
    }
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec entries_;
};

/// Kronecker product; block (i,k) of the result sits at row i*n.rows + k,
/// which is the tensor-index convention used for A⊗A throughout.
inline Matrix kron(const Matrix& m, const Matrix& n) {
  Matrix r(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& mij = m(i, j);
      if (mij.is_zero()) continue;
      for (std::size_t k = 0; k < n.rows(); ++k)
        for (std::size_t l = 0; l < n.cols(); ++l) {
          const Scalar& nkl = n(k, l);
          if (!nkl.is_zero())
            r(i * n.rows() + k, j * n.cols() + l) = mij * nkl;
        }
    }
  return r;
}

inline Matrix reshape(const Vec& v, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, v);
}

inline Vec flatten(const Matrix& m) { return m.entries(); }

/// Reduces m to reduced row echelon form in place, considering only the
/// first limit_cols columns for pivots (trailing columns ride along as
/// right-hand sides). Returns the pivot column indices.
inline std::vector<std::size_t> rref_in_place(Matrix& m,
                                              std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Scalar pivot = m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) / pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref_in_place(work, work.cols()).size();
}

inline std::vector<Vec> null_space(const Matrix& m) {
  Matrix work = m;
  auto pivots = rref_in_place(work, work.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Full description of {X : M·X = Y}.
struct SolutionSet {
  enum class Kind { none, unique, affine };
  Kind kind = Kind::none;
  Matrix particular;            // meaningful unless kind == none
  std::vector<Vec> null_basis;  // basis of ker M, empty when unique
};

inline SolutionSet solve(const Matrix& m, const Matrix& y) {
  if (m.rows() != y.rows())
    throw StructuralError("solve: row count mismatch");
  Matrix aug(m.rows(), m.cols() + y.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) aug(i, m.cols() + j) = y(i, j);
  }
  auto pivots = rref_in_place(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (!aug(i, m.cols() + j).is_zero()) return SolutionSet{};
  SolutionSet s;
  s.particular = Matrix(m.cols(), y.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < y.cols(); ++j)
      s.particular(pivots[r], j) = aug(r, m.cols() + j);
  if (pivots.size() == m.cols()) {
    s.kind = SolutionSet::Kind::unique;
  } else {
    s.kind = SolutionSet::Kind::affine;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      Vec v(m.cols());
      v[f] = Scalar(1);
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -aug(r, f);
      s.null_basis.push_back(std::move(v));
    }
  }
  return s;
}

/// Solves M·x = rhs expecting exactly one solution.
inline Vec solve_unique(const Matrix& m, const Vec& rhs) {
  auto s = solve(m, Matrix::column(rhs));
  if (s.kind != SolutionSet::Kind::unique)
    throw PreconditionError("linear system does not have a unique solution");
  return s.particular.col(0);
}

/// Solves M·X = Y expecting a unique solution matrix.
inline Matrix solve_unique(const Matrix& m, const Matrix& y) {
  auto s = solve(m, y);
  if (s.kind != SolutionSet::Kind::unique)
    throw PreconditionError("linear system does not have a unique solution");
  return s.particular;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto s = solve(m, Matrix::identity(m.rows()));
  if (s.kind != SolutionSet::Kind::unique) return std::nullopt;
  return s.particular;
}

inline bool is_hermitian(const Matrix& m) {
  return m.rows() == m.cols() && m == m.conj_transpose();
}

/// Exact positive-semidefiniteness for a Hermitian matrix, decided by
/// recursive Schur complements: a zero matrix is PSD; a negative diagonal
/// entry, or a zero diagonal entry with a nonzero row, disqualifies;
/// otherwise pivot on a positive diagonal entry and recurse.
inline bool is_psd_hermitian(const Matrix& g) {
  if (!is_hermitian(g))
    throw StructuralError("is_psd_hermitian requires a Hermitian matrix");
  std::size_t n = g.rows();
  std::vector<Vec> work(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i][j] = g(i, j);
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  while (!active.empty()) {
    bool all_zero = true;
    for (auto i : active) {
      for (auto j : active)
        if (!work[i][j].is_zero()) {
          all_zero = false;
          break;
        }
      if (!all_zero) break;
    }
    if (all_zero) return true;

    std::optional<std::size_t> pivot;
    for (auto i : active) {
      const Scalar& d = work[i][i];
      if (d.re < 0) return false;
      if (d.re == 0) {
        for (auto j : active)
          if (!work[i][j].is_zero()) return false;
      } else if (!pivot) {
        pivot = i;
      }
    }
    if (!pivot) return false;

    std::size_t p = *pivot;
    Scalar d = work[p][p];
    std::vector<std::size_t> rest;
    for (auto i : active)
      if (i != p) rest.push_back(i);
    for (auto i : rest)
      for (auto j : rest) work[i][j] -= work[i][p] * work[p][j] / d;
    active = std::move(rest);
  }
  return true;
}

/// Applies kron(A, B) to a vector reshaped as a matrix: result = A·X·Bᵀ.
inline Vec apply_kron(const Matrix& a, const Matrix& b, const Vec& x) {
  Matrix xm = reshape(x, a.cols(), b.cols());
  return flatten(a * xm * b.transpose());
}

/// The flip a⊗a' -> a'⊗a on coordinates of A⊗A.
inline Vec flip_tensor(const Vec& x, std::size_t dim) {
  Vec r(x.size());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) r[k * dim + i] = x[i * dim + k];
  return r;
}

inline Matrix flip_matrix(std::size_t dim) {
  Matrix z(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      z(k * dim + i, i * dim + k) = Scalar(1);
  return z;
}

}  // namespace fqh
