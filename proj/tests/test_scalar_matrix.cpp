#include <catch2/catch_amalgamated.hpp>

#include "fqh/matrix.hpp"
#include "fqh/random.hpp"
#include "fqh/scalar.hpp"

using namespace fqh;

namespace {

Scalar sc(int n, int d = 1) { return Scalar(Rat(n, d)); }

Matrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols,
                     long bound = 2) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.gaussian_integer(bound);
  return m;
}

/// PSD of a Hermitian matrix characterized by all principal minors being
/// nonnegative; an independent route to the same answer.
Scalar determinant(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix w = m;
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      w.swap_rows(p, c);
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

bool psd_by_principal_minors(const Matrix& g) {
  std::size_t n = g.rows();
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        sub(i, j) = g(idx[i], idx[j]);
    Scalar d = determinant(sub);
    if (!d.is_real() || d.re < 0) return false;
  }
  return true;
}

bool psd_by_grid(const Matrix& g, long bound) {
  std::size_t n = g.rows();
  std::vector<Scalar> values;
  for (long re = -bound; re <= bound; ++re)
    for (long im = -bound; im <= bound; ++im)
      values.push_back(Scalar(Rat(re), Rat(im)));
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = values[pick[i]];
    Scalar q = dot(conj(x), g * x);
    if (!q.is_real() || q.re < 0) return false;
    std::size_t i = 0;
    while (i < n && ++pick[i] == values.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return true;
}

}  // namespace

TEST_CASE("rational literals parse and print canonically") {
  CHECK(parse_rational("-3/2") == Rat(-3, 2));
  CHECK(parse_rational("4/8") == Rat(1, 2));
  CHECK(rational_to_string(Rat(4, 8)) == "1/2");
  CHECK(rational_to_string(Rat(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rat(7)) == "7");
  CHECK(rational_to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_rational("a"), StructuralError);
  CHECK_THROWS_AS(parse_rational(""), StructuralError);
}

TEST_CASE("gaussian rational field arithmetic") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(conj(conj(Scalar(Rat(1, 2), Rat(-3, 4)))) == Scalar(Rat(1, 2), Rat(-3, 4)));
  Scalar a(Rat(3, 7), Rat(-2, 5)), b(Rat(-1, 3), Rat(4, 9));
  CHECK((a / b) * b == a);
  CHECK(a * (b + Scalar(1)) == a * b + a);
  CHECK_THROWS_AS(a / Scalar(0), StructuralError);
}

TEST_CASE("scalar literal round trip survives random values") {
  Sampler s(Sampler::env_seed(11));
  for (int t = 0; t < 50; ++t) {
    Scalar num = s.gaussian_integer(40);
    Scalar den = s.gaussian_integer(9);
    if (den.is_zero()) continue;
    Scalar x = num / den;
    Scalar back(parse_rational(rational_to_string(x.re)),
                parse_rational(rational_to_string(x.im)));
    CHECK(back == x);
  }
}

TEST_CASE("rank on known matrices") {
  CHECK(rank(Matrix::identity(2)) == 2);
  Matrix ones(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = Scalar(1);
  CHECK(rank(ones) == 1);
  // Two-subgroup Z2-Z2 pairing table in the projection bases.
  Matrix p = Matrix::of({{sc(0), sc(1, 2), sc(-1, 2)},
                         {sc(1, 2), sc(1, 4), sc(1, 4)},
                         {sc(-1, 2), sc(1, 4), sc(1, 4)}});
  CHECK(rank(p) == 3);
}

TEST_CASE("solve distinguishes unique, inconsistent and affine systems") {
  Matrix y = Matrix::of({{sc(5)}, {sc(-2)}});
  auto s1 = solve(Matrix::identity(2), y);
  REQUIRE(s1.kind == SolutionSet::Kind::unique);
  CHECK(s1.particular == y);

  Matrix m2 = Matrix::of({{sc(1)}, {sc(1)}});
  Matrix y2 = Matrix::of({{sc(1)}, {sc(2)}});
  CHECK(solve(m2, y2).kind == SolutionSet::Kind::none);

  Matrix m3 = Matrix::of({{sc(1), sc(1)}});
  Matrix y3 = Matrix::of({{sc(1)}});
  auto s3 = solve(m3, y3);
  REQUIRE(s3.kind == SolutionSet::Kind::affine);
  CHECK(s3.particular.col(0) == Vec{sc(1), sc(0)});
  REQUIRE(s3.null_basis.size() == 1);
  // span{[1,-1]} regardless of scaling convention
  CHECK(s3.null_basis[0][0] + s3.null_basis[0][1] == Scalar(0));
  CHECK(!is_zero(s3.null_basis[0]));
}

TEST_CASE("null space on known matrices") {
  CHECK(null_space(Matrix::identity(3)).empty());
  CHECK(null_space(Matrix(4, 4)).size() == 4);
  auto ns = null_space(Matrix::of({{sc(1), sc(1)}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + ns[0][1] == Scalar(0));
}

TEST_CASE("every solution returned by solve satisfies the system") {
  Sampler s(Sampler::env_seed(23));
  for (int t = 0; t < 25; ++t) {
    Matrix m = random_matrix(s, 3, 4);
    Matrix x = random_matrix(s, 4, 2);
    Matrix y = m * x;
    auto sol = solve(m, y);
    REQUIRE(sol.kind != SolutionSet::Kind::none);
    CHECK(m * sol.particular == y);
    for (const auto& v : sol.null_basis) CHECK(is_zero(m * v));
  }
}

TEST_CASE("kronecker index convention and rank multiplicativity") {
  Matrix e01(2, 2);
  e01(0, 1) = Scalar(1);
  Matrix k = kron(e01, e01);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k(i, j) == ((i == 0 && j == 3) ? Scalar(1) : Scalar(0)));
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  Matrix two(1, 1);
  two(0, 0) = sc(2);
  Matrix m = Matrix::of({{sc(1), sc(-3)}, {sc(0), sc(7)}});
  CHECK(kron(two, m) == sc(2) * m);

  Sampler s(Sampler::env_seed(31));
  for (int t = 0; t < 15; ++t) {
    Matrix a = random_matrix(s, 2, 3, 1);
    Matrix b = random_matrix(s, 3, 2, 1);
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
}

TEST_CASE("kron application agrees with the reshape shortcut") {
  Sampler s(Sampler::env_seed(37));
  Matrix a = random_matrix(s, 3, 3), b = random_matrix(s, 3, 3);
  Vec x = s.covector(9);
  CHECK(apply_kron(a, b, x) == kron(a, b) * x);
}

TEST_CASE("hermitian psd test on frozen cases") {
  // Gram of the double-coset integral on the S3 pair: diag(2, 4) from
  // u² = u, v² = v, uv = 0 and φ(u) = 2, φ(v) = 4.
  CHECK(is_psd_hermitian(Matrix::of({{sc(2), sc(0)}, {sc(0), sc(4)}})));
  CHECK(is_psd_hermitian(Matrix::of({{sc(1), sc(0)}, {sc(0), sc(0)}})));
  // Gram of the family functional at α = 1 in the basis {1, v}.
  CHECK_FALSE(is_psd_hermitian(Matrix::of({{sc(-1), sc(1)}, {sc(1), sc(1)}})));
  CHECK(is_psd_hermitian(Matrix(3, 3)));
  Matrix zero_diag = Matrix::of({{sc(0), sc(1)}, {sc(1), sc(0)}});
  CHECK_FALSE(is_psd_hermitian(zero_diag));
  Matrix non_herm = Matrix::of({{sc(1), sc(2)}, {sc(3), sc(1)}});
  CHECK_THROWS_AS(is_psd_hermitian(non_herm), StructuralError);
  Matrix complex_psd(2, 2);
  complex_psd(0, 0) = sc(2);
  complex_psd(0, 1) = Scalar(Rat(0), Rat(1));
  complex_psd(1, 0) = Scalar(Rat(0), Rat(-1));
  complex_psd(1, 1) = sc(1);
  CHECK(is_psd_hermitian(complex_psd));
}

TEST_CASE("psd test agrees with minor and grid oracles") {
  Sampler s(Sampler::env_seed(41));
  int nontrivial = 0;
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + (t % 2);
    Matrix raw = random_matrix(s, n, n, 2);
    Matrix g = t % 3 == 0 ? raw.conj_transpose() * raw
                          : raw + raw.conj_transpose();
    bool fast = is_psd_hermitian(g);
    CHECK(fast == psd_by_principal_minors(g));
    if (fast)
      CHECK(psd_by_grid(g, 2));
    else
      CHECK_FALSE(psd_by_grid(g, 4));
    nontrivial += fast ? 1 : 0;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("inverse round trips") {
  Sampler s(Sampler::env_seed(43));
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(s, 3, 3);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < 3);
      continue;
    }
    CHECK(*inv * m == Matrix::identity(3));
    CHECK(m * *inv == Matrix::identity(3));
  }
  CHECK_FALSE(inverse(Matrix(2, 2)).has_value());
}

TEST_CASE("flip matrix swaps tensor legs") {
  Vec x{sc(1), sc(2), sc(3), sc(4)};
  CHECK(flip_tensor(x, 2) == Vec{sc(1), sc(3), sc(2), sc(4)});
  CHECK(flip_matrix(2) * x == flip_tensor(x, 2));
}
