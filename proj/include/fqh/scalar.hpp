#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fqh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Malformed input: bad shapes, unparsable literals, invalid tables.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valid input that violates a documented mathematical precondition.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw StructuralError("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw StructuralError("sign without digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw StructuralError("invalid integer literal: " + std::string(s));
    return Int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw StructuralError("zero denominator: " + std::string(text));
  return Rat(num, den);
}

inline std::string rational_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Gaussian rational re + im*i, the ground field of the whole library.
struct Scalar {
  Rat re;
  Rat im;

  Scalar() = default;
  Scalar(int n) : re(n) {}
  Scalar(Rat r) : re(std::move(r)) {}
  Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const { return Scalar(-re, -im); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw StructuralError("division by zero scalar");
    Rat n = b.re * b.re + b.im * b.im;
    return Scalar((a.re * b.re + a.im * b.im) / n,
                  (a.im * b.re - a.re * b.im) / n);
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
};

inline Scalar conj(const Scalar& x) { return Scalar(x.re, -x.im); }

using Vec = std::vector<Scalar>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

/// Bilinear dot product, no conjugation; functionals apply this way.
inline Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

inline Vec conj(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = conj(v[i]);
  return r;
}

inline Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Scalar(1);
  return v;
}

}  // namespace fqh
