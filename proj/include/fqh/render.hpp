#pragma once

#include <string>

#include "fqh/algebra.hpp"
#include "fqh/duality.hpp"

namespace fqh {

/// Coefficient formatting for tensor sums: "", "-", "1/2 ", "(1+i) ".
inline std::string format_scalar(const Scalar& x) {
  if (x.is_real()) return rational_to_string(x.re);
  if (x.re == 0) {
    if (x.im == 1) return "i";
    if (x.im == -1) return "-i";
    return rational_to_string(x.im) + "i";
  }
  std::string im = x.im > 0 ? "+" + rational_to_string(x.im)
                            : rational_to_string(x.im);
  if (x.im == 1) im = "+";
  if (x.im == -1) im = "-";
  return "(" + rational_to_string(x.re) + im + "i)";
}

namespace detail {

inline void append_term(std::string& out, const Scalar& c,
                        const std::string& symbol) {
  bool negative = c.is_real() && c.re < 0;
  Scalar mag = negative ? -c : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (!(mag.is_real() && mag.re == 1)) out += format_scalar(mag) + " ";
  out += symbol;
}

}  // namespace detail

inline std::string render_element(const Algebra& a, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < a.dim; ++i)
    if (!v[i].is_zero()) detail::append_term(out, v[i], a.basis[i]);
  return out.empty() ? "0" : out;
}

inline std::string render_tensor(const Algebra& a, const Vec& t) {
  std::string out;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Scalar& c = t[i * a.dim + k];
      if (!c.is_zero())
        detail::append_term(out, c, a.basis[i] + "⊗" + a.basis[k]);
    }
  return out.empty() ? "0" : out;
}

inline std::string render_functional(const Algebra& a, const std::string& name,
                                     const Vec& f) {
  std::string out;
  for (std::size_t i = 0; i < a.dim; ++i) {
    out += name + "(" + a.basis[i] + ") = " + format_scalar(f[i]);
    if (i + 1 < a.dim) out += ", ";
  }
  return out;
}

inline std::string render_hypergroup(const FQH& f) {
  std::string out;
  const Algebra& a = f.algebra;
  out += "dim " + std::to_string(a.dim) + (a.star ? ", *-algebra" : "") + "\n";
  for (std::size_t j = 0; j < a.dim; ++j)
    out += "Δ(" + a.basis[j] + ") = " + render_tensor(a, f.coproduct.col(j)) +
           "\n";
  out += render_functional(a, "ε", f.counit) + "\n";
  out += render_functional(a, "φ", f.integral) + "\n";
  if (f.antipode)
    for (std::size_t j = 0; j < a.dim; ++j)
      out += "S(" + a.basis[j] + ") = " +
             render_element(a, f.antipode->col(j)) + "\n";
  return out;
}

inline std::string render_certificate(const FQHCertificate& c) {
  auto line = [](const std::string& name, bool v) {
    return "  " + name + ": " + (v ? "ok" : "FAIL") + "\n";
  };
  std::string out;
  out += line("algebra_ok", c.algebra_ok);
  out += line("coassoc", c.coassoc);
  out += line("counit_law", c.counit_law);
  out += line("counit_hom", c.counit_hom);
  out += line("delta_unital", c.delta_unital);
  out += line("integral_faithful", c.integral_faithful);
  out += line("integral_equation", c.integral_equation);
  out += line("antipode_anti_iso", c.antipode_anti_iso);
  out += line("antipode_flips", c.antipode_flips);
  if (c.star_ok) out += line("star_ok", *c.star_ok);
  for (const auto& [field, lines] : c.witnesses)
    for (const auto& w : lines) out += "    " + field + ": " + w + "\n";
  return out;
}

}  // namespace fqh
