#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqh/constructions.hpp"
#include "fqh/duality.hpp"
#include "fqh/integrals.hpp"
#include "fqh/pairing.hpp"

namespace fqh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "fqhg/1";

inline Json to_json(const Scalar& x) {
  return Json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

inline Scalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw StructuralError("scalar must be an object with re and im strings");
  if (!j["re"].is_string() || !j["im"].is_string())
    throw StructuralError("scalar parts must be strings");
  return Scalar(parse_rational(j["re"].get<std::string>()),
                parse_rational(j["im"].get<std::string>()));
}

inline Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

inline Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw StructuralError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = to_json(m.entries());
  return j;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw StructuralError("matrix must carry rows, cols and entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw StructuralError("matrix shape must be unsigned");
  return Matrix(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(),
                vec_from_json(j["entries"]));
}

inline Json to_json(const Algebra& a) {
  Json j;
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  j["unit"] = to_json(a.unit);
  Json mult = Json::array();
  for (const auto& v : a.mult) mult.push_back(to_json(v));
  j["mult"] = mult;
  if (a.star) j["star"] = to_json(*a.star);
  return j;
}

inline Algebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis") ||
      !j.contains("unit") || !j.contains("mult"))
    throw StructuralError("algebra must carry dim, basis, unit and mult");
  std::vector<std::string> basis;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw StructuralError("basis labels must be strings");
    basis.push_back(l.get<std::string>());
  }
  if (j["dim"].get<std::size_t>() != basis.size())
    throw StructuralError("algebra dim does not match basis length");
  std::vector<Vec> mult;
  for (const auto& v : j["mult"]) mult.push_back(vec_from_json(v));
  std::optional<Matrix> star;
  if (j.contains("star")) star = matrix_from_json(j["star"]);
  return make_algebra(std::move(basis), std::move(mult),
                      vec_from_json(j["unit"]), std::move(star));
}

inline Json to_json(const DualPair& d) {
  Json j;
  j["algebra_a"] = to_json(d.a);
  j["algebra_b"] = to_json(d.b);
  j["pairing"] = to_json(d.p);
  return j;
}

inline DualPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra_a") || !j.contains("algebra_b") ||
      !j.contains("pairing"))
    throw StructuralError("dual pair must carry algebra_a, algebra_b, pairing");
  return make_dual_pair(algebra_from_json(j["algebra_a"]),
                        algebra_from_json(j["algebra_b"]),
                        matrix_from_json(j["pairing"]));
}

inline Json to_json(const FQH& f) {
  Json j;
  j["algebra"] = to_json(f.algebra);
  j["coproduct"] = to_json(f.coproduct);
  j["counit"] = to_json(f.counit);
  j["integral"] = to_json(f.integral);
  if (f.antipode) j["antipode"] = to_json(*f.antipode);
  return j;
}

inline FQH fqh_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("coproduct") ||
      !j.contains("counit") || !j.contains("integral"))
    throw StructuralError(
        "hypergroup data must carry algebra, coproduct, counit, integral");
  FQH f;
  f.algebra = algebra_from_json(j["algebra"]);
  f.coproduct = matrix_from_json(j["coproduct"]);
  f.counit = vec_from_json(j["counit"]);
  f.integral = vec_from_json(j["integral"]);
  if (j.contains("antipode")) f.antipode = matrix_from_json(j["antipode"]);
  if (f.coproduct.rows() != f.algebra.dim * f.algebra.dim ||
      f.coproduct.cols() != f.algebra.dim)
    throw StructuralError("coproduct matrix has wrong shape");
  if (f.counit.size() != f.algebra.dim || f.integral.size() != f.algebra.dim)
    throw StructuralError("functional length does not match the algebra");
  return f;
}

inline Json to_json(const AntipodeResult& r) {
  Json j;
  switch (r.status) {
    case AntipodeResult::Status::no_solution: j["status"] = "no_solution"; break;
    case AntipodeResult::Status::unique: j["status"] = "unique"; break;
    case AntipodeResult::Status::non_unique: j["status"] = "non_unique"; break;
  }
  if (r.antipode) j["S"] = to_json(*r.antipode);
  j["freedom_dim"] = r.freedom_dim;
  if (r.witness) j["witness"] = Json::array({r.witness->first, r.witness->second});
  return j;
}

inline Json to_json(const FQHCertificate& c) {
  Json j;
  j["algebra_ok"] = c.algebra_ok;
  j["coassoc"] = c.coassoc;
  j["counit_law"] = c.counit_law;
  j["counit_hom"] = c.counit_hom;
  j["delta_unital"] = c.delta_unital;
  j["integral_faithful"] = c.integral_faithful;
  j["integral_equation"] = c.integral_equation;
  j["antipode_anti_iso"] = c.antipode_anti_iso;
  j["antipode_flips"] = c.antipode_flips;
  if (c.star_ok) j["star_ok"] = *c.star_ok;
  Json w = Json::object();
  for (const auto& [field, lines] : c.witnesses) w[field] = lines;
  j["witnesses"] = w;
  j["all"] = c.all();
  return j;
}

inline Json to_json(const PairBundle& b) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = b.kind;
  j["pair"] = to_json(b.pair);
  j["fqh_a"] = to_json(b.side_a);
  if (b.side_b) j["fqh_b"] = to_json(*b.side_b);
  return j;
}

inline PairBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw StructuralError("bundle must be a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchemaTag)
    throw StructuralError("bundle schema must be '" + std::string(kSchemaTag) + "'");
  if (!j.contains("pair") || !j.contains("fqh_a"))
    throw StructuralError("bundle must carry pair and fqh_a");
  PairBundle b;
  b.kind = j.contains("kind") && j["kind"].is_string()
               ? j["kind"].get<std::string>()
               : "bundle";
  b.pair = pair_from_json(j["pair"]);
  b.side_a = fqh_from_json(j["fqh_a"]);
  if (j.contains("fqh_b")) b.side_b = fqh_from_json(j["fqh_b"]);
  if (b.side_a.algebra.dim != b.pair.a.dim)
    throw StructuralError("fqh_a does not match the pair dimension");
  return b;
}

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw StructuralError("input is not valid JSON");
  return j;
}

}  // namespace fqh
