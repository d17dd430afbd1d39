#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fqh/constructions.hpp"
#include "fqh/json_io.hpp"
#include "fqh/render.hpp"

namespace {

using namespace fqh;

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;

std::vector<std::size_t> parse_generators(const FiniteGroup& g,
                                          const std::string& spec) {
  std::vector<std::size_t> gens;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    if (!current.empty()) {
      gens.push_back(element_by_label(g, current));
      current.clear();
    }
  };
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    current += c;
  }
  flush();
  if (gens.empty()) throw StructuralError("empty subgroup generator list");
  return gens;
}

void write_output(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot open output file: " + path);
  out << text;
}

PairBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return bundle_from_json(parse_json_text(buf.str()));
}

struct BuildOptions {
  std::string preset_kind;
  std::string group = "S3";
  std::string subgroup;
  std::string h_spec;
  std::string k_spec;
  bool free_product = false;
  std::string family_kind = "vw";
  std::string alpha = "-3/2";
  std::string counterexample_name;
  std::string lambda = "0";
  std::string p = "1";
  std::string q = "2";
  std::string output = "-";
  std::vector<std::string> positional;
};

PairBundle build_bundle(BuildOptions opt) {
  if (opt.preset_kind == "hecke") {
    FiniteGroup g = preset(opt.group);
    if (opt.subgroup.empty())
      throw StructuralError("hecke requires --subgroup generators");
    Subgroup h = subgroup_generate(g, parse_generators(g, opt.subgroup));
    return hecke_pair(g, h);
  }
  if (opt.preset_kind == "twosub") {
    for (const auto& v : opt.positional) {
      if (v.rfind("H=", 0) == 0) opt.h_spec = v.substr(2);
      else if (v.rfind("K=", 0) == 0) opt.k_spec = v.substr(2);
      else throw StructuralError("unexpected positional argument: " + v);
    }
    if (opt.free_product) {
      if (opt.h_spec.empty() || opt.k_spec.empty())
        throw StructuralError("twosub --free requires --h and --k group presets");
      return twosub_pair(omega_free_product(preset(opt.h_spec), preset(opt.k_spec)));
    }
    FiniteGroup g = preset(opt.group);
    if (opt.h_spec.empty() || opt.k_spec.empty())
      throw StructuralError("twosub requires --h and --k subgroup generators");
    Subgroup h = subgroup_generate(g, parse_generators(g, opt.h_spec));
    Subgroup k = subgroup_generate(g, parse_generators(g, opt.k_spec));
    return twosub_pair(omega_from_group(g, h, k));
  }
  if (opt.preset_kind == "family") {
    Scalar alpha(parse_rational(opt.alpha));
    AlphaKind kind;
    if (opt.family_kind == "vw") kind = AlphaKind::vw;
    else if (opt.family_kind == "vy") kind = AlphaKind::vy;
    else if (opt.family_kind == "xy") kind = AlphaKind::xy;
    else throw StructuralError("unknown family kind: " + opt.family_kind);
    if (kind != AlphaKind::xy && alpha == Scalar(-1))
      throw PreconditionError("α=−1 forbidden: φ cannot be faithful");
    return alpha_dual_pair(kind, alpha);
  }
  if (opt.preset_kind == "counterexample") {
    if (opt.counterexample_name == "groupoid2") return counterexample_groupoid2();
    if (opt.counterexample_name == "c3") return counterexample_c3();
    if (opt.counterexample_name == "c4")
      return counterexample_c4(parse_rational(opt.lambda));
    if (opt.counterexample_name == "m2")
      return counterexample_m2(parse_rational(opt.p), parse_rational(opt.q));
    throw StructuralError("unknown counterexample: " + opt.counterexample_name);
  }
  throw StructuralError("unknown build preset: " + opt.preset_kind);
}

int run_verify(const std::string& input, const std::string& format) {
  PairBundle b = load_bundle(input);
  bool all = true;
  Json out;
  out["schema"] = kSchemaTag;
  auto one = [&](const FQH& f, const std::string& name) {
    FQHCertificate cert = verify_fqh(f.algebra, f.coproduct, f.counit, f.integral);
    if (f.antipode && cert.antipode && *f.antipode != *cert.antipode) {
      cert.witnesses["antipode_anti_iso"].push_back(
          "stored antipode differs from the solved one");
      cert.integral_equation = false;
    }
    all = all && cert.all();
    if (format == "text") {
      std::cout << name << ":\n" << render_certificate(cert);
    } else {
      out[name] = to_json(cert);
    }
  };
  one(b.side_a, "certificate_a");
  if (b.side_b) one(*b.side_b, "certificate_b");
  if (format != "text") std::cout << out.dump(2) << "\n";
  return all ? kExitOk : kExitCertificate;
}

int run_dualize(const std::string& input, const std::string& output) {
  PairBundle b = load_bundle(input);
  std::vector<std::string> notes;
  FQH dual = dual_fqh(b.pair, b.side_a, &notes);
  PairBundle out;
  out.kind = b.kind + "-dual";
  DualPair flipped = flip_pair(b.pair);
  flipped.a = dual.algebra;
  out.pair = flipped;
  out.side_a = dual;
  out.side_b = b.side_a;
  Json j = to_json(out);
  if (!notes.empty()) j["notes"] = notes;
  write_output(j, output);
  return kExitOk;
}

int run_pair_check(const std::string& input, const std::string& format) {
  PairBundle b = load_bundle(input);
  const DualPair& d = b.pair;
  Json out;
  out["schema"] = kSchemaTag;
  bool nondeg = check_nondegenerate(d);
  out["nondegenerate"] = nondeg;
  bool ok = nondeg;
  if (nondeg) {
    bool roundtrip = product_roundtrip(d, AlgebraSide::a) &&
                     product_roundtrip(d, AlgebraSide::b);
    out["product_roundtrip"] = roundtrip;
    Vec eps_a = induced_counit(d, AlgebraSide::a);
    Vec eps_b = induced_counit(d, AlgebraSide::b);
    Matrix cop_a = induced_coproduct(d, AlgebraSide::a);
    Matrix cop_b = induced_coproduct(d, AlgebraSide::b);
    bool unital_vs_hom =
        (validate_coproduct(d.a, cop_a, eps_a).unital ==
         counit_is_homomorphism(d.b, eps_b)) &&
        (validate_coproduct(d.b, cop_b, eps_b).unital ==
         counit_is_homomorphism(d.a, eps_a));
    out["unital_iff_dual_counit_hom"] = unital_vs_hom;
    bool actions = true;
    for (auto kind : {ActionKind::b_tri_a, ActionKind::a_lt_b,
                      ActionKind::a_tri_b, ActionKind::b_lt_a}) {
      ActionReport r = check_action(d, kind);
      actions = actions && r.faithful && r.unital && r.nondegenerate;
    }
    out["actions_faithful_unital_nondegenerate"] = actions;
    ok = ok && roundtrip && unital_vs_hom && actions;
    if (d.a.star && d.b.star) {
      StarPairingReport sr = check_star_pairing(d);
      Json star;
      star["delta_star_a"] = sr.delta_star_a;
      star["delta_star_b"] = sr.delta_star_b;
      star["s_anti_iso_a"] = sr.s_anti_iso_a;
      star["s_anti_iso_b"] = sr.s_anti_iso_b;
      star["s_flips_a"] = sr.s_flips_a;
      star["s_flips_b"] = sr.s_flips_b;
      star["adjointness"] = sr.adjointness;
      star["action_star_exchange"] = sr.action_star_exchange;
      star["action_star_absorb"] = sr.action_star_absorb;
      star["action_antipode_slide"] = sr.action_antipode_slide;
      out["star"] = star;
    }
  }
  out["ok"] = ok;
  if (format == "text") {
    for (auto& [k, v] : out.items())
      if (k != "schema") std::cout << k << ": " << v.dump() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitCertificate;
}

int run_report(const std::string& input, const std::string& format) {
  PairBundle b = load_bundle(input);
  if (format == "json") {
    std::cout << to_json(b).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "bundle: " << b.kind << "\n";
  std::cout << "side A:\n" << render_hypergroup(b.side_a);
  if (b.side_b) std::cout << "side B:\n" << render_hypergroup(*b.side_b);
  std::cout << "pairing:\n";
  for (std::size_t i = 0; i < b.pair.p.rows(); ++i) {
    std::cout << "  ";
    for (std::size_t j = 0; j < b.pair.p.cols(); ++j)
      std::cout << format_scalar(b.pair.p(i, j))
                << (j + 1 < b.pair.p.cols() ? " " : "");
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructor and verifier for finite quantum hypergroups"};
  app.require_subcommand(1);

  BuildOptions opt;
  std::string input, output = "-", format = "json";

  CLI::App* build = app.add_subcommand("build", "construct a preset bundle");
  build->require_subcommand(1);
  CLI::App* hecke = build->add_subcommand("hecke", "double-coset pair of (G, H)");
  hecke->add_option("--group", opt.group, "group preset name")->capture_default_str();
  hecke->add_option("--subgroup", opt.subgroup, "comma-separated generator labels");
  CLI::App* twosub = build->add_subcommand("twosub", "two-subgroup groupoid pair");
  twosub->set_help_flag("--help", "print help");  // frees --h for the subgroup
  twosub->add_flag("--free", opt.free_product, "subgroups inside their free product");
  twosub->add_option("--group", opt.group, "ambient group preset")->capture_default_str();
  twosub->add_option("--h", opt.h_spec, "H: generators, or a preset with --free");
  twosub->add_option("--k", opt.k_spec, "K: generators, or a preset with --free");
  twosub->add_option("spec", opt.positional, "positional H=... K=... forms");
  CLI::App* family = build->add_subcommand("family", "two-dimensional pairs");
  family->add_option("--kind", opt.family_kind, "vw, vy or xy")->capture_default_str();
  family->add_option("--alpha", opt.alpha, "rational parameter")->capture_default_str();
  CLI::App* cx = build->add_subcommand("counterexample",
                                       "invariant-vs-integral fixtures");
  cx->add_option("--name", opt.counterexample_name, "groupoid2, c3, c4 or m2")
      ->required();
  cx->add_option("--lambda", opt.lambda, "c4 parameter")->capture_default_str();
  cx->add_option("--p", opt.p, "m2 parameter p")->capture_default_str();
  cx->add_option("--q", opt.q, "m2 parameter q")->capture_default_str();
  for (CLI::App* sub : {hecke, twosub, family, cx})
    sub->add_option("-o,--output", opt.output, "output path, - for stdout")
        ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "print the certificate");
  verify->add_option("input", input, "bundle file")->required();
  verify->add_option("--format", format, "json or text")->capture_default_str();

  CLI::App* dualize = app.add_subcommand("dualize", "write the dual bundle");
  dualize->add_option("input", input, "bundle file")->required();
  dualize->add_option("-o,--output", output, "output path")->capture_default_str();

  CLI::App* pair_check = app.add_subcommand("pair-check", "pairing diagnostics");
  pair_check->add_option("input", input, "bundle file")->required();
  pair_check->add_option("--format", format, "json or text")->capture_default_str();

  CLI::App* report = app.add_subcommand("report", "render a bundle");
  report->add_option("input", input, "bundle file")->required();
  report->add_option("--format", format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (build->parsed()) {
      if (hecke->parsed()) opt.preset_kind = "hecke";
      if (twosub->parsed()) opt.preset_kind = "twosub";
      if (family->parsed()) opt.preset_kind = "family";
      if (cx->parsed()) opt.preset_kind = "counterexample";
      write_output(to_json(build_bundle(opt)), opt.output);
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(input, format);
    if (dualize->parsed()) return run_dualize(input, output);
    if (pair_check->parsed()) return run_pair_check(input, format);
    if (report->parsed()) return run_report(input, format);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const StructuralError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
