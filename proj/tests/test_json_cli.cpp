#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fqh/json_io.hpp"
#include "fqh/random.hpp"

using namespace fqh;

namespace {

Scalar sc(int n, int d = 1) { return Scalar(Rat(n, d)); }

PairBundle s3_coset_pair() {
  FiniteGroup s3 = preset("S3");
  Subgroup h = subgroup_generate(s3, {element_by_label(s3, "(1 2)")});
  return hecke_pair(s3, h);
}

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string out_path = std::string(std::tmpnam(nullptr)) + ".cli";
  std::string cmd = std::string(FQH_CLI_PATH) + " " + args + " >" + out_path +
                    " 2>&1";
  int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_path.c_str());
  return r;
}

std::string write_temp(const std::string& text) {
  std::string path = std::string(std::tmpnam(nullptr)) + ".json";
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("scalar and matrix serialization round trips") {
  Sampler s(Sampler::env_seed(79));
  for (int t = 0; t < 30; ++t) {
    Scalar den = s.gaussian_integer(5);
    if (den.is_zero()) continue;
    Scalar x = s.gaussian_integer(50) / den;
    CHECK(scalar_from_json(to_json(x)) == x);
  }
  Matrix m(2, 3);
  m(0, 0) = sc(-3, 2);
  m(1, 2) = Scalar(Rat(0), Rat(7, 5));
  Matrix back = matrix_from_json(to_json(m));
  CHECK(back == m);
  CHECK(to_json(m)["entries"][0]["re"] == "-3/2");
}

TEST_CASE("bundle serialization is byte deterministic and lossless") {
  PairBundle hk = s3_coset_pair();
  std::string once = to_json(hk).dump(2);
  std::string twice = to_json(hk).dump(2);
  CHECK(once == twice);
  PairBundle back = bundle_from_json(parse_json_text(once));
  CHECK(to_json(back).dump(2) == once);
  CHECK(fqh_equal(back.side_a, hk.side_a));
  REQUIRE(back.side_b.has_value());
  CHECK(fqh_equal(*back.side_b, *hk.side_b));
  CHECK(back.pair.p == hk.pair.p);
}

TEST_CASE("malformed json is rejected with a structural error") {
  CHECK_THROWS_AS(parse_json_text("{not json"), StructuralError);
  CHECK_THROWS_AS(bundle_from_json(parse_json_text("{}")), StructuralError);
  Json j = to_json(s3_coset_pair());
  j["schema"] = "fqhg/0";
  CHECK_THROWS_AS(bundle_from_json(j), StructuralError);
  Json j2 = to_json(s3_coset_pair());
  j2["fqh_a"]["counit"] = Json::array();
  CHECK_THROWS_AS(bundle_from_json(j2), StructuralError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"re", "1/0"}, {"im", "0"}}),
                  StructuralError);
}

TEST_CASE("antipode results serialize with status and witness") {
  PairBundle c3 = counterexample_c3();
  AntipodeResult r = solve_antipode(c3.side_a.algebra, c3.side_a.coproduct,
                                    c3.side_a.integral, Side::left);
  Json j = to_json(r);
  CHECK(j["status"] == "no_solution");
  CHECK(j.contains("witness"));
  CHECK_FALSE(j.contains("S"));

  PairBundle hk = s3_coset_pair();
  AntipodeResult ok = solve_antipode(hk.side_a.algebra, hk.side_a.coproduct,
                                     hk.side_a.integral, Side::left);
  Json jok = to_json(ok);
  CHECK(jok["status"] == "unique");
  CHECK(jok["freedom_dim"] == 0);
  CHECK(matrix_from_json(jok["S"]) == Matrix::identity(2));
}

TEST_CASE("in-memory and round-tripped certificates agree byte for byte") {
  PairBundle hk = s3_coset_pair();
  FQHCertificate direct = verify_fqh(hk.side_a.algebra, hk.side_a.coproduct,
                                     hk.side_a.counit, hk.side_a.integral);
  PairBundle back = bundle_from_json(parse_json_text(to_json(hk).dump()));
  FQHCertificate reparsed =
      verify_fqh(back.side_a.algebra, back.side_a.coproduct,
                 back.side_a.counit, back.side_a.integral);
  CHECK(to_json(direct).dump() == to_json(reparsed).dump());
}

TEST_CASE("cli builds and verifies the coset preset") {
  std::string bundle = std::string(std::tmpnam(nullptr)) + ".json";
  CliResult b = run_cli("build hecke --group S3 --subgroup \"(1 2)\" -o " + bundle);
  REQUIRE(b.exit_code == 0);
  CliResult v = run_cli("verify " + bundle);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("\"all\": true") != std::string::npos);

  CliResult r = run_cli("report " + bundle + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Δ") != std::string::npos);
  CHECK(r.output.find("⊗") != std::string::npos);

  CliResult pc = run_cli("pair-check " + bundle);
  CHECK(pc.exit_code == 0);

  std::string dual = std::string(std::tmpnam(nullptr)) + ".json";
  CliResult d = run_cli("dualize " + bundle + " -o " + dual);
  REQUIRE(d.exit_code == 0);
  CliResult vd = run_cli("verify " + dual);
  CHECK(vd.exit_code == 0);
  std::remove(bundle.c_str());
  std::remove(dual.c_str());
}

TEST_CASE("cli exit codes separate certificate, input and precondition failures") {
  std::string bundle = std::string(std::tmpnam(nullptr)) + ".json";
  CliResult b = run_cli("build counterexample --name c3 -o " + bundle);
  REQUIRE(b.exit_code == 0);
  CliResult v = run_cli("verify " + bundle);
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("\"integral_equation\": false") != std::string::npos);
  std::remove(bundle.c_str());

  CHECK(run_cli("build family --kind vw --alpha -1").exit_code == 3);
  CliResult msg = run_cli("build family --kind vw --alpha -1");
  CHECK(msg.output.find("α=−1 forbidden: φ cannot be faithful") !=
        std::string::npos);
  CHECK(run_cli("build hecke --group Q8 --subgroup e").exit_code == 2);
  CHECK(run_cli("build counterexample --name m2 --p 2 --q 2").exit_code == 3);

  std::string junk = write_temp("{\"schema\": \"nope\"}");
  CHECK(run_cli("verify " + junk).exit_code == 2);
  std::remove(junk.c_str());
  std::string notjson = write_temp("not json at all");
  CHECK(run_cli("verify " + notjson).exit_code == 2);
  std::remove(notjson.c_str());
  CHECK(run_cli("verify /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("cli detects hand-broken bundles") {
  PairBundle hk = s3_coset_pair();
  Json j = to_json(hk);
  // Redefine u·v inside the A algebra to break associativity.
  j["fqh_a"]["algebra"]["mult"][1][1]["re"] = "1";
  j["pair"]["algebra_a"]["mult"][1][1]["re"] = "1";
  std::string path = write_temp(j.dump());
  CliResult v = run_cli("verify " + path);
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("\"algebra_ok\": false") != std::string::npos);
  CHECK(v.output.find("associativity fails") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli builds the remaining presets") {
  CHECK(run_cli("build twosub --free --h Z2 --k Z2").exit_code == 0);
  CHECK(run_cli("build twosub --free H=Z2 K=Z2").exit_code == 0);
  CHECK(run_cli("build twosub --group S3 --h \"(1 2)\" --k \"(1 2 3)\"").exit_code ==
        0);
  CHECK(run_cli("build family --kind vw --alpha -3/2").exit_code == 0);
  CHECK(run_cli("build family --kind xy --alpha 1").exit_code == 0);
  CHECK(run_cli("build counterexample --name c4 --lambda 1").exit_code == 0);
  CHECK(run_cli("build counterexample --name m2 --p 1 --q 2").exit_code == 0);
  // Two transpositions generate overlapping subgroups only when equal;
  // a shared generator violates the trivial-intersection requirement.
  CHECK(run_cli("build twosub --group S3 --h \"(1 2)\" --k \"(1 2)\"").exit_code ==
        3);
  // Partially composable subgroups are fine: only (h,e) and (e,k) pairs.
  CHECK(run_cli("build twosub --group S3 --h \"(1 2)\" --k \"(1 3)\"").exit_code ==
        0);
}
