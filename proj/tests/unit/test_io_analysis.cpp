#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "assoc/analysis.hpp"
#include "support/run_cli.hpp"

using namespace assoc;
using nlohmann::json;
using testsupport::run_cli;

TEST_CASE("fixture generation and parameter guards") {
  AssociationScheme h = generate_fixture(FixtureSpec::hamming(3, 2));
  CHECK(h.n() == 8);
  CHECK(h.d() == 3);

  AssociationScheme c = generate_fixture(FixtureSpec::cycle(5));
  CHECK(c.n() == 5);
  CHECK(c.d() == 2);
  SchemeParameters cp = intersection_numbers(c);
  CHECK(cp.k == std::vector<std::int64_t>{1, 2, 2});

  AssociationScheme g = generate_fixture(FixtureSpec::binary_group(2));
  CHECK(g.relations() == build_group_scheme(2).relations());

  CHECK_THROWS_AS(generate_fixture(FixtureSpec::hamming(0, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture(FixtureSpec::hamming(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture(FixtureSpec::hamming(13, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture(FixtureSpec::cycle(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture(FixtureSpec::binary_group(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(FixtureSpec::family_from_name("pentagon"),
                  std::invalid_argument);

  // every generated fixture passes full verification
  for (const auto& spec :
       {FixtureSpec::binary_group(3), FixtureSpec::hamming(2, 3),
        FixtureSpec::cycle(7)}) {
    CHECK(verify_scheme(generate_fixture(spec).relations()).ok());
  }
}

TEST_CASE("analysis pipeline on the 3-bit Hamming scheme") {
  AssociationScheme s = generate_fixture(FixtureSpec::hamming(3, 2));
  AnalysisReport r = run_analyze(s, AnalysisOptions::exact());
  CHECK(r.n == 8);
  CHECK(r.d == 3);
  CHECK(r.identity_duality.formally_self_dual);
  CHECK(r.identity_duality.numerically_self_dual);
  CHECK(r.p_poly.holds());
  CHECK(r.q_poly.holds());
  REQUIRE(r.aw_max_residual.has_value());
  CHECK(*r.aw_max_residual == Scalar::exact(0));
  CHECK(r.p_reconstruction_ok);

  // ternary words behave the same way (self-dual, P- and Q-polynomial)
  AnalysisReport t =
      run_analyze(generate_fixture(FixtureSpec::hamming(2, 3)),
                  AnalysisOptions::exact());
  CHECK(t.params.k == std::vector<std::int64_t>{1, 4, 4});
  CHECK(t.identity_duality.formally_self_dual);
  CHECK(t.p_poly.holds());
  REQUIRE(t.aw_max_residual.has_value());
  CHECK(*t.aw_max_residual == Scalar::exact(0));
}

TEST_CASE("analysis report JSON carries rational strings losslessly") {
  AssociationScheme s = generate_fixture(FixtureSpec::hamming(3, 2));
  AnalysisReport r = run_analyze(s, AnalysisOptions::exact());
  json j = to_json(r);

  CHECK(j["mode"] == "exact");
  CHECK(j["k"] == json::array({1, 3, 3, 1}));
  CHECK(j["P"][0][1] == "3");
  CHECK(j["P"][3][1] == "-3");
  CHECK(j["poly"]["aw_max_residual"] == "0");

  // round trip every serialized scalar back through the parser
  for (int i = 0; i <= 3; ++i) {
    CHECK(Scalar::parse(j["m"][i].get<std::string>(), ScalarMode::Exact) ==
          r.sp.m[i]);
    for (int t = 0; t <= 3; ++t) {
      CHECK(Scalar::parse(j["P"][i][t].get<std::string>(), ScalarMode::Exact) ==
            r.sp.P.at(i, t));
      CHECK(Scalar::parse(j["Q"][i][t].get<std::string>(), ScalarMode::Exact) ==
            r.sp.Q.at(i, t));
      for (int h = 0; h <= 3; ++h) {
        CHECK(Scalar::parse(j["q"][h][i][t].get<std::string>(),
                            ScalarMode::Exact) == r.kt.q.at(h, i, t));
      }
    }
  }
}

TEST_CASE("a written fixture re-reads to an identical analysis report") {
  for (const auto& spec :
       {FixtureSpec::binary_group(2), FixtureSpec::hamming(3, 2),
        FixtureSpec::cycle(6)}) {
    AssociationScheme s = generate_fixture(spec);
    std::string path = "roundtrip_fixture.scm";
    write_scm_file(path, s.relations(), {spec.describe()});
    AssociationScheme back = make_scheme(read_scm_file(path));
    json a = to_json(run_analyze(s, AnalysisOptions::exact()));
    json b = to_json(run_analyze(back, AnalysisOptions::exact()));
    CHECK(a == b);
    std::remove(path.c_str());
  }
}

TEST_CASE("cli: verify accepts a valid scheme and rejects a broken one") {
  auto gen = run_cli("gen --family binary-group --m 2 --out cli_x2.scm");
  REQUIRE(gen.exit_code == 0);
  json gen_json = json::parse(gen.stdout_text);
  CHECK(gen_json["file"] == "cli_x2.scm");

  auto ok = run_cli("verify cli_x2.scm");
  CHECK(ok.exit_code == 0);
  json ok_json = json::parse(ok.stdout_text);
  CHECK(ok_json["valid"] == true);
  CHECK(ok_json["k"] == json::array({1, 1, 1, 1}));

  {
    std::ofstream f("cli_broken.scm");
    f << "4 3\n0 2 2 3\n2 0 3 2\n2 3 0 1\n3 2 1 0\n";
  }
  auto bad = run_cli("verify cli_broken.scm");
  CHECK(bad.exit_code == 2);
  json bad_json = json::parse(bad.stdout_text);
  CHECK(bad_json["valid"] == false);
  CHECK(bad_json["violation"]["kind"] == "count_not_constant");
  CHECK(bad_json["violation"].contains("witness_pairs"));

  auto missing = run_cli("verify no_such_file.scm");
  CHECK(missing.exit_code == 1);

  // analyze and selfdual accept the same file
  auto analyzed = run_cli("analyze cli_x2.scm");
  REQUIRE(analyzed.exit_code == 0);
  CHECK(json::parse(analyzed.stdout_text)["n"] == 4);
  auto analyzed_broken = run_cli("analyze cli_broken.scm");
  CHECK(analyzed_broken.exit_code == 2);
  CHECK(json::parse(analyzed_broken.stdout_text)["error"] ==
        "scheme_violation");

  std::remove("cli_x2.scm");
  std::remove("cli_broken.scm");
}

TEST_CASE("cli: analyze emits json on stdout only") {
  auto r = run_cli("analyze --family binary-group --m 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);  // throws if extra junk is present
  CHECK(j["n"] == 4);
  CHECK(j["duality"]["formally_self_dual"] == true);
}

TEST_CASE("cli: exact analysis of the 5-cycle exits with the spectral code") {
  auto r = run_cli("analyze --family cycle --n 5 --mode exact");
  CHECK(r.exit_code == 3);
  json j = json::parse(r.stdout_text);
  CHECK(j["error"] == "spectral");
  CHECK(j["code"] == "irrational_spectrum");

  auto ok = run_cli("analyze --family cycle --n 5 --mode approx");
  CHECK(ok.exit_code == 0);
  json jj = json::parse(ok.stdout_text);
  CHECK(jj["mode"] == "approx");
}

TEST_CASE("cli: selfdual single ordering and enumeration") {
  auto single =
      run_cli("selfdual --family binary-group --m 2 --sigma 0,1,3,2");
  REQUIRE(single.exit_code == 0);
  json s = json::parse(single.stdout_text);
  CHECK(s["numerically_self_dual"] == true);
  CHECK(s["formally_self_dual"] == false);
  CHECK(s["first_P_Q_mismatch"] == json::array({1, 2}));

  auto vias = run_cli("selfdual --family binary-group --m 2 --S 10,11");
  REQUIRE(vias.exit_code == 0);
  CHECK(json::parse(vias.stdout_text)["sigma"] == json::array({0, 1, 3, 2}));

  auto enumerated =
      run_cli("selfdual --family hamming --n 3 --q 2 --enumerate");
  REQUIRE(enumerated.exit_code == 0);
  json e = json::parse(enumerated.stdout_text);
  CHECK(e["summary"]["orderings"] == 6);
  CHECK(e["summary"]["fsd"] == 1);

  auto conflict = run_cli(
      "selfdual --family binary-group --m 2 --sigma 0,1,3,2 --S 10,11");
  CHECK(conflict.exit_code == 1);
}

TEST_CASE("cli: group-scheme emits a loadable scm file") {
  auto r = run_cli("group-scheme --m 3 --emit-scm cli_x3.scm");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["n"] == 8);
  CHECK(j["d"] == 7);
  RelationIndexMatrix rel = read_scm_file("cli_x3.scm");
  CHECK(rel == build_group_scheme(3).relations());
  std::remove("cli_x3.scm");
}

TEST_CASE("cli: poly-check reports the contract keys") {
  auto r = run_cli("poly-check --family hamming --n 3 --q 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.stdout_text);
  CHECK(j["p_polynomial"] == true);
  CHECK(j["q_polynomial_ordering"] == true);
  CHECK(j["aw_max_residual"] == "0");
  CHECK(j["main2_verified"] == true);
  CHECK(j["orderings_checked"] == 6);

  auto x2 = run_cli("poly-check --family binary-group --m 2");
  REQUIRE(x2.exit_code == 0);
  json j2 = json::parse(x2.stdout_text);
  CHECK(j2["p_polynomial"] == false);
  CHECK(j2["main2_verified"].is_null());
}

TEST_CASE("cli: gen writes raw scm to stdout on demand") {
  auto r = run_cli("gen --family binary-group --m 1 --out -");
  REQUIRE(r.exit_code == 0);
  RelationIndexMatrix rel = read_scm_string(r.stdout_text);
  CHECK(rel.n == 2);
  auto no_out = run_cli("gen --family cycle --n 5");
  CHECK(no_out.exit_code == 1);  // --out is required
}

TEST_CASE("cli: --json mirrors stdout to a file") {
  auto r = run_cli("analyze --family binary-group --m 1 --json cli_mirror.json");
  REQUIRE(r.exit_code == 0);
  std::ifstream f("cli_mirror.json");
  REQUIRE(f.good());
  json from_file = json::parse(f);
  CHECK(from_file == json::parse(r.stdout_text));
  std::remove("cli_mirror.json");
}

TEST_CASE("cli: usage errors exit with code 1") {
  CHECK(run_cli("analyze").exit_code == 1);  // no input at all
  CHECK(run_cli("analyze --family pentagon").exit_code == 1);
  CHECK(run_cli("nonsense-subcommand").exit_code == 1);
  CHECK(run_cli("gl2-classify --m 9").exit_code == 1);
}
