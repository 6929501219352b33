// Command-line front end: verify / analyze / selfdual / group-scheme /
// gl2-classify / poly-check / gen on scm-v1 scheme files and built-in
// fixture families. Stdout carries only JSON (or raw scm with `gen --out -`);
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 parse or usage error, 2 scheme axiom violation,
// 3 spectral failure, 4 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "assoc/analysis.hpp"

namespace {

using assoc::AnalysisOptions;
using assoc::AssociationScheme;
using assoc::FixtureSpec;
using assoc::ScalarMode;
using assoc::Tolerance;
using nlohmann::json;

struct GlobalOptions {
  std::string mode = "exact";
  double eps = 1e-9;
  double eps_cluster = 1e-6;
  std::string json_path;
  std::uint64_t seed = 12345;

  ScalarMode scalar_mode() const {
    return mode == "approx" ? ScalarMode::Approx : ScalarMode::Exact;
  }
  Tolerance tolerance() const {
    return scalar_mode() == ScalarMode::Exact
               ? Tolerance::exact()
               : Tolerance::approx(eps, eps_cluster);
  }
  AnalysisOptions analysis_options() const {
    return AnalysisOptions{scalar_mode(), tolerance()};
  }
};

struct SchemeInput {
  std::string file;
  std::string family;
  int m = 2;
  int n = 3;
  int q = 2;

  void add_options(CLI::App* cmd, bool file_positional = true) {
    if (file_positional) {
      cmd->add_option("file", file, "scheme file in scm-v1 format");
    }
    cmd->add_option("--family", family,
                    "built-in family: binary-group, hamming, cycle");
    cmd->add_option("--m", m, "binary-group order (n = 2^m)");
    cmd->add_option("--n", n, "hamming word length / cycle size");
    cmd->add_option("--q", q, "hamming alphabet size");
  }

  bool is_binary_group() const { return family == "binary-group"; }

  AssociationScheme load() const {
    if (!file.empty() && !family.empty()) {
      throw std::invalid_argument("give either a file or --family, not both");
    }
    if (!file.empty()) {
      return assoc::make_scheme(assoc::read_scm_file(file));
    }
    if (family.empty()) {
      throw std::invalid_argument("no input: give a scheme file or --family");
    }
    FixtureSpec spec;
    spec.family = FixtureSpec::family_from_name(family);
    spec.m = m;
    spec.n = n;
    spec.q = q;
    return assoc::generate_fixture(spec);
  }
};

void emit(const json& out, const GlobalOptions& g) {
  std::cout << out.dump(2) << "\n";
  if (!g.json_path.empty()) {
    std::ofstream f(g.json_path);
    if (!f) throw std::runtime_error("cannot write " + g.json_path);
    f << out.dump(2) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"symmetric association scheme parameters and self-duality"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--mode", g.mode, "arithmetic mode")
      ->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--eps", g.eps, "equality tolerance in approx mode");
  app.add_option("--eps-cluster", g.eps_cluster,
                 "eigenvalue clustering tolerance in approx mode");
  app.add_option("--json", g.json_path, "also write the JSON output here");
  app.add_option("--seed", g.seed, "seed for randomized checks");

  auto* cmd_verify = app.add_subcommand("verify", "check the scheme axioms");
  std::string verify_file;
  cmd_verify->add_option("file", verify_file, "scm-v1 file")->required();

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "full pipeline: parameters, idempotents, P/Q, Krein, duality");
  SchemeInput analyze_in;
  analyze_in.add_options(cmd_analyze);

  auto* cmd_selfdual = app.add_subcommand(
      "selfdual", "formal/numerical self-duality for one or all orderings");
  SchemeInput selfdual_in;
  selfdual_in.add_options(cmd_selfdual);
  std::string sigma_text, S_text;
  bool enumerate = false;
  cmd_selfdual->add_option("--sigma", sigma_text,
                           "ordering permutation, e.g. 0,2,1,3");
  cmd_selfdual->add_option(
      "--S", S_text,
      "GF(2) matrix (rows as bit strings, e.g. 10,11) defining the ordering "
      "x -> Sx of a binary group scheme");
  cmd_selfdual->add_flag("--enumerate", enumerate,
                         "classify all orderings fixing 0");

  auto* cmd_group = app.add_subcommand("group-scheme",
                                       "build the binary group scheme X^(m)");
  int group_m = 2;
  std::string emit_scm;
  cmd_group->add_option("--m", group_m, "group order exponent")->required();
  cmd_group->add_option("--emit-scm", emit_scm, "write the scheme here");

  auto* cmd_gl2 = app.add_subcommand(
      "gl2-classify",
      "classify GF(2)-linear orderings of X^(m) and sample non-linear ones");
  int gl2_m = 2;
  int trials_nonlinear = 0;
  bool with_details = false;
  cmd_gl2->add_option("--m", gl2_m, "group order exponent (<= 3)")->required();
  cmd_gl2->add_option("--trials-nonlinear", trials_nonlinear,
                      "number of random non-linear permutations to test");
  cmd_gl2->add_flag("--details", with_details,
                    "include per-matrix eigenmatrices (always on for m <= 2)");

  auto* cmd_poly = app.add_subcommand(
      "poly-check", "P-/Q-polynomial detection and Askey-Wilson duality");
  SchemeInput poly_in;
  poly_in.add_options(cmd_poly);

  auto* cmd_gen = app.add_subcommand("gen", "generate a fixture scheme file");
  SchemeInput gen_in;
  gen_in.add_options(cmd_gen, /*file_positional=*/false);
  std::string gen_out;
  cmd_gen->add_option("--out", gen_out, "output path ('-' for raw scm on stdout)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (app.got_subcommand(cmd_verify)) {
    assoc::RelationIndexMatrix rel = assoc::read_scm_file(verify_file);
    assoc::VerifyOutcome outcome = assoc::verify_scheme(rel);
    json out;
    out["valid"] = outcome.ok();
    out["n"] = rel.n;
    out["d"] = rel.d;
    if (outcome.ok()) {
      if (outcome.params) out["k"] = outcome.params->k;
    } else {
      out["violation"] = assoc::to_json(*outcome.violation);
    }
    emit(out, g);
    return outcome.ok() ? 0 : 2;
  }

  if (app.got_subcommand(cmd_analyze)) {
    AssociationScheme s = analyze_in.load();
    assoc::AnalysisReport report = assoc::run_analyze(s, g.analysis_options());
    emit(assoc::to_json(report), g);
    return 0;
  }

  if (app.got_subcommand(cmd_selfdual)) {
    AssociationScheme s = selfdual_in.load();
    AnalysisOptions opt = g.analysis_options();
    assoc::SchemeParameters params = assoc::intersection_numbers(s);
    assoc::SpectralData sp = assoc::decompose(s, params, opt.mode, opt.tol);
    assoc::KreinTensor kt = assoc::krein_parameters(sp, params, opt.tol);

    // Group schemes are reported in character indexing, which is the
    // indexing a GF(2) matrix ordering refers to.
    if (!S_text.empty() || selfdual_in.is_binary_group()) {
      assoc::OrderingPermutation align = assoc::character_alignment(sp);
      std::tie(sp, kt) = assoc::reorder(sp, kt, align);
    }

    if (enumerate) {
      assoc::ClassificationResult cls =
          assoc::classify_all_orderings(params, sp, kt, opt.tol);
      emit(assoc::to_json(cls), g);
      return 0;
    }

    assoc::OrderingPermutation sigma;
    if (!S_text.empty() && !sigma_text.empty()) {
      throw std::invalid_argument("give --sigma or --S, not both");
    } else if (!S_text.empty()) {
      sigma = assoc::sigma_from_matrix(assoc::Gf2Matrix::parse(S_text));
      if (sigma.d() != s.d()) {
        throw std::invalid_argument(
            "matrix acts on 2^m = " + std::to_string(sigma.d() + 1) +
            " elements but the scheme has " + std::to_string(s.d() + 1) +
            " classes");
      }
    } else if (!sigma_text.empty()) {
      sigma = assoc::OrderingPermutation::parse(sigma_text, s.d());
    } else {
      sigma = assoc::OrderingPermutation::identity(s.d());
    }
    assoc::DualityReport rep =
        assoc::duality_report(params, sp, kt, sigma, opt.tol);
    emit(assoc::to_json(rep), g);
    return 0;
  }

  if (app.got_subcommand(cmd_group)) {
    AssociationScheme s = assoc::build_group_scheme(group_m);
    json out{{"m", group_m},
             {"n", s.n()},
             {"d", s.d()},
             {"k", std::vector<int>(static_cast<size_t>(s.d()) + 1, 1)}};
    if (!emit_scm.empty()) {
      assoc::write_scm_file(emit_scm, s.relations(),
                            {"binary group scheme, m = " +
                             std::to_string(group_m)});
      out["emitted"] = emit_scm;
    }
    emit(out, g);
    return 0;
  }

  if (app.got_subcommand(cmd_gl2)) {
    assoc::Gl2Classification cls =
        assoc::gl2_classify(gl2_m, trials_nonlinear, g.seed, g.scalar_mode(),
                            g.tolerance(), with_details);
    emit(assoc::to_json(cls), g);
    return 0;
  }

  if (app.got_subcommand(cmd_poly)) {
    AssociationScheme s = poly_in.load();
    assoc::AnalysisReport report = assoc::run_analyze(s, g.analysis_options());
    emit(assoc::poly_check_json(report), g);
    return 0;
  }

  if (app.got_subcommand(cmd_gen)) {
    FixtureSpec spec;
    if (gen_in.family.empty()) {
      throw std::invalid_argument("gen requires --family");
    }
    spec.family = FixtureSpec::family_from_name(gen_in.family);
    spec.m = gen_in.m;
    spec.n = gen_in.n;
    spec.q = gen_in.q;
    AssociationScheme s = assoc::generate_fixture(spec);
    if (gen_out == "-") {
      std::cout << assoc::write_scm(s.relations(), {spec.describe()});
      return 0;
    }
    assoc::write_scm_file(gen_out, s.relations(), {spec.describe()});
    emit(json{{"family", spec.family_name()},
              {"n", s.n()},
              {"d", s.d()},
              {"file", gen_out}},
         g);
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const assoc::ScmParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::cout << json{{"error", "parse"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  } catch (const assoc::SchemeError& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    std::cout << json{{"error", "scheme_violation"},
                      {"violation", assoc::to_json(e.violation)}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const assoc::SpectralError& e) {
    std::cerr << "spectral failure: " << e.what() << "\n";
    const char* code =
        e.code == assoc::SpectralError::Code::IrrationalSpectrum
            ? "irrational_spectrum"
            : "cluster_ambiguity";
    std::cout << json{{"error", "spectral"},
                      {"code", code},
                      {"message", e.what()}}
                     .dump(2)
              << "\n";
    return 3;
  } catch (const assoc::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", "usage"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", "domain"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
