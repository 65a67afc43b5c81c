// Command-line driver.  Kept in a header with stream parameters so the test
// suites can run commands in-process and compare outputs byte for byte.
//
//   ospq cartan -m M -n N [--check-b44] [--json]
//   ospq verify SUITE -m M -n N [--degree-bound B] [--q0 P/D] [--workers W]
//        [--samples K] [--seed S] [--mutate KEY] [--trace] [--json]
//   ospq reduce EXPR [-m M -n N] [--degree-bound B] [--trace] [--json]
//
// verify exits 0 when every instance proves, 1 on any refuted instance, and
// 2 when something is inconclusive but nothing refuted.

#pragma once

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ospq/expr.hpp"
#include "ospq/matrix_realization.hpp"
#include "ospq/presentations.hpp"
#include "ospq/report.hpp"
#include "ospq/rewriting.hpp"
#include "ospq/verify.hpp"

namespace ospq {
namespace cli {

// The 8x8 Cartan matrix of B(4|4) = osp(9|8), the reference for --check-b44.
inline CartanMatrix b44_reference() {
  CartanMatrix cm;
  cm.N = 8;
  cm.entries = {
       2, -1,  0,  0,  0,  0,  0,  0,
      -1,  2, -1,  0,  0,  0,  0,  0,
       0, -1,  2, -1,  0,  0,  0,  0,
       0,  0, -1,  0,  1,  0,  0,  0,
       0,  0,  0,  1, -2,  1,  0,  0,
       0,  0,  0,  0,  1, -2,  1,  0,
       0,  0,  0,  0,  0,  1, -2,  1,
       0,  0,  0,  0,  0,  0,  1, -1,
  };
  return cm;
}

struct CliConfig {
  int m = 1, n = 1;
  int degree_bound = 0;
  std::string q0_text;
  bool json_out = false;
  bool trace = false;
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  bool check_b44 = false;
  std::string suite;
  std::string expression;
  std::string mutate_key;
};

inline VerifyOptions to_verify_options(const CliConfig& c) {
  VerifyOptions o;
  o.degree_bound = c.degree_bound;
  o.workers = c.workers;
  o.seed = c.seed;
  o.samples = c.samples;
  o.mutate_key = c.mutate_key;
  if (!c.q0_text.empty()) {
    Rational q0 = Rational::parse(c.q0_text);
    if (q0.is_zero() || q0 == Rational(1) || q0 == Rational(-1))
      throw ScalarError("--q0 must avoid 0, 1 and -1 (q - q^-1 degenerates there)");
    o.q0 = q0;
  }
  return o;
}

inline int run_cartan(const CliConfig& cfg, std::ostream& out) {
  AlgebraSignature sig(cfg.m, cfg.n);
  CartanMatrix cm = cartan_matrix(sig);
  bool b44_ok = true;
  if (cfg.check_b44) {
    CartanMatrix ref = b44_reference();
    CartanMatrix got = cartan_matrix(AlgebraSignature(4, 4));
    b44_ok = got.N == ref.N && got.entries == ref.entries;
  }
  if (cfg.json_out) {
    json doc{{"tool", "ospq"},
             {"command", "cartan"},
             {"signature", {{"m", cfg.m}, {"n", cfg.n}}},
             {"cartan", cartan_json(cm)},
             {"exit_code", b44_ok ? 0 : 1},
             {"elapsed_ms", 0.0}};
    if (cfg.check_b44) doc["b44_check"] = b44_ok;
    out << doc.dump(2) << "\n";
  } else {
    for (int i = 1; i <= cm.N; ++i) {
      for (int j = 1; j <= cm.N; ++j) out << (j > 1 ? " " : "") << cm.at(i, j);
      out << "\n";
    }
    if (cfg.check_b44) out << "B(4|4) reference check: " << (b44_ok ? "pass" : "FAIL") << "\n";
  }
  return b44_ok ? 0 : 1;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  AlgebraSignature sig(cfg.m, cfg.n);
  VerifyOptions opt = to_verify_options(cfg);

  std::vector<json> suites;
  std::size_t proved = 0, refuted = 0, inconclusive = 0;
  auto absorb = [&](const json& sj) {
    proved += sj["counts"]["proved"].get<std::size_t>();
    refuted += sj["counts"]["refuted"].get<std::size_t>();
    inconclusive += sj["counts"]["inconclusive"].get<std::size_t>();
    suites.push_back(sj);
  };

  bool all = cfg.suite == "all";
  if (all || cfg.suite == "classical") {
    for (ClassicalFamily fam :
         {ClassicalFamily::Eq12, ClassicalFamily::Eq14, ClassicalFamily::Eq16,
          ClassicalFamily::Eq20, ClassicalFamily::Eq21, ClassicalFamily::Eq24,
          ClassicalFamily::Eq28, ClassicalFamily::Eq29})
      absorb(classical_report_json(verify_classical(sig, fam)));
  }
  if (all || cfg.suite == "prop5") absorb(suite_report_json(verify_prop5(sig, opt)));
  if (all || cfg.suite == "theorem") absorb(suite_report_json(verify_theorem(sig, opt)));
  if (all || cfg.suite == "roundtrip") absorb(suite_report_json(verify_roundtrip(sig, opt)));
  if (all || cfg.suite == "prop6") absorb(suite_report_json(verify_prop6(opt)));
  if (cfg.suite == "converse")  // experimental, not part of "all"
    absorb(suite_report_json(verify_green_converse(sig, opt)));

  int code = exit_code_for(refuted, inconclusive);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();

  if (cfg.json_out) {
    json doc{{"tool", "ospq"},
             {"command", "verify"},
             {"signature", {{"m", cfg.m}, {"n", cfg.n}}},
             {"config",
              {{"suite", cfg.suite},
               {"degree_bound", cfg.degree_bound},
               {"q_mode", cfg.q0_text.empty() ? "symbolic" : "sampled(q0=" + cfg.q0_text + ")"},
               {"workers", cfg.workers},
               {"samples", cfg.samples},
               {"seed", cfg.seed}}},
             {"suites", suites},
             {"summary",
              {{"proved", proved},
               {"refuted", refuted},
               {"inconclusive", inconclusive},
               {"total", proved + refuted + inconclusive}}},
             {"exit_code", code},
             {"elapsed_ms", ms}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& sj : suites) {
      out << sj["name"].get<std::string>() << ": " << sj["counts"]["proved"].get<std::size_t>()
          << "/" << sj["counts"]["total"].get<std::size_t>() << " proved";
      if (sj["counts"]["refuted"].get<std::size_t>() > 0)
        out << ", " << sj["counts"]["refuted"].get<std::size_t>() << " refuted";
      if (sj["counts"]["inconclusive"].get<std::size_t>() > 0)
        out << ", " << sj["counts"]["inconclusive"].get<std::size_t>() << " inconclusive";
      out << "\n";
      for (const auto& inst : sj["instances"])
        if (inst["status"].get<std::string>() != "proved")
          out << "  " << inst["status"].get<std::string>() << "  "
              << inst["key"].get<std::string>()
              << (inst.contains("witness")
                      ? "  witness: " + inst["witness"].get<std::string>()
                      : std::string())
              << "\n";
    }
    out << "verdict: " << (code == 0 ? "all proved" : code == 1 ? "refuted" : "inconclusive")
        << " (exit " << code << ")\n";
  }
  return code;
}

inline int run_reduce(const CliConfig& cfg, std::ostream& out) {
  AlgebraSignature sig(cfg.m, cfg.n);
  AstPtr ast = parse_expression(cfg.expression);
  Element<QScalar> bound_elem = bind_expression(ast, sig);
  GreenSubstitution sub(sig, true);
  RootTwoElement<QScalar> value = sub.apply(bound_elem);

  int bound = cfg.degree_bound > 0 ? cfg.degree_bound
                                   : default_degree_bound(value.max_word_length());
  RewriteSystem<QScalar> rs = build_rules(chevalley_presentation(sig, true), bound);
  complete(rs);

  ReduceStats st;
  std::vector<std::string> trace;
  std::vector<std::string>* tp = cfg.trace ? &trace : nullptr;
  Element<QScalar> nr = normal_form(value.rat, rs, &st, tp);
  Element<QScalar> ni = normal_form(value.irr, rs, &st, tp);
  RootTwoElement<QScalar> nf{nr, ni};

  if (cfg.json_out) {
    json doc{{"tool", "ospq"},
             {"command", "reduce"},
             {"signature", {{"m", cfg.m}, {"n", cfg.n}}},
             {"reduce",
              {{"input", cfg.expression},
               {"normal_form", nf.str()},
               {"reduction_steps", st.steps},
               {"degree_bound", bound},
               {"bound_hit", st.bound_hit}}},
             {"exit_code", 0},
             {"elapsed_ms", 0.0}};
    if (cfg.trace) doc["reduce"]["trace"] = trace;
    out << doc.dump(2) << "\n";
  } else {
    if (cfg.trace)
      for (const auto& line : trace) out << line << "\n";
    out << nf.str() << "\n";
    if (st.bound_hit) out << "(degree bound " << bound << " hit; result is partial)\n";
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction and verification toolkit for U_q[osp(2n+1|2m)]"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("-m", cfg.m, "number of para-Bose pairs (m >= 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("-n", cfg.n, "number of para-Fermi pairs (n >= 1)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* cartan = app.add_subcommand("cartan", "print the Cartan matrix");
  add_sig(cartan);
  cartan->add_flag("--check-b44", cfg.check_b44, "compare the (4,4) case against the reference");
  cartan->add_flag("--json", cfg.json_out, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "classical|prop5|theorem|roundtrip|prop6|all|converse")
      ->required()
      ->check(CLI::IsMember(
          {"classical", "prop5", "theorem", "roundtrip", "prop6", "all", "converse"}));
  add_sig(verify);
  verify->add_option("--degree-bound", cfg.degree_bound,
                     "rewriting degree bound (default: 2*max identity length + 4)");
  verify->add_option("--q0", cfg.q0_text, "sampled mode at q = P/D (pre-check only)");
  verify->add_option("--workers", cfg.workers, "worker threads for instance verification")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", cfg.samples, "sample count for the bracket identity");
  verify->add_option("--seed", cfg.seed, "RNG seed for sampling");
  verify->add_option("--mutate", cfg.mutate_key,
                     "perturb one named relation instance by +1 (sensitivity testing)");
  verify->add_flag("--trace", cfg.trace, "emit reduction traces");
  verify->add_flag("--json", cfg.json_out, "JSON report");

  CLI::App* reduce = app.add_subcommand("reduce", "reduce an expression to normal form");
  reduce->add_option("expression", cfg.expression, "expression in the bracket language")
      ->required();
  add_sig(reduce);
  reduce->add_option("--degree-bound", cfg.degree_bound, "rewriting degree bound");
  reduce->add_flag("--trace", cfg.trace, "print the reduction trace");
  reduce->add_flag("--json", cfg.json_out, "JSON output");

  // CLI11 wants argv-style reversed input when parsing vectors
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    int code = app.exit(e, cfg.json_out ? dummy : out, err);
    if (cfg.json_out && e.get_exit_code() == 0) out << dummy.str();
    return code;
  }

  try {
    if (app.got_subcommand(cartan)) return run_cartan(cfg, out);
    if (app.got_subcommand(verify)) return run_verify(cfg, out);
    if (app.got_subcommand(reduce)) return run_reduce(cfg, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 65;
  } catch (const BindError& e) {
    err << "bind error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 70;
  }
  err << "no subcommand\n";
  return 64;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace ospq
