#include "shl/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shl/acceptance.hpp"
#include "shl/checks.hpp"
#include "shl/identities.hpp"
#include "shl/paramgen.hpp"
#include "shl/report.hpp"
#include "shl/signature.hpp"
#include "shl/version.hpp"

namespace shl {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string suite;

  std::string t;
  std::string gamma;
  std::string s;
  std::string u;
  std::string epsilon;
  std::uint64_t seed = 0;
  bool seed_given = false;

  int n = 0;
  bool n_given = false;
  int max_part = 16;
  bool max_part_given = false;
  std::string tol;
  bool adaptive = false;
  int cutoff = 6;
  int max_parts = 3;
  std::string mu;
  std::string lambda;
  std::string json_out;
};

bool explicit_params_given(const Options& opt) {
  return !opt.t.empty() || !opt.gamma.empty() || !opt.s.empty() || !opt.u.empty() ||
         !opt.epsilon.empty();
}

ParamSet build_explicit(const Options& opt, bool needs_u) {
  if (opt.t.empty()) throw UsageError("missing required flag --t (or use --seed)");
  ParamSet params;
  params.t = parse_rational(opt.t);
  if (!opt.gamma.empty()) params.gamma = parse_rational(opt.gamma);
  if (!opt.s.empty()) {
    std::vector<Rational> svals = parse_rational_list(opt.s);
    if (svals.empty()) throw UsageError("--s needs at least one value");
    params.s = InhomogeneitySequence(svals, svals.back());
  }
  if (!opt.u.empty()) params.u = parse_rational_list(opt.u);
  if (needs_u && params.u.empty())
    throw UsageError("missing required flag --u (or use --seed)");
  if (!opt.epsilon.empty()) params.epsilon = parse_rational(opt.epsilon);
  params.validate_basic();
  return params;
}

int half_vars(const Options& opt, const ParamSet& params) {
  if ((int)params.u.size() % 2 != 0)
    throw UsageError("--u needs an even number of variables for this suite");
  int n = static_cast<int>(params.u.size()) / 2;
  if (opt.n_given && opt.n != n)
    throw UsageError("--n disagrees with the number of --u variables");
  return n;
}

int seeded_n(const Options& opt) {
  if (!opt.n_given) throw UsageError("missing required flag --n for seeded runs");
  if (opt.n < 1) throw UsageError("--n must be >= 1");
  return opt.n;
}

TruncationPlan build_plan(const Options& opt, int n) {
  TruncationPlan plan;
  plan.n = n;
  plan.max_part = opt.max_part;
  if (!opt.tol.empty()) plan.tolerance = parse_rational(opt.tol);
  plan.mode = opt.adaptive ? TruncationMode::adaptive : TruncationMode::fixed;
  return plan;
}

const Rational kTightEpsilon(13, 20);

ParamShape identity_shape(const std::string& suite, int n) {
  ParamShape shape;
  shape.n_vars = 2 * n;
  shape.needs_admissible = true;
  shape.epsilon = kTightEpsilon;
  if (suite == "pfp") shape.shifted_admissible = true;
  if (suite == "class") shape.s_mode = SMode::zero;
  if (suite == "unrefined") shape.unit_gamma = true;
  return shape;
}

Report dispatch(const Options& opt) {
  const std::string& suite = opt.suite;

  if (suite == "littlewood" || suite == "class" || suite == "unrefined" ||
      suite == "pfp") {
    ParamSet params;
    int n = 0;
    if (opt.seed_given) {
      n = seeded_n(opt);
      params = generate_params(opt.seed, identity_shape(suite, n));
    } else {
      params = build_explicit(opt, true);
      n = half_vars(opt, params);
    }
    TruncationPlan plan = build_plan(opt, n);
    if (suite == "littlewood") return check_littlewood(params, plan);
    if (suite == "class") return check_class_specialization(params, plan);
    if (suite == "unrefined") return check_unrefined(params, plan);
    return check_pfp(params, plan);
  }

  if (suite == "z-properties") {
    ParamSet params;
    int n = 0;
    if (opt.seed_given) {
      n = seeded_n(opt);
      ParamShape shape;
      shape.n_vars = 2 * n;
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, true);
      n = half_vars(opt, params);
    }
    return check_z_properties(params, n);
  }

  if (suite == "frozen") {
    int n = seeded_n(opt);
    ParamSet params;
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = 0;
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, false);
    }
    return check_frozen_corollary(params, n);
  }

  if (suite == "ybe") {
    ParamSet params;
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = 2;
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, true);
    }
    if (params.u.size() < 2)
      throw UsageError("--u needs two row rapidities for the ybe suite");
    return check_ybe_rll(params, params.u[0], params.u[1], opt.cutoff);
  }

  if (suite == "lattice-vs-sym") {
    ParamSet params;
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = opt.max_parts;
      shape.needs_admissible = true;
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, true);
    }
    int sweep_bound = opt.max_part_given ? opt.max_part : 4;
    return check_lattice_vs_sym(params, opt.max_parts, sweep_bound);
  }

  if (suite == "lemma-plus") {
    ParamSet params;
    Signature mu;
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = 1;
      params = generate_params(opt.seed, shape);
      mu = generate_odd_signature(opt.seed, 7, 6);
    } else {
      if (opt.mu.empty()) throw UsageError("missing required flag --mu");
      mu = Signature::parse(opt.mu);
      params = build_explicit(opt, true);
    }
    return check_lemma_plus(mu, params);
  }

  if (suite == "f") {
    Signature lambda;
    ParamSet params;
    if (opt.lambda.empty()) throw UsageError("missing required flag --lambda");
    lambda = Signature::parse(opt.lambda);
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = lambda.size();
      shape.needs_admissible = true;
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, lambda.size() > 0);
    }
    return eval_f(lambda, params);
  }

  if (suite == "pf") {
    ParamSet params;
    if (opt.seed_given) {
      ParamShape shape;
      shape.n_vars = 2 * seeded_n(opt);
      params = generate_params(opt.seed, shape);
    } else {
      params = build_explicit(opt, true);
    }
    return eval_pf(params);
  }

  throw UsageError("unknown suite: " + suite);
}

void emit(const nlohmann::ordered_json& payload, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << payload.dump(2) << std::endl;
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw std::runtime_error("cannot open " + json_out);
  out << payload.dump(2) << '\n';
}

int run_verify_all(const Options& opt) {
  bool all_pass = true;
  nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
  run_acceptance([&](const CriterionResult& result) {
    std::cout << criterion_line(result) << std::endl;
    all_pass = all_pass && result.pass;
    nlohmann::ordered_json entry;
    entry["index"] = result.index;
    entry["name"] = result.name;
    entry["pass"] = result.pass;
    entry["detail"] = result.detail;
    entry["runtime_ms"] = static_cast<long>(result.runtime_ms);
    criteria.push_back(std::move(entry));
  });
  std::cout << (all_pass ? "all criteria pass" : "some criteria fail") << std::endl;
  if (!opt.json_out.empty()) {
    nlohmann::ordered_json summary;
    summary["suite"] = "all";
    summary["criteria"] = std::move(criteria);
    summary["verdict"] = all_pass ? "pass" : "fail";
    summary["version"] = kVersion;
    emit(summary, opt.json_out);
  }
  return all_pass ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--t", opt.t, "Quantization parameter t, exact rational p/q");
  cmd->add_option("--gamma", opt.gamma, "Refinement parameter, exact rational");
  cmd->add_option("--s", opt.s,
                  "Comma-separated column inhomogeneities; the last value "
                  "repeats for all further columns");
  cmd->add_option("--u", opt.u, "Comma-separated spectral variables");
  cmd->add_option("--epsilon", opt.epsilon,
                  "Contraction margin for admissibility (default 1/10)");
  cmd->add_option("--seed", opt.seed, "Deterministic parameter seed")
      ->each([&opt](const std::string&) { opt.seed_given = true; });
  cmd->add_option("--json-out", opt.json_out, "Write the JSON report to this path");
}

}  // namespace

int run_cli(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact verification suites for spin Hall-Littlewood "
               "Littlewood-type identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify
      ->add_option("suite", opt.suite,
                   "littlewood | class | unrefined | pfp | z-properties | "
                   "frozen | ybe | lattice-vs-sym | lemma-plus | all")
      ->required();
  add_common_flags(verify, opt);
  verify->add_option("--n", opt.n, "Half the number of spectral variables")
      ->each([&opt](const std::string&) { opt.n_given = true; });
  verify->add_option("--max-part", opt.max_part, "Truncation cutoff M")
      ->each([&opt](const std::string&) { opt.max_part_given = true; });
  verify->add_option("--tol", opt.tol, "Truncation tolerance, exact rational");
  verify->add_flag("--adaptive", opt.adaptive, "Adaptive truncation stop rule");
  verify->add_option("--cutoff", opt.cutoff, "Occupancy cutoff for the ybe suite");
  verify->add_option("--max-parts", opt.max_parts,
                     "Largest variable count for the lattice-vs-sym sweep");
  verify->add_option("--mu", opt.mu, "Signature for the lemma-plus suite, e.g. [3,2,2]");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one quantity exactly");
  eval->add_option("suite", opt.suite, "f | pf")->required();
  add_common_flags(eval, opt);
  eval->add_option("--n", opt.n, "Half the number of spectral variables")
      ->each([&opt](const std::string&) { opt.n_given = true; });
  eval->add_option("--lambda", opt.lambda, "Signature to evaluate, e.g. [1,0]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.verb = verify->parsed() ? "verify" : "eval";
  try {
    if (opt.verb == "verify" && opt.suite == "all") return run_verify_all(opt);
    if (opt.verb == "eval" && opt.suite != "f" && opt.suite != "pf")
      throw UsageError("eval accepts the suites f and pf");
    if (opt.verb == "verify" && (opt.suite == "f" || opt.suite == "pf"))
      throw UsageError("use the eval verb for the f and pf suites");
    if (opt.seed_given && explicit_params_given(opt))
      throw UsageError("--seed excludes the explicit parameter flags "
                       "(--t/--gamma/--s/--u/--epsilon)");
    if (!opt.seed_given && !explicit_params_given(opt))
      throw UsageError("provide either explicit parameters (--t ...) or --seed");

    Report report = dispatch(opt);
    emit(report.to_json(), opt.json_out);
    return verdict_exit_code(report.verdict);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}

}  // namespace shl
