#include "ordfix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordfix/fixed_point.hpp"
#include "ordfix/poset_examples.hpp"

namespace ordfix::cli {
namespace {

using io::Json;

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::UsageError, msg); }

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

double default_grid_step(const std::string& fixture) { return fixture == "example_3_12_1" ? 0.5 : 0.25; }

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    usage(origin + " must be a nonnegative integer, got '" + text + "'");
  return value;
}

Json error_json(const Error& e) { return {{"kind", to_string(e.kind())}, {"message", e.what()}}; }

std::vector<std::vector<double>> seeds_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadConfig, "seeds file must hold an array of node vectors");
  std::vector<std::vector<double>> seeds;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::BadConfig, "each seed must be an array of numbers");
    std::vector<double> v;
    for (const auto& x : row) {
      if (!x.is_number()) throw Error(ErrorKind::BadConfig, "seed entries must be numbers");
      v.push_back(x.get<double>());
    }
    seeds.push_back(std::move(v));
  }
  return seeds;
}

RunResult run_verify(const RunConfig& cfg) {
  Json report{{"command", "verify"},
              {"fixture", cfg.fixture},
              {"n_max", cfg.n_max},
              {"params",
               {{"lambda1", to_string(cfg.params.lambda1)},
                {"ratio", to_string(cfg.params.ratio)},
                {"truncation", cfg.params.truncation}}}};
  RunResult result;
  try {
    ClaimReport claims = verify_counterexample(cfg.fixture, cfg.n_max, cfg.params);
    report["claims"] = io::to_json(claims);
    report["all_pass"] = claims.all_pass();
    result.exit_code = claims.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    report["error"] = error_json(e);
    result.exit_code = exit_code_for(e.kind());
  }
  report["exit_code"] = result.exit_code;
  result.report = std::move(report);
  return result;
}

std::string witness_text(const FinitePoset& p, const SublatticeWitness& w) {
  return p.name(w.a) + " and " + p.name(w.b) + ": join " + p.name(w.join) + (w.join_in_set ? " in" : " not in") +
         " set, meet " + p.name(w.meet) + (w.meet_in_set ? " in" : " not in") + " set";
}

RunResult run_poset(const RunConfig& cfg) {
  Json report{{"command", "poset"}};
  RunResult result;
  ClaimReport claims;
  try {
    FinitePoset poset;
    ElementSet domain;
    SetValuedMap map;
    Element seed = 0;
    std::optional<PosetExample> example;
    if (cfg.poset_config) {
      report["source"] = "config";
      poset = cfg.poset_config->poset;
      domain = cfg.poset_config->domain;
      map = cfg.poset_config->map;
      seed = cfg.poset_config->seed;
    } else {
      report["source"] = cfg.fixture;
      report["grid_step"] = cfg.grid_step;
      example = builtin_example(cfg.fixture, cfg.grid_step);
      poset = example->poset;
      domain = poset.all();
      map = example->map;
      seed = example->seed;
    }
    report["elements"] = poset.size();
    report["seed"] = poset.name(seed);
    const ElementSet fixed = fixed_point_set(map);
    report["fixed_points"] = poset.element_names(fixed);
    if (example) {
      claims.add("fixed_set.expected", joined(poset.element_names(example->expected_fixed)),
                 joined(poset.element_names(fixed)), fixed == example->expected_fixed);
    }

    const bool want_thm = cfg.check.empty() || cfg.check == "thm3.9";
    const bool want_sub = cfg.check == "sublattice" || (cfg.check.empty() && example);
    if (want_thm) {
      try {
        FixedPointReport fp = verify_fixed_point_theorem(poset, domain, map, seed);
        report["theorem"] = io::to_json(fp, poset);
        claims.add("thm3.9.hypotheses", "all hold", fp.hypotheses_pass() ? "all hold" : "some fail",
                   fp.hypotheses_pass());
        claims.add("thm3.9.conclusions", "all certified", fp.conclusions_pass() ? "all certified" : "some fail",
                   fp.conclusions_pass());
        claims.add("thm3.9.maximal_above_seed", "nonempty", joined(poset.element_names(fp.maximal_elements)),
                   !fp.maximal_elements.empty());
      } catch (const HypothesisFailure& h) {
        report["theorem"] = io::to_json(h.report(), poset);
        claims.add("thm3.9.hypotheses", "all hold", h.hypothesis() + " fails: " + h.witness(), false);
      }
    }
    if (want_sub) {
      std::vector<std::pair<Element, Element>> probe;
      if (example) probe.push_back(example->cited_pair);
      SublatticeVerdict sub = is_sublattice(poset, fixed, probe);
      Json sj{{"holds", sub.holds}, {"violating_pairs", sub.violating_pairs}};
      if (sub.witness) {
        const auto& w = *sub.witness;
        sj["witness"] = {{"a", poset.name(w.a)},         {"b", poset.name(w.b)},
                         {"join", poset.name(w.join)},   {"meet", poset.name(w.meet)},
                         {"join_in_set", w.join_in_set}, {"meet_in_set", w.meet_in_set}};
      }
      report["sublattice"] = sj;
      if (example) {
        const auto [ca, cb] = example->cited_pair;
        const bool cited = sub.witness && ((sub.witness->a == ca && sub.witness->b == cb) ||
                                           (sub.witness->a == cb && sub.witness->b == ca));
        claims.add("sublattice.cited_witness", "not a sublattice at " + poset.name(ca) + " and " + poset.name(cb),
                   sub.witness ? "not a sublattice at " + witness_text(poset, *sub.witness) : "closed",
                   !sub.holds && cited);
      }
    }
    report["claims"] = io::to_json(claims);
    report["all_pass"] = claims.all_pass();
    result.exit_code = claims.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    report["claims"] = io::to_json(claims);
    report["error"] = error_json(e);
    result.exit_code = exit_code_for(e.kind());
  }
  report["exit_code"] = result.exit_code;
  result.report = std::move(report);
  return result;
}

RunResult run_solve(const RunConfig& cfg) {
  Json report{{"command", "solve"},
              {"source", cfg.fixture.empty() ? "config" : cfg.fixture},
              {"problem", cfg.problem_json},
              {"eps", cfg.solve.eps},
              {"max_iter", cfg.solve.max_iter},
              {"override", cfg.solve.override_audit},
              {"seed", cfg.solve.seed}};
  RunResult result;
  const HammersteinProblem& problem = *cfg.problem;
  try {
    SolveReport sr = monotone_solve(problem, cfg.solve);
    report["report"] = io::to_json(sr);
    const bool ok = sr.converged && sr.monotone_ok && sr.ball_ok && sr.nonzero_ok && sr.condition_log.all_pass();
    result.exit_code = ok ? 0 : 1;
    if (!cfg.seeds.empty()) report["exploration"] = io::to_json(explore_solution_set(problem, cfg.seeds, cfg.solve));
  } catch (const SolveFailure& e) {
    report["report"] = io::to_json(e.report());
    report["error"] = error_json(e);
    report["error"]["step"] = e.step();
    report["error"]["node"] = e.node();
    result.exit_code = exit_code_for(e.kind());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HypothesisFailed)
      report["condition_log"] = io::to_json(audit_conditions(problem, cfg.solve.ball_samples, cfg.solve.seed));
    report["error"] = error_json(e);
    result.exit_code = exit_code_for(e.kind());
  }
  report["exit_code"] = result.exit_code;
  result.report = std::move(report);
  return result;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UsageError:
    case ErrorKind::UnknownFixture:
    case ErrorKind::BadConfig:
    case ErrorKind::IoError:
    case ErrorKind::BadParams:
    case ErrorKind::BadRule:
    case ErrorKind::BadCount:
    case ErrorKind::BadGridStep:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::UnknownElement:
    case ErrorKind::AntisymmetryViolation:
    case ErrorKind::InvalidMap:
    case ErrorKind::NotALattice:
    case ErrorKind::BadSeed:
    case ErrorKind::InvalidReport:
    case ErrorKind::Unsupported:
    case ErrorKind::BudgetExceeded:
      return 2;
    default:
      return 1;
  }
}

const std::vector<std::string>& solve_fixture_names() {
  static const std::vector<std::string> names{"trivial", "separable", "gaussian_arctan", "reversed"};
  return names;
}

Json solve_fixture_config(const std::string& name) {
  if (name == "trivial")
    return {{"domain", {0.0, 1.0}},
            {"nodes", 129},
            {"rule", "trapezoid"},
            {"p", 2.0},
            {"gamma", 1.0},
            {"kernel", {{"family", "constant"}, {"c", 1.0}}},
            {"nonlinearity", {{"family", "constant"}, {"c", 1.0}}}};
  if (name == "separable")
    return {{"domain", {0.0, 1.0}},
            {"nodes", 257},
            {"rule", "gauss_legendre"},
            {"p", 2.0},
            {"gamma", 1.0},
            {"kernel",
             {{"family", "separable"},
              {"g", {{"family", "affine"}, {"c0", 1.0}, {"c1", 1.0}}},
              {"h", {{"family", "constant"}, {"c", 1.0}}}}},
            {"nonlinearity", {{"family", "bounded_sigmoid"}, {"a", 0.2}, {"b", 0.3}}}};
  if (name == "gaussian_arctan")
    return {{"domain", {-1.0, 1.0}},
            {"nodes", 40},
            {"rule", "gauss_legendre"},
            {"p", 3.0},
            {"gamma", 1.0},
            {"kernel", {{"family", "gaussian"}, {"amplitude", 0.5}, {"width", 0.3}}},
            {"nonlinearity", {{"family", "arctan"}, {"a", 0.3}, {"b", 0.1}}}};
  if (name == "reversed")
    return {{"domain", {0.0, 1.0}},
            {"nodes", 33},
            {"rule", "trapezoid"},
            {"p", 2.0},
            {"gamma", 1.0},
            {"kernel", {{"family", "constant"}, {"c", 1.0}}},
            {"nonlinearity", {{"family", "affine_clamped"}, {"a", 0.0}, {"b", -1.0}}}};
  usage("unknown solve fixture '" + name + "' (known: " + joined(solve_fixture_names()) + ")");
}

RunConfig parse_config(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  CLI::App app{"Order-theoretic fixed-point toolkit", "ordfix"};
  app.require_subcommand(1);

  std::string fixture, out, lambda1, ratio, config_path, check, seeds_path;
  std::size_t n_max = 0, truncation = 256, max_iter = 1000;
  double grid_step = 0, eps = 1e-12;
  bool override_audit = false;

  auto* verify = app.add_subcommand("verify", "Machine-check a counterexample and emit its claim report");
  verify->add_option("fixture", fixture, "One of: " + joined(counterexample_names()))->required();
  verify->add_option("--n-max", n_max, "Largest chain index checked (default 64; 16 for lemma_2_9)");
  verify->add_option("--lambda1", lambda1, "First smoothing parameter as p/q or decimal (default 9/10)");
  verify->add_option("--ratio", ratio, "Geometric ratio of the smoothing parameters (default 49/100)");
  verify->add_option("--truncation", truncation, "Truncation length for example_2_7 (default 256)");
  verify->add_option("--out", out, "Report path (default: standard output)");

  auto* poset = app.add_subcommand("poset", "Check a finite fixed-point example");
  poset->add_option("fixture", fixture, "One of: " + joined(builtin_example_names()));
  poset->add_option("--config", config_path, "Poset/map JSON file instead of a fixture");
  poset->add_option("--check", check, "Run only this check")->check(CLI::IsMember({"thm3.9", "sublattice"}));
  poset->add_option("--grid-step", grid_step, "Dyadic grid step (default 0.25; 0.5 for example_3_12_1)");
  poset->add_option("--out", out, "Report path (default: standard output)");

  auto* solve = app.add_subcommand("solve", "Solve a discretized Hammerstein equation by monotone iteration");
  solve->add_option("fixture", fixture, "One of: " + joined(solve_fixture_names()));
  solve->add_option("--config", config_path, "Problem JSON file instead of a fixture");
  solve->add_option("--eps", eps, "Step tolerance in both the p-norm and the sup norm (default 1e-12)");
  solve->add_option("--max-iter", max_iter, "Iteration cap (default 1000)");
  solve->add_option("--seeds", seeds_path, "JSON array of seed node vectors to explore the solution set");
  solve->add_flag("--override", override_audit, "Iterate even when the condition audit fails");
  solve->add_option("--out", out, "Report path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* sub : {verify, poset, solve})
      if (sub->parsed()) target = sub;
    throw HelpRequested{target->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  RunConfig cfg;
  if (!out.empty()) cfg.out_path = out;
  cfg.fixture = fixture;

  if (verify->parsed()) {
    cfg.command = Command::Verify;
    if (!contains(counterexample_names(), fixture)) usage("unknown fixture '" + fixture + "'");
    cfg.n_max = n_max != 0 ? n_max : (fixture == "lemma_2_9" ? 16 : 64);
    try {
      if (!lambda1.empty()) cfg.params.lambda1 = parse_rational(lambda1);
      if (!ratio.empty()) cfg.params.ratio = parse_rational(ratio);
    } catch (const Error& e) {
      usage(e.what());
    }
    cfg.params.truncation = truncation;
    return cfg;
  }

  if (!fixture.empty() && !config_path.empty()) usage("give either a fixture or --config, not both");
  if (fixture.empty() && config_path.empty()) usage("a fixture or --config is required");

  if (poset->parsed()) {
    cfg.command = Command::Poset;
    cfg.check = check;
    if (!config_path.empty()) {
      if (grid_step != 0) usage("--grid-step applies to fixtures only");
      cfg.poset_config = io::poset_config_from_json(io::read_json_file(config_path));
    } else {
      if (!contains(builtin_example_names(), fixture)) usage("unknown fixture '" + fixture + "'");
      cfg.grid_step = grid_step != 0 ? grid_step : default_grid_step(fixture);
    }
    return cfg;
  }

  cfg.command = Command::Solve;
  if (!config_path.empty()) {
    cfg.problem_json = io::read_json_file(config_path);
  } else {
    if (!contains(solve_fixture_names(), fixture)) usage("unknown fixture '" + fixture + "'");
    cfg.problem_json = solve_fixture_config(fixture);
  }
  cfg.problem = io::problem_from_json(cfg.problem_json);
  if (cfg.problem_json.contains("seed")) {
    const Json& s = cfg.problem_json.at("seed");
    if (!s.is_number_unsigned()) throw Error(ErrorKind::BadConfig, "'seed' must be a nonnegative integer");
    cfg.solve.seed = s.get<std::uint64_t>();
  }
  if (env_seed) cfg.solve.seed = parse_seed(*env_seed, "ORDFIX_SEED");
  if (!(eps > 0)) usage("--eps must be positive");
  if (max_iter == 0) usage("--max-iter must be positive");
  cfg.solve.eps = eps;
  cfg.solve.max_iter = max_iter;
  cfg.solve.override_audit = override_audit;
  if (!seeds_path.empty()) cfg.seeds = seeds_from_json(io::read_json_file(seeds_path));
  return cfg;
}

RunResult run(const RunConfig& config) {
  switch (config.command) {
    case Command::Verify:
      return run_verify(config);
    case Command::Poset:
      return run_poset(config);
    case Command::Solve:
      return run_solve(config);
  }
  return {};
}

void emit_report(const RunResult& result, const std::optional<std::string>& path, std::ostream& fallback) {
  const std::string text = io::canonical_dump(result.report);
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot write '" + *path + "'");
  file << text;
  if (!file.flush()) throw Error(ErrorKind::IoError, "write to '" + *path + "' failed");
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::optional<std::string> env_seed;
    if (const char* s = std::getenv("ORDFIX_SEED")) env_seed = s;
    RunConfig cfg = parse_config(args, env_seed);
    RunResult result = run(cfg);
    emit_report(result, cfg.out_path, out);
    if (result.report.contains("error")) err << result.report["error"]["message"].get<std::string>() << "\n";
    return result.exit_code;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace ordfix::cli
