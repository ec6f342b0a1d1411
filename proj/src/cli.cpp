#include "timeline/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "timeline/branching.hpp"
#include "timeline/color_coding.hpp"
#include "timeline/config_ilp.hpp"
#include "timeline/dp_vimw.hpp"
#include "timeline/generators.hpp"
#include "timeline/io.hpp"
#include "timeline/kernel.hpp"
#include "timeline/oracle.hpp"
#include "timeline/params.hpp"

namespace timeline {

using nlohmann::json;

namespace {

const std::map<std::string, Algorithm>& algorithm_names() {
  static const std::map<std::string, Algorithm> names = {
      {"auto", Algorithm::Auto},     {"oracle", Algorithm::Oracle}, {"dp", Algorithm::Dp},
      {"vimwx", Algorithm::Vimwx},   {"kernel", Algorithm::Kernel}, {"branch", Algorithm::Branch},
      {"cc", Algorithm::Cc},         {"ilp0", Algorithm::Ilp0}};
  return names;
}

bool full_kind(ProblemKind k) { return !is_partial(k); }

SolveOutcome decided(bool yes, std::optional<Count> optimum, std::string algorithm, std::string detail,
                     std::optional<Timeline> witness) {
  SolveOutcome out;
  out.decision = yes;
  out.optimum = optimum;
  out.algorithm = std::move(algorithm);
  out.detail = std::move(detail);
  if (yes) out.witness = std::move(witness);
  return out;
}

SolveOutcome run_oracle(const ProblemInstance& inst, const SolveSettings& s) {
  OracleOptions opts;
  opts.budget = s.oracle_budget;
  auto res = oracle_solve(inst, opts);
  return decided(res.decision, res.optimum, "oracle", "", std::move(res.witness));
}

SolveOutcome run_dp(const ProblemInstance& inst, const SolveSettings& s) {
  DpOptions opts;
  opts.budget = s.dp_budget;
  const auto& g = inst.graph;
  auto res = is_domination(inst.kind) ? solve_pds_dp(g, inst.k, inst.ell, opts)
                                      : solve_pvc_pipeline(g, inst.k, inst.ell, false, opts);
  return decided(res.optimum >= inst.target(), res.optimum, "dp", "", std::move(res.witness));
}

SolveOutcome run_vimwx(const ProblemInstance& inst, const SolveSettings& s) {
  DpOptions opts;
  opts.budget = s.dp_budget;
  const auto& g = inst.graph;
  if (inst.kind == ProblemKind::DS) {
    auto res = solve_ds_vimw_x(g, inst.k, inst.ell, opts);
    return decided(res.decision, std::nullopt, "vimwx", res.reason, std::move(res.witness));
  }
  if (inst.kind == ProblemKind::PDS)
    throw std::invalid_argument("algorithm vimwx supports vc, pvc and ds");
  auto res = solve_pvc_pipeline(g, inst.k, inst.ell, true, opts);
  return decided(res.optimum >= inst.target(), res.optimum, "vimwx", "large-bags", std::move(res.witness));
}

SolveOutcome run_branch(const ProblemInstance& inst, Count node_limit) {
  BranchingOptions opts;
  opts.node_limit = node_limit;
  BranchingResult res;
  if (inst.kind == ProblemKind::DS)
    res = solve_ds_branching(inst.graph, inst.k, inst.ell, opts);
  else if (inst.kind == ProblemKind::VC)
    res = solve_vc_branching(inst.graph, inst.k, inst.ell, opts);
  else
    throw std::invalid_argument("algorithm branch supports vc and ds");
  return decided(res.decision, std::nullopt, "branch", "nodes=" + std::to_string(res.nodes),
                 std::move(res.witness));
}

SolveOutcome run_kernel(const ProblemInstance& inst, Count node_limit) {
  if (inst.kind != ProblemKind::DS) throw std::invalid_argument("algorithm kernel supports ds only");
  auto k = kernelize_ds(inst.graph, inst.k, inst.ell);
  if (k.kind == KernelOutcome::Kind::Answer)
    return decided(k.decision, std::nullopt, "kernel", k.reason, std::move(k.witness));
  ProblemInstance small = inst;
  small.graph = *k.reduced;
  auto res = run_branch(small, node_limit);
  res.algorithm = "kernel+branch";
  res.detail = k.reason;
  return res;
}

SolveOutcome run_cc(const ProblemInstance& inst, const SolveSettings& s) {
  if (!is_partial(inst.kind)) throw std::invalid_argument("algorithm cc supports pvc and pds");
  const int t = static_cast<int>(std::min<Count>(inst.t, 1 << 20));
  auto res = solve_partial_cc(inst, make_plan(t, s.seed, s.delta));
  return decided(res.decision, std::nullopt, "cc", "trials=" + std::to_string(res.trials_run),
                 std::move(res.witness));
}

SolveOutcome run_ilp0(const ProblemInstance& inst, const SolveSettings& s) {
  if (inst.ell != 0) throw std::invalid_argument("algorithm ilp0 requires ell = 0");
  const auto prog = build_config_program(inst.graph, inst.k, inst.t, inst.kind);
  if (!s.lp_out.empty()) write_file(s.lp_out, export_lp(prog));
  auto sol = solve_config_exact(prog);
  return decided(sol.feasible, std::nullopt, "ilp0", "nodes=" + std::to_string(sol.nodes),
                 std::move(sol.witness));
}

SolveOutcome run_auto(const ProblemInstance& inst, const SolveSettings& s) {
  if (inst.kind == ProblemKind::DS) {
    auto k = kernelize_ds(inst.graph, inst.k, inst.ell);
    if (k.kind == KernelOutcome::Kind::Answer)
      return decided(k.decision, std::nullopt, "kernel", k.reason, std::move(k.witness));
  }
  try {
    return inst.kind == ProblemKind::PDS ? run_dp(inst, s) : run_vimwx(inst, s);
  } catch (const BudgetExceeded&) {
  }
  if (full_kind(inst.kind)) {
    try {
      return run_branch(inst, static_cast<Count>(std::max(1.0, s.dp_budget)));
    } catch (const BudgetExceeded&) {
    }
  }
  try {
    return run_oracle(inst, s);
  } catch (const BudgetExceeded&) {
  }
  throw std::runtime_error(
      "no exact solver fits the budgets; raise --dp-budget or --oracle-budget" +
      std::string(is_partial(inst.kind) ? ", or try --algo cc" : ""));
}

void check_instance(const ProblemInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("k must be at least 1");
  if (inst.ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (inst.t < 0) throw std::invalid_argument("t must be non-negative");
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json params_json(const TemporalGraph& g, const std::vector<int>& ranks) {
  json p;
  p["n"] = g.num_vertices();
  p["T"] = g.lifetime();
  p["vimw"] = vimw(g);
  p["imw"] = imw(g);
  p["q"] = max_snapshot_edges(g);
  json ranked = json::object();
  for (int x : ranks) ranked[std::to_string(x)] = vimw_x(g, x);
  p["vimw_x"] = ranked;
  return p;
}

TemporalGraph load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// Whitespace-separated integers, '#' to end of line ignored, an optional
// leading 'v' token (SAT solver model lines) skipped.
std::vector<long long> read_integers(const std::string& text) {
  std::vector<long long> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "v" || tok == "s" || tok == "SAT" || tok == "SATISFIABLE") continue;
      try {
        size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("source witness: unexpected token '" + tok + "'");
      }
    }
  }
  return out;
}

struct Generated {
  ProblemInstance inst;
  std::optional<Timeline> witness;
  bool has_problem = true;
};

Generated generate(const std::string& kind, int n, int T, double p, uint64_t seed, const std::string& source,
                   int k_ds, const std::string& source_witness) {
  Generated out;
  if (kind == "random") {
    out.inst.graph = gen_random(n, T, p, seed);
    out.has_problem = false;
    return out;
  }
  if (source.empty()) throw std::invalid_argument("gen " + kind + " needs --source");
  const auto text = read_file(source);
  std::optional<std::vector<long long>> given;
  if (!source_witness.empty()) given = read_integers(read_file(source_witness));

  if (kind == "reduce3sat-tpds") {
    const auto f = parse_dimacs(text);
    out.inst = reduce_3sat22_to_tpds(f);
    if (given) {
      Assignment a(f.num_vars + 1, false);
      for (long long lit : *given) {
        if (lit == 0) continue;
        if (std::llabs(lit) > f.num_vars) throw std::invalid_argument("source witness: literal out of range");
        a[std::llabs(lit)] = lit > 0;
      }
      out.witness = witness_3sat22_tpds(f, a);
    }
    return out;
  }

  const auto g = parse_static_graph(text);
  if (kind == "reduce-ds-tpds") {
    out.inst = reduce_ds_to_tpds(g, k_ds);
    if (given) {
      std::vector<Vertex> set;
      for (long long v : *given) {
        if (v < 1 || v > g.num_vertices()) throw std::invalid_argument("source witness: vertex out of range");
        set.push_back(static_cast<Vertex>(v));
      }
      out.witness = witness_ds_tpds(g, set);
    }
    return out;
  }

  Coloring colors;
  if (given) {
    if (static_cast<int>(given->size()) != g.num_vertices())
      throw std::invalid_argument("source witness: expected one color per vertex");
    colors.push_back(0);
    for (long long c : *given) colors.push_back(static_cast<int>(c));
  }
  if (kind == "reduce3col-tvc") {
    out.inst = reduce_3col_to_tvc(g);
    if (given) out.witness = witness_3col_tvc(g, colors);
  } else if (kind == "reduce3col-tds") {
    out.inst = reduce_3col_to_tds(g);
    if (given) out.witness = witness_3col_tds(g, colors);
  } else if (kind == "reduce3col-imw4") {
    out.inst = reduce_3col_to_tvc_imw4(g);
    if (given) out.witness = witness_3col_tvc_imw4(g, colors);
  } else {
    throw std::invalid_argument("unknown generator '" + kind + "'");
  }
  return out;
}

// Bench: one CSV row per (instance, problem kind).
struct BenchConfig {
  int count = 60;
  uint64_t seed = 1;
  int max_n = 4, max_T = 5, max_k = 2, max_ell = 2;
  std::vector<std::string> problems{"vc", "pvc", "ds", "pds"};
  double oracle_budget = 1e8;
};

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

void run_bench(const BenchConfig& cfg, std::ostream& csv) {
  const std::vector<std::string> algos{"dp", "vimwx", "branch", "ilp0", "kernel", "cc"};
  csv << "instance,seed,problem,n,T,k,ell,p,t,vimw,imw,q,oracle_decision,oracle_optimum,oracle_ms";
  for (const auto& a : algos) csv << ',' << a << "_ms";
  for (const auto& a : algos) csv << ",agree_" << a;
  csv << ",all_agree\n";

  std::mt19937_64 rng(cfg.seed);
  const double ps[3] = {0.2, 0.5, 0.8};
  SolveSettings settings;
  settings.seed = cfg.seed;
  settings.oracle_budget = cfg.oracle_budget;
  for (int id = 0; id < cfg.count; ++id) {
    const int n = 1 + static_cast<int>(rng() % cfg.max_n);
    const int T = 1 + static_cast<int>(rng() % cfg.max_T);
    const int k = 1 + static_cast<int>(rng() % cfg.max_k);
    const int ell = static_cast<int>(rng() % (cfg.max_ell + 1));
    const double p = ps[rng() % 3];
    const uint64_t gseed = rng();
    const auto g = gen_random(n, T, p, gseed);
    for (const auto& name : cfg.problems) {
      ProblemInstance inst;
      inst.graph = g;
      inst.kind = parse_problem_kind(name);
      inst.k = k;
      inst.ell = ell;
      if (is_partial(inst.kind)) inst.t = std::min<Count>(inst.universe_size(), 1 + gseed % 6);

      auto start = std::chrono::steady_clock::now();
      const auto ref = run_oracle(inst, settings);
      const double oracle_ms = ms_since(start);

      std::vector<std::string> times, flags;
      bool all = true;
      for (const auto& a : algos) {
        const Algorithm algo = parse_algorithm(a);
        const bool applicable =
            !(algo == Algorithm::Vimwx && inst.kind == ProblemKind::PDS) &&
            !((algo == Algorithm::Branch) && is_partial(inst.kind)) &&
            !(algo == Algorithm::Ilp0 && ell != 0) &&
            !(algo == Algorithm::Kernel && inst.kind != ProblemKind::DS) &&
            !(algo == Algorithm::Cc && !is_partial(inst.kind));
        if (!applicable) {
          times.emplace_back();
          flags.emplace_back("na");
          continue;
        }
        start = std::chrono::steady_clock::now();
        const auto got = solve_instance(inst, algo, settings);
        times.push_back(fmt_ms(ms_since(start)));
        bool agree = got.decision == ref.decision;
        if (got.optimum) agree = agree && got.optimum == ref.optimum;
        if (got.witness) agree = agree && verify(inst, *got.witness).satisfies_instance;
        flags.emplace_back(agree ? "true" : "false");
        all = all && agree;
      }
      csv << id << ',' << gseed << ',' << name << ',' << n << ',' << T << ',' << k << ',' << ell << ',' << p
          << ',' << inst.t << ',' << vimw(g) << ',' << imw(g) << ',' << max_snapshot_edges(g) << ','
          << (ref.decision ? "yes" : "no") << ',' << *ref.optimum << ',' << fmt_ms(oracle_ms);
      for (const auto& x : times) csv << ',' << x;
      for (const auto& x : flags) csv << ',' << x;
      csv << ',' << (all ? "true" : "false") << '\n';
    }
  }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  const auto it = algorithm_names().find(name);
  if (it == algorithm_names().end()) throw std::invalid_argument("unknown algorithm '" + name + "'");
  return it->second;
}

std::string to_string(Algorithm a) {
  for (const auto& [name, value] : algorithm_names())
    if (value == a) return name;
  return "?";
}

SolveOutcome solve_instance(const ProblemInstance& inst, Algorithm algo, const SolveSettings& settings) {
  check_instance(inst);
  switch (algo) {
    case Algorithm::Auto: return run_auto(inst, settings);
    case Algorithm::Oracle: return run_oracle(inst, settings);
    case Algorithm::Dp: return run_dp(inst, settings);
    case Algorithm::Vimwx: return run_vimwx(inst, settings);
    case Algorithm::Kernel: return run_kernel(inst, 0);
    case Algorithm::Branch: return run_branch(inst, 0);
    case Algorithm::Cc: return run_cc(inst, settings);
    case Algorithm::Ilp0: return run_ilp0(inst, settings);
  }
  throw std::invalid_argument("unknown algorithm");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for timeline vertex cover and dominating set on temporal graphs", "timeline"};
  app.require_subcommand(1);
  const std::vector<std::string> kinds{"vc", "pvc", "ds", "pds"};

  // solve
  auto* solve = app.add_subcommand("solve", "Decide an instance and print a JSON result");
  std::string input, problem = "vc", algo_name = "auto", witness_out, lp_out;
  int k = 1, ell = 0;
  Count t = -1;
  SolveSettings settings;
  solve->add_option("instance", input, "Instance file (text format or JSON)")->required();
  solve->add_option("--problem", problem, "vc, pvc, ds or pds")->required()->check(CLI::IsMember(kinds));
  solve->add_option("-k", k, "Intervals per vertex")->capture_default_str();
  solve->add_option("--ell", ell, "Maximum interval length")->capture_default_str();
  solve->add_option("-t", t, "Threshold for pvc and pds");
  solve->add_option("--algo", algo_name, "auto, oracle, dp, vimwx, kernel, branch, cc or ilp0")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "oracle", "dp", "vimwx", "kernel", "branch", "cc", "ilp0"}));
  solve->add_option("--seed", settings.seed, "Seed for randomized solvers")->capture_default_str();
  solve->add_option("--delta", settings.delta, "Failure probability for cc")->capture_default_str();
  solve->add_option("--witness-out", witness_out, "Write the witness timeline here on a yes");
  solve->add_option("--dp-budget", settings.dp_budget,
                    "Profile budget per DP layer; also caps branching nodes under auto")
      ->capture_default_str();
  solve->add_option("--oracle-budget", settings.oracle_budget, "Search-space cap for the oracle")
      ->capture_default_str();
  solve->add_option("--lp-out", settings.lp_out, "Write the configuration program (ilp0) in LP format");

  // params
  auto* params = app.add_subcommand("params", "Print structural parameters as JSON");
  std::string params_input;
  std::vector<int> ranks{1};
  params->add_option("instance", params_input, "Instance file")->required();
  params->add_option("--rank", ranks, "Ranks x for vimw_x")->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness timeline against an instance");
  std::string v_input, v_problem = "vc", v_witness;
  int v_k = 1, v_ell = 0;
  Count v_t = 0;
  verify_cmd->add_option("instance", v_input, "Instance file")->required();
  verify_cmd->add_option("--witness", v_witness, "Witness JSON file")->required();
  verify_cmd->add_option("--problem", v_problem, "vc, pvc, ds or pds")->required()->check(CLI::IsMember(kinds));
  verify_cmd->add_option("-k", v_k, "Intervals per vertex")->capture_default_str();
  verify_cmd->add_option("--ell", v_ell, "Maximum interval length")->capture_default_str();
  verify_cmd->add_option("-t", v_t, "Threshold for pvc and pds")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate random instances or reductions");
  std::string gen_kind, gen_source, gen_source_witness, gen_out, gen_witness_out;
  int gen_n = 5, gen_T = 5, gen_k_ds = 1;
  double gen_p = 0.3;
  uint64_t gen_seed = 0;
  bool gen_json = false;
  gen->add_option("kind", gen_kind,
                  "random, reduce3col-tvc, reduce3col-tds, reduce3col-imw4, reduce-ds-tpds or reduce3sat-tpds")
      ->required()
      ->check(CLI::IsMember({"random", "reduce3col-tvc", "reduce3col-tds", "reduce3col-imw4", "reduce-ds-tpds",
                             "reduce3sat-tpds"}));
  gen->add_option("-n", gen_n, "Vertices (random)")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("-T", gen_T, "Snapshots (random)")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("-p", gen_p, "Edge probability (random)")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Seed (random)")->capture_default_str();
  gen->add_option("--source", gen_source, "Source graph (\"n\" then \"u v\" lines) or DIMACS cnf");
  gen->add_option("--k-ds", gen_k_ds, "Dominating set size (reduce-ds-tpds)")->capture_default_str();
  auto* sw = gen->add_option("--source-witness", gen_source_witness,
                             "Coloring (one color 0-2 per vertex), vertex set, or satisfying literals");
  gen->add_option("--witness-out", gen_witness_out, "Write the reduced witness here")->needs(sw);
  gen->add_option("-o,--out", gen_out, "Output instance file")->required();
  gen->add_flag("--json", gen_json, "Write the instance as JSON");

  // bench
  auto* bench = app.add_subcommand("bench", "Cross-check all solvers on a random grid and print CSV");
  BenchConfig bench_cfg;
  std::string bench_out;
  bench->add_option("--count", bench_cfg.count, "Random instances")->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "Grid seed")->capture_default_str();
  bench->add_option("--max-n", bench_cfg.max_n, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--max-T", bench_cfg.max_T, "Largest T")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--max-k", bench_cfg.max_k, "Largest k")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--max-ell", bench_cfg.max_ell, "Largest ell")->capture_default_str()->check(CLI::NonNegativeNumber);
  bench->add_option("--problems", bench_cfg.problems, "Problem kinds")->check(CLI::IsMember(kinds));
  bench->add_option("--oracle-budget", bench_cfg.oracle_budget, "Search-space cap for the oracle")
      ->capture_default_str();
  bench->add_option("-o,--out", bench_out, "CSV file (default: standard output)");

  std::vector<const char*> argv{"timeline"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      ProblemInstance inst;
      inst.graph = load_instance(input);
      inst.kind = parse_problem_kind(problem);
      inst.k = k;
      inst.ell = ell;
      if (is_partial(inst.kind)) {
        if (t < 0) throw std::invalid_argument("-t is required for " + problem);
        inst.t = t;
      }
      const Algorithm algo = parse_algorithm(algo_name);
      const auto start = std::chrono::steady_clock::now();
      auto res = solve_instance(inst, algo, settings);
      const double elapsed = ms_since(start);

      json j;
      j["decision"] = res.decision ? "yes" : "no";
      if (res.optimum) j["optimum"] = *res.optimum;
      j["algorithm"] = res.algorithm;
      if (!res.detail.empty()) j["detail"] = res.detail;
      j["problem"] = problem;
      j["k"] = k;
      j["ell"] = ell;
      if (is_partial(inst.kind)) j["t"] = inst.t;
      const int span_rank = static_cast<int>(std::min<Count>(Count(k) * (ell + 1), 1 << 30));
      j["params"] = params_json(inst.graph, {1, ell + 1, span_rank});
      j["elapsed_ms"] = elapsed;
      if (res.decision && res.witness && !witness_out.empty()) {
        if (!verify(inst, *res.witness).satisfies_instance)
          throw std::logic_error("internal error: witness failed verification");
        write_file(witness_out, emit_witness(*res.witness));
        j["witness_path"] = witness_out;
      }
      out << j.dump() << '\n';
      return res.decision ? 0 : 1;
    }
    if (*params) {
      const auto g = load_instance(params_input);
      auto j = params_json(g, ranks);
      j["vertex_bag_sizes"] = vertex_membership_sequence(g).sizes();
      out << j.dump() << '\n';
      return 0;
    }
    if (*verify_cmd) {
      ProblemInstance inst;
      inst.graph = load_instance(v_input);
      inst.kind = parse_problem_kind(v_problem);
      inst.k = v_k;
      inst.ell = v_ell;
      inst.t = v_t;
      check_instance(inst);
      const auto rep = verify(inst, parse_witness(read_file(v_witness)));
      json j;
      j["well_formed"] = rep.well_formed;
      j["k_respected"] = rep.k_respected;
      j["ell_respected"] = rep.ell_respected;
      j["covered"] = rep.covered;
      j["dominated"] = rep.dominated;
      j["target"] = inst.target();
      j["satisfies_instance"] = rep.satisfies_instance;
      out << j.dump() << '\n';
      return rep.satisfies_instance ? 0 : 1;
    }
    if (*gen) {
      auto made = generate(gen_kind, gen_n, gen_T, gen_p, gen_seed, gen_source, gen_k_ds, gen_source_witness);
      write_file(gen_out, gen_json ? emit_instance_json(made.inst.graph) : emit_instance(made.inst.graph));
      json j;
      j["kind"] = gen_kind;
      j["path"] = gen_out;
      j["n"] = made.inst.graph.num_vertices();
      j["T"] = made.inst.graph.lifetime();
      if (made.has_problem) {
        j["problem"] = to_string(made.inst.kind);
        j["k"] = made.inst.k;
        j["ell"] = made.inst.ell;
        if (is_partial(made.inst.kind)) j["t"] = made.inst.t;
      }
      if (made.witness && !gen_witness_out.empty()) {
        write_file(gen_witness_out, emit_witness(*made.witness));
        j["witness_path"] = gen_witness_out;
        j["witness_verified"] = verify(made.inst, *made.witness).satisfies_instance;
      }
      out << j.dump() << '\n';
      return 0;
    }
    if (*bench) {
      if (bench_out.empty()) {
        run_bench(bench_cfg, out);
      } else {
        std::ostringstream csv;
        run_bench(bench_cfg, csv);
        write_file(bench_out, csv.str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace timeline
