// Command-line front end: finite solving, graph generation, symbolic
// queries, certificate audits, pursuit simulation, and the verification
// harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "copwin/certify.hpp"
#include "copwin/eta_solver.hpp"
#include "copwin/graph_gen.hpp"
#include "copwin/graph_io.hpp"
#include "copwin/harness.hpp"
#include "copwin/ordinal.hpp"
#include "copwin/strategy.hpp"
#include "copwin/symbolic.hpp"

namespace {

using namespace copwin;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "table";  // or "structured"
};

bool structured(const GlobalOptions& g) { return g.format == "structured"; }

// Output is assembled in full before anything is written, so failed
// invocations never leave partial files behind.
void deliver(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw std::runtime_error("cannot write to '" + g.out + "'");
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Ordinal parse_gamma(const std::string& text) {
  Ordinal gamma;
  try {
    gamma = Ordinal::parse(text);
  } catch (const OrdinalParseError& e) {
    throw UsageError("--gamma: " + std::string(e.what()));
  }
  if (!gamma.is_limit() || gamma.is_zero())
    throw UsageError("--gamma must be an infinite limit ordinal, got '" +
                     text + "'");
  return gamma;
}

SymbolicVertex parse_vertex(const std::string& flag, const std::string& text) {
  try {
    return SymbolicVertex::parse(text);
  } catch (const OrdinalError& e) {
    throw UsageError(flag + ": " + std::string(e.what()));
  }
}

SymbolicGraph make_symbolic(const std::string& gamma_text, std::uint64_t tail,
                            bool no_diagonal) {
  try {
    return SymbolicGraph(parse_gamma(gamma_text), tail, !no_diagonal);
  } catch (const OrdinalDomainError& e) {
    throw UsageError(e.what());
  }
}

std::size_t find_label(const FiniteGraph& g, const std::string& label) {
  if (auto v = g.find_vertex(label)) return *v;
  throw std::runtime_error("vertex '" + label + "' is not in the graph");
}

std::string eta_value_str(std::uint32_t value) {
  return value == EtaTable::kRobberWins ? "RW" : std::to_string(value);
}

nlohmann::json ordinal_json(const Ordinal& x) {
  return {{"str", x.str()}, {"cnf", x.to_json()}};
}

// ---------------------------------------------------------------------------

int cmd_solve(const GlobalOptions& g, const std::string& path,
              const std::vector<std::string>& pair) {
  FiniteGraph graph = read_graph_file(path);
  EtaTable table = eta_all(graph);
  if (!pair.empty()) {
    std::size_t u = find_label(graph, pair[0]);
    std::size_t v = find_label(graph, pair[1]);
    std::uint32_t value = table.at(u, v);
    if (structured(g)) {
      deliver(g, dump({{"u", graph.label(u)},
                       {"v", graph.label(v)},
                       {"eta", value == EtaTable::kRobberWins
                                   ? nlohmann::json()
                                   : nlohmann::json(value)}}));
    } else {
      deliver(g, "eta(" + graph.label(u) + ", " + graph.label(v) +
                     ") = " + eta_value_str(value) + "\n");
    }
    return 0;
  }
  if (structured(g)) {
    deliver(g, dump(eta_table_to_json(graph, table)));
  } else {
    std::ostringstream out;
    write_eta_table_text(out, graph, table);
    deliver(g, out.str());
  }
  return 0;
}

int cmd_dismantle(const GlobalOptions& g, const std::string& path) {
  FiniteGraph graph = read_graph_file(path);
  auto order = dismantle(graph);
  if (structured(g)) {
    nlohmann::json j{{"constructible", order.has_value()}};
    j["order"] = nlohmann::json::array();
    if (order)
      for (std::size_t v : *order) j["order"].push_back(graph.label(v));
    deliver(g, dump(j));
  } else {
    std::ostringstream out;
    if (order) {
      out << "constructible: yes\norder:";
      for (std::size_t v : *order) out << ' ' << graph.label(v);
      out << '\n';
    } else {
      out << "constructible: no\n";
    }
    deliver(g, out.str());
  }
  return 0;
}

int cmd_gen(const GlobalOptions& g, std::size_t grid, std::size_t tail,
            bool no_diagonal, bool dot) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  FiniteGraph graph = generate_truncation(
      {.grid_n = grid, .tail_n = tail, .diagonal_edges = !no_diagonal});
  std::ostringstream out;
  if (dot)
    write_dot(out, graph);
  else
    write_edge_list(out, graph);
  deliver(g, out.str());
  return 0;
}

int cmd_eta(const GlobalOptions& g, const std::string& gamma,
            std::uint64_t tail, bool no_diagonal, const std::string& u_text,
            const std::string& v_text) {
  SymbolicGraph graph = make_symbolic(gamma, tail, no_diagonal);
  SymbolicVertex u = parse_vertex("--u", u_text);
  SymbolicVertex v = parse_vertex("--v", v_text);
  try {
    graph.require(u);
    graph.require(v);
  } catch (const OrdinalDomainError& e) {
    throw UsageError(e.what());
  }
  OrdinalBound bound = eta_bounds(graph, u, v);
  if (structured(g)) {
    deliver(g, dump({{"u", u.str()},
                     {"v", v.str()},
                     {"lower", ordinal_json(bound.lower)},
                     {"upper", ordinal_json(bound.upper)},
                     {"exact", bound.exact}}));
  } else {
    std::ostringstream out;
    out << "eta(" << u.str() << ", " << v.str() << ")\n";
    out << "  lower: " << bound.lower.str() << "\n";
    out << "  upper: " << bound.upper.str() << "\n";
    out << "  exact: " << (bound.exact ? "yes" : "no") << "\n";
    deliver(g, out.str());
  }
  return 0;
}

int cmd_rho(const GlobalOptions& g, const std::string& gamma,
            std::uint64_t tail, bool no_diagonal) {
  SymbolicGraph graph = make_symbolic(gamma, tail, no_diagonal);
  Ordinal value = rho(graph);
  if (structured(g))
    deliver(g, dump({{"rho", ordinal_json(value)}}));
  else
    deliver(g, value.str() + "\n");
  return 0;
}

int cmd_certify(const GlobalOptions& g, const std::string& gamma,
                std::uint64_t tail, bool no_diagonal,
                const std::string& family_name, std::size_t instances,
                std::size_t samples, const std::string& u_text,
                const std::string& v_text, const std::string& rank_text) {
  auto family = claim_family_from_name(family_name);
  if (!family) throw UsageError("unknown claim family '" + family_name + "'");
  SymbolicGraph graph = make_symbolic(gamma, tail, no_diagonal);

  std::optional<Claim> fixed;
  if (!u_text.empty() || !v_text.empty() || !rank_text.empty()) {
    if (u_text.empty() || v_text.empty() || rank_text.empty())
      throw UsageError("--u, --v and --rank must be given together");
    try {
      fixed = Claim{parse_vertex("--u", u_text), parse_vertex("--v", v_text),
                    Ordinal::parse(rank_text)};
    } catch (const OrdinalParseError& e) {
      throw UsageError("--rank: " + std::string(e.what()));
    }
  }

  CertifyOptions options;
  options.root_samples = samples;
  std::mt19937_64 rng(g.seed);
  nlohmann::json results = nlohmann::json::array();
  std::ostringstream text;
  bool all_ok = true;
  for (std::size_t i = 0; i < instances; ++i) {
    Claim claim = fixed ? *fixed : make_family_claim(graph, *family, rng);
    CertifyResult res = certify(graph, claim, *family, rng(), options);
    all_ok = all_ok && res.ok;
    results.push_back(
        {{"family", claim_family_name(*family)},
         {"claim",
          {{"u", claim.u.str()},
           {"v", claim.v.str()},
           {"rank", ordinal_json(claim.rank)}}},
         {"ok", res.ok},
         {"violation", res.violation},
         {"stats",
          {{"total_steps", res.stats.total_steps},
           {"max_depth", res.stats.max_depth},
           {"challenges", res.stats.challenges}}}});
    text << (res.ok ? "PASS" : "FAIL") << " " << claim_family_name(*family)
         << " claim (" << claim.u.str() << ", " << claim.v.str() << ", "
         << claim.rank.str() << ")"
         << "  challenges=" << res.stats.challenges
         << " depth=" << res.stats.max_depth;
    if (!res.ok) text << "\n     " << res.violation;
    text << "\n";
  }
  deliver(g, structured(g) ? dump(results) : text.str());
  return all_ok ? 0 : kExitFailure;
}

int cmd_simulate(const GlobalOptions& g, const std::string& gamma,
                 std::uint64_t tail, bool no_diagonal,
                 const std::string& cop_text, const std::string& robber_text,
                 const std::string& robber_policy,
                 const std::string& cop_policy, const std::string& budget_text,
                 std::size_t max_rounds) {
  SymbolicGraph graph = make_symbolic(gamma, tail, no_diagonal);
  SymbolicVertex cop = parse_vertex("--cop", cop_text);
  SymbolicVertex robber = parse_vertex("--robber", robber_text);
  try {
    graph.require(cop);
    graph.require(robber);
  } catch (const OrdinalDomainError& e) {
    throw UsageError(e.what());
  }
  if (cop == robber)
    throw UsageError("--cop and --robber must be distinct vertices");

  CopPolicy cp = cop_policy == "greedy" ? make_bound_greedy_cop(graph)
                                        : make_pursuit_cop(graph);
  RobberPolicy rp;
  if (robber_policy == "stay") {
    rp = make_stay_robber();
  } else if (robber_policy == "random") {
    rp = make_random_robber(graph, g.seed);
  } else {
    Ordinal budget;
    try {
      budget = Ordinal::parse(budget_text);
    } catch (const OrdinalParseError& e) {
      throw UsageError("--budget: " + std::string(e.what()));
    }
    rp = make_budget_robber(graph, std::move(budget));
  }

  PlayTrace trace = simulate(graph, cp, rp, cop, robber, max_rounds);
  if (structured(g)) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& round : trace.rounds)
      rounds.push_back({{"cop", round.cop.str()},
                        {"robber", round.robber.str()},
                        {"phase", phase_name(round.phase)}});
    nlohmann::json ranks = nlohmann::json::array();
    for (const Ordinal& r : trace.chase_ranks) ranks.push_back(r.str());
    deliver(g, dump({{"rounds", rounds},
                     {"chase_ranks", ranks},
                     {"captured", trace.captured},
                     {"violations", trace.violations}}));
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      const auto& round = trace.rounds[i];
      out << "round " << i + 1 << ": cop " << round.cop.str() << "  robber "
          << round.robber.str() << "  [" << phase_name(round.phase) << "]\n";
    }
    if (!trace.chase_ranks.empty()) {
      out << "chase ranks:";
      for (const Ordinal& r : trace.chase_ranks) out << ' ' << r.str();
      out << '\n';
    }
    for (const std::string& v : trace.violations)
      out << "violation: " << v << '\n';
    out << (trace.captured ? "captured\n" : "not captured\n");
    deliver(g, out.str());
  }
  return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite,
               const std::string& config_path) {
  SuiteConfig config = SuiteConfig::defaults();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      throw std::runtime_error("cannot read config '" + config_path + "'");
    config = SuiteConfig::from_stream(in);
  }
  config.seed = g.seed;
  bool known = false;
  for (const std::string& name : suite_names()) known = known || name == suite;
  if (!known) throw UsageError("unknown suite '" + suite + "'");

  Report report = run_suite(suite, config);
  deliver(g, structured(g) ? dump(report_to_json(report))
                           : report_to_table(report));
  return report.ok() ? 0 : kExitFailure;
}

int cmd_ord(const GlobalOptions& g, const std::string& expr) {
  Ordinal value;
  try {
    value = Ordinal::parse(expr);
  } catch (const OrdinalParseError& e) {
    throw UsageError(e.what());
  }
  if (structured(g))
    deliver(g, dump({{"value", ordinal_json(value)}}));
  else
    deliver(g, value.str() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capture-time calculus for pursuit games on graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for all randomized work");
  app.add_option("--out", global.out, "Write output to this file");
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"table", "structured"}));

  // solve
  std::string graph_path;
  std::vector<std::string> pair;
  auto* solve = app.add_subcommand("solve", "Capture times of a finite graph");
  solve->add_option("--graph", graph_path, "Edge-list or DOT file")
      ->required();
  solve->add_option("--pair", pair, "Robber and cop start labels")
      ->expected(2);

  // dismantle
  std::string dis_path;
  auto* dis = app.add_subcommand("dismantle", "Elimination order, if any");
  dis->add_option("--graph", dis_path, "Edge-list or DOT file")->required();

  // gen
  std::size_t gen_grid = 2, gen_tail = 0;
  bool gen_no_diag = false, gen_dot = false;
  auto* gen = app.add_subcommand("gen", "Generate a finite grid truncation");
  gen->add_option("--grid", gen_grid, "Grid side length")->required();
  gen->add_option("--tail", gen_tail, "Attached path length");
  gen->add_flag("--no-diagonal", gen_no_diag, "Drop the diagonal clique");
  gen->add_flag("--dot", gen_dot, "Emit DOT instead of an edge list");

  // eta
  std::string eta_gamma, eta_u, eta_v;
  std::uint64_t eta_tail = 0;
  bool eta_no_diag = false;
  auto* eta = app.add_subcommand("eta", "Symbolic capture-time bounds");
  eta->add_option("--gamma", eta_gamma, "Infinite limit ordinal")->required();
  eta->add_option("--tail", eta_tail, "Attached path length");
  eta->add_flag("--no-diagonal", eta_no_diag, "Drop the diagonal clique");
  eta->add_option("--u", eta_u, "Robber vertex, \"(a,b)\" or \"T(i)\"")
      ->required();
  eta->add_option("--v", eta_v, "Cop vertex")->required();

  // rho
  std::string rho_gamma;
  std::uint64_t rho_tail = 0;
  bool rho_no_diag = false;
  auto* rhoc = app.add_subcommand("rho", "Maximum capture time");
  rhoc->add_option("--gamma", rho_gamma, "Infinite limit ordinal")
      ->required();
  rhoc->add_option("--tail", rho_tail, "Attached path length");
  rhoc->add_flag("--no-diagonal", rho_no_diag, "Drop the diagonal clique");

  // certify
  std::string cert_gamma, cert_family, cert_u, cert_v, cert_rank;
  std::uint64_t cert_tail = 0;
  std::size_t cert_instances = 1, cert_samples = 100;
  bool cert_no_diag = false;
  auto* cert = app.add_subcommand("certify", "Audit an upper-bound claim");
  cert->add_option("--gamma", cert_gamma, "Infinite limit ordinal")
      ->required();
  cert->add_option("--tail", cert_tail, "Attached path length");
  cert->add_flag("--no-diagonal", cert_no_diag, "Drop the diagonal clique");
  cert->add_option("--family", cert_family,
                   "axis-x, axis-y, diagonal, assembly, tail-diagonal, "
                   "grid-cop or tail-cop")
      ->required();
  cert->add_option("--instances", cert_instances, "Sampled claims to audit");
  cert->add_option("--samples", cert_samples, "Challenges at the root");
  cert->add_option("--u", cert_u, "Explicit robber vertex");
  cert->add_option("--v", cert_v, "Explicit cop vertex");
  cert->add_option("--rank", cert_rank, "Explicit claim rank");

  // simulate
  std::string sim_gamma, sim_cop, sim_robber, sim_rpolicy = "stay",
              sim_cpolicy = "pursuit", sim_budget = "0";
  std::uint64_t sim_tail = 0;
  std::size_t sim_rounds = 1000;
  bool sim_no_diag = false;
  auto* sim = app.add_subcommand("simulate", "Play out a pursuit");
  sim->add_option("--gamma", sim_gamma, "Infinite limit ordinal")->required();
  sim->add_option("--tail", sim_tail, "Attached path length");
  sim->add_flag("--no-diagonal", sim_no_diag, "Drop the diagonal clique");
  sim->add_option("--cop", sim_cop, "Cop start vertex")->required();
  sim->add_option("--robber", sim_robber, "Robber start vertex")->required();
  sim->add_option("--robber-policy", sim_rpolicy, "Robber behavior")
      ->check(CLI::IsMember({"stay", "random", "budget"}));
  sim->add_option("--cop-policy", sim_cpolicy, "Cop behavior")
      ->check(CLI::IsMember({"pursuit", "greedy"}));
  sim->add_option("--budget", sim_budget, "Survival budget ordinal");
  sim->add_option("--max-rounds", sim_rounds, "Round cap");

  // verify
  std::string verify_suite = "all", verify_config;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", verify_suite, "Suite name or 'all'");
  verify->add_option("--config", verify_config, "key=value config file");

  // ord
  std::string ord_expr;
  auto* ordc = app.add_subcommand("ord", "Normalize an ordinal expression");
  ordc->add_option("expr", ord_expr, "Expression in the w grammar")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(global, graph_path, pair);
    if (dis->parsed()) return cmd_dismantle(global, dis_path);
    if (gen->parsed())
      return cmd_gen(global, gen_grid, gen_tail, gen_no_diag, gen_dot);
    if (eta->parsed())
      return cmd_eta(global, eta_gamma, eta_tail, eta_no_diag, eta_u, eta_v);
    if (rhoc->parsed())
      return cmd_rho(global, rho_gamma, rho_tail, rho_no_diag);
    if (cert->parsed())
      return cmd_certify(global, cert_gamma, cert_tail, cert_no_diag,
                         cert_family, cert_instances, cert_samples, cert_u,
                         cert_v, cert_rank);
    if (sim->parsed())
      return cmd_simulate(global, sim_gamma, sim_tail, sim_no_diag, sim_cop,
                          sim_robber, sim_rpolicy, sim_cpolicy, sim_budget,
                          sim_rounds);
    if (verify->parsed()) return cmd_verify(global, verify_suite,
                                            verify_config);
    if (ordc->parsed()) return cmd_ord(global, ord_expr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
