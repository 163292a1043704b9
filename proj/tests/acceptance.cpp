// Acceptance gate: one check per criterion, each timed against its
// pinned limit. Prints a [PASS]/[FAIL] line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "copwin/certify.hpp"
#include "copwin/eta_solver.hpp"
#include "copwin/graph_gen.hpp"
#include "copwin/harness.hpp"
#include "copwin/sampling.hpp"
#include "copwin/strategy.hpp"
#include "copwin/symbolic.hpp"

using namespace copwin;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds,
            double limit_seconds, const std::string& detail = "") {
  const bool in_time = limit_seconds <= 0 || seconds <= limit_seconds;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2f s%s)%s%s\n",
              pass ? "PASS" : "FAIL", criterion, what.c_str(), seconds,
              limit_seconds > 0
                  ? (", limit " + std::to_string((int)limit_seconds) + " s")
                        .c_str()
                  : "",
              detail.empty() ? "" : " — ", detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Ordinal O(std::string_view text) { return Ordinal::parse(text); }

std::vector<FiniteGraph> corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteGraph> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(
        generate_random(1 + rng() % 8, 0.2 + 0.1 * (rng() % 7), rng()));
  return out;
}

bool recursion_identity(const FiniteGraph& g, const EtaTable& t) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      std::uint32_t expected = 0;
      if (u != v) {
        std::uint32_t worst = 0;
        for (std::size_t x : g.closed_neighborhood(u)) {
          std::uint32_t best = EtaTable::kRobberWins;
          for (std::size_t y : g.closed_neighborhood(v))
            best = std::min(best, t.at(x, y));
          worst = std::max(worst, best);
        }
        expected = worst == EtaTable::kRobberWins ? worst : worst + 1;
      }
      if (t.at(u, v) != expected) return false;
    }
  return true;
}

std::vector<Ordinal> standard_gammas() {
  return {O("w"), O("w*2"), O("w^2"), O("w^w")};
}

SymbolicVertex random_grid(const SymbolicGraph& g, std::mt19937_64& rng) {
  return SymbolicVertex::grid(random_ordinal_below(g.gamma(), rng),
                              random_ordinal_below(g.gamma(), rng));
}

// Criterion 6/9 helper: 1000 sampled descents for one family.
bool audit_thousand(const SymbolicGraph& g, ClaimFamily family,
                    std::mt19937_64& rng, std::string& why) {
  CertifyOptions options;  // 100 root challenges per instance
  for (int instance = 0; instance < 10; ++instance) {
    Claim claim = make_family_claim(g, family, rng);
    CertifyResult res = certify(g, claim, family, rng(), options);
    if (!res.ok) {
      why = claim_family_name(family) + " claim (" + claim.u.str() + ", " +
            claim.v.str() + ", " + claim.rank.str() + "): " + res.violation;
      return false;
    }
  }
  return true;
}

// Criterion 7/9 helper: pursuit cop versus seeded random robbers.
bool capture_sweep(const SymbolicGraph& g, std::size_t trials,
                   std::mt19937_64& rng, std::string& why) {
  CopPolicy cop = make_pursuit_cop(g);
  for (std::size_t i = 0; i < trials; ++i) {
    SymbolicVertex c = random_grid(g, rng);
    SymbolicVertex u = random_grid(g, rng);
    while (u == c) u = random_grid(g, rng);
    PlayTrace trace =
        simulate(g, cop, make_random_robber(g, rng()), c, u, 10'000);
    bool decreasing = true;
    for (std::size_t j = 1; j < trace.chase_ranks.size(); ++j)
      decreasing = decreasing && trace.chase_ranks[j] < trace.chase_ranks[j - 1];
    if (!trace.captured || !trace.violations.empty() || !decreasing) {
      why = "cop " + c.str() + " vs robber " + u.str() + ": " +
            (!trace.captured ? "no capture"
             : !decreasing   ? "chase ranks fail to decrease"
                             : trace.violations.front());
      return false;
    }
  }
  return true;
}

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 10; ++n)
    ok = ok && eta_all(generate_path(2 * n + 1)).eta_g == n;
  report(1, "path capture times eta(P_{2n+1}) = n, n = 1..10", ok,
         seconds_since(start), 1.0);
}

void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const FiniteGraph& g : corpus(200, 2024)) {
    EtaTable t = eta_all(g);
    for (std::size_t u = 0; u < g.size() && ok; ++u)
      for (std::size_t v = 0; v < g.size() && ok; ++v)
        ok = t.at(u, v) == naive_game_value(g, u, v);
    if (!ok) break;
  }
  report(2, "oracle equivalence on 200 random graphs (<= 8 vertices)", ok,
         seconds_since(start), 60.0);
}

void criterion_3() {
  auto start = std::chrono::steady_clock::now();
  std::vector<FiniteGraph> graphs = corpus(200, 2024);
  for (std::size_t k = 3; k <= 8; ++k) graphs.push_back(generate_cycle(k));
  for (std::size_t k = 1; k <= 6; ++k) graphs.push_back(generate_complete(k));
  bool ok = true;
  for (const FiniteGraph& g : graphs)
    ok = ok && eta_all(g).cop_win() == dismantle(g).has_value();
  report(3, "cop-win iff dismantlable on the corpus plus C_k and K_k", ok,
         seconds_since(start), 0);
}

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const FiniteGraph& g : corpus(200, 2024))
    ok = ok && recursion_identity(g, eta_all(g));
  for (std::size_t n : {4u, 6u, 8u})
    for (std::size_t tail : {0u, 2u})
      for (bool diag : {true, false}) {
        FiniteGraph g = generate_truncation({n, tail, diag});
        ok = ok && recursion_identity(g, eta_all(g));
      }
  report(4, "recursion identity on the corpus and truncations T_4/T_6/T_8",
         ok, seconds_since(start), 0);
}

void criterion_5() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5);
  bool ok = true;
  for (const Ordinal& gamma : standard_gammas()) {
    SymbolicGraph g(gamma, 0, true);
    for (int i = 0; i < 50 && ok; ++i) {
      Ordinal a = random_ordinal_below(gamma, rng);
      SymbolicVertex u = SymbolicVertex::grid(a, a);
      SymbolicVertex v = random_grid(g, rng);
      while (v.is_diagonal()) v = random_grid(g, rng);
      OrdinalBound b = eta_bounds(g, u, v);
      ok = b.exact && b.lower == gamma && b.upper == gamma;
    }
    ok = ok && rho(g) == gamma;
    for (std::uint64_t n : {1u, 2u, 3u}) {
      SymbolicGraph gt(gamma, n, true);
      OrdinalBound b = eta_bounds(gt, SymbolicVertex::tail(n),
                                  SymbolicVertex::tail(n + 1));
      Ordinal expected = gamma + Ordinal(n);
      ok = ok && b.exact && b.upper == expected && rho(gt) == expected;
    }
  }
  report(5, "symbolic exactness: diagonal pairs, rho, and tail pairs", ok,
         seconds_since(start), 5.0);
}

void criterion_6() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(6);
  bool ok = true;
  std::string why;
  for (const Ordinal& gamma : standard_gammas()) {
    SymbolicGraph g(gamma, 0, true);
    for (ClaimFamily f :
         {ClaimFamily::AxisX, ClaimFamily::AxisY, ClaimFamily::DiagonalPair,
          ClaimFamily::GridAssembly})
      ok = ok && audit_thousand(g, f, rng, why);
    SymbolicGraph gt(gamma, 2, true);
    for (ClaimFamily f : {ClaimFamily::TailDiagonal, ClaimFamily::GridCop,
                          ClaimFamily::TailCop})
      ok = ok && audit_thousand(gt, f, rng, why);
    if (!ok) break;
  }

  // Mutation test: a corrupted rank must be caught.
  SymbolicGraph g(O("w^2"), 0, true);
  CertifyOptions tampered;
  tampered.root_samples = 200;
  tampered.tamper = [](SymbolicVertex&, Ordinal& delta, std::size_t depth) {
    if (depth == 0) delta += O("w^2");
  };
  CertifyResult res = certify(
      g,
      {SymbolicVertex::grid(O("w"), Ordinal(5)),
       SymbolicVertex::grid(O("w+1"), Ordinal()), Ordinal(5)},
      ClaimFamily::AxisX, 42, tampered);
  if (res.ok) {
    ok = false;
    why = "corrupted witness rank was not detected";
  }
  report(6, "1000 certificate audits per family and gamma; mutation caught",
         ok, seconds_since(start), 120.0, why);
}

void criterion_7() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  bool ok = true;
  std::string why;
  for (const Ordinal& gamma : standard_gammas()) {
    SymbolicGraph g(gamma, 0, true);
    ok = ok && capture_sweep(g, 500, rng, why);
    if (!ok) break;
  }
  report(7, "pursuit cop captures 500 random robbers per gamma", ok,
         seconds_since(start), 0, why);
}

void criterion_8() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8);
  SymbolicGraph g(O("w"), 0, true);
  std::vector<CopPolicy> cops = {make_pursuit_cop(g),
                                 make_bound_greedy_cop(g)};
  bool ok = true;
  for (std::size_t k = 1; k <= 20 && ok; ++k) {
    for (int i = 0; i < 100 && ok; ++i) {
      Ordinal a = Ordinal(k + 1) + random_ordinal_below(O("w"), rng);
      Ordinal b = Ordinal(k + 1) + random_ordinal_below(O("w"), rng);
      SymbolicVertex u = SymbolicVertex::grid(std::move(a), std::move(b));
      SymbolicVertex v = random_grid(g, rng);
      while (g.in_closed_neighborhood(u, v)) v = random_grid(g, rng);
      for (const CopPolicy& cop : cops) {
        PlayTrace trace =
            simulate(g, cop, make_budget_robber(g, Ordinal(k - 1)), v, u, k);
        ok = ok && !trace.captured && trace.violations.empty();
      }
    }
  }
  report(8, "budget-k robber survives k cop moves, k = 1..20, both cops", ok,
         seconds_since(start), 0);
}

void criterion_9() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(9);
  bool ok = true;
  std::string why;
  for (const Ordinal& gamma : standard_gammas()) {
    SymbolicGraph g(gamma, 0, false);
    ok = ok && rho(g) == gamma;
    ok = ok && audit_thousand(g, ClaimFamily::AxisX, rng, why);
    ok = ok && audit_thousand(g, ClaimFamily::AxisY, rng, why);
    ok = ok && capture_sweep(g, 500, rng, why);
    if (!ok) break;
  }
  report(9, "diagonal-removed variant: rho, axis audits, and captures", ok,
         seconds_since(start), 0, why);
}

void criterion_10() {
  auto start = std::chrono::steady_clock::now();
  SuiteConfig config = SuiteConfig::defaults();
  config.seed = 0;
  auto strip = [](const Report& r) {
    nlohmann::json j = report_to_json(r);
    j.erase("environment");
    return j.dump(2);
  };
  std::string first = strip(run_suite("all", config));
  std::string second = strip(run_suite("all", config));
  bool ok = !first.empty() && first == second;
  report(10, "verify --suite all --seed 0 is byte-identical across runs", ok,
         seconds_since(start), 0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("all acceptance criteria satisfied\n");
  else
    std::printf("%d acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
