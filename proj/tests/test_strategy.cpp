#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copwin/strategy.hpp"

using namespace copwin;

namespace {
Ordinal O(std::string_view text) { return Ordinal::parse(text); }
SymbolicVertex G(std::string_view a, std::string_view b) {
  return SymbolicVertex::grid(O(a), O(b));
}
SymbolicVertex T(std::uint64_t i) { return SymbolicVertex::tail(i); }
}  // namespace

TEST_CASE("cop strategy moves") {
  SymbolicGraph g(O("w"), 0, true);

  // To-diagonal: least diagonal vertex adjacent to the cop.
  auto [to_diag, p1] =
      cop_strategy(g, G("4", "9"), G("2", "2"), Phase::ToDiagonal);
  CHECK(to_diag == G("5", "5"));

  // Axis chase: step past the robber's larger coordinate.
  auto [chase, p2] =
      cop_strategy(g, G("6", "0"), G("9", "4"), Phase::AxisChase);
  CHECK(chase == G("10", "0"));

  // Adjacent robber: capture.
  auto [cap, p3] = cop_strategy(g, G("2", "2"), G("3", "3"), Phase::ToDiagonal);
  CHECK(cap == G("3", "3"));
  CHECK(p3 == Phase::Captured);
}

TEST_CASE("robber strategy escapes") {
  SymbolicGraph g(O("w"), 0, true);
  CHECK(robber_strategy(g, Ordinal(4), G("5", "7"), G("9", "2")) ==
        G("9", "4"));

  SymbolicGraph g2(O("w^2"), 0, true);
  CHECK(robber_strategy(g2, O("w"), G("w", "w"), G("3", "8")) ==
        G("w+1", "w+1"));

  SymbolicGraph gt(O("w"), 1, true);
  CHECK(robber_strategy(gt, Ordinal(6), G("0", "0"), T(1)) == G("6", "6"));
}

TEST_CASE("robber escapes are legal and evade the cop") {
  SymbolicGraph g(O("w*2"), 1, true);
  const SymbolicVertex robbers[] = {G("9", "9"), G("w", "5"), G("6", "w+2")};
  const SymbolicVertex cops[] = {G("3", "0"), G("w", "w"), T(1), G("0", "0")};
  for (const auto& u : robbers)
    for (const auto& v : cops) {
      SymbolicVertex move = robber_strategy(g, Ordinal(3), u, v);
      CHECK(g.in_closed_neighborhood(move, u));
      CHECK(!g.in_closed_neighborhood(move, v));
    }
}

TEST_CASE("stay-put robber is caught from the diagonal") {
  SymbolicGraph g(O("w"), 0, true);
  PlayTrace trace = simulate(g, make_pursuit_cop(g), make_stay_robber(),
                             G("0", "0"), G("3", "3"), 10);
  CHECK(trace.captured);
  CHECK(trace.rounds.size() <= 3);
  CHECK(trace.violations.empty());
}

TEST_CASE("pursuit cop captures a random robber with decreasing chase ranks") {
  SymbolicGraph g(O("w^2"), 0, true);
  PlayTrace trace = simulate(g, make_pursuit_cop(g), make_random_robber(g, 0),
                             G("w", "3"), G("w*2", "w*2"), 10'000);
  CHECK(trace.captured);
  CHECK(trace.violations.empty());
  for (std::size_t i = 1; i < trace.chase_ranks.size(); ++i)
    CHECK(trace.chase_ranks[i] < trace.chase_ranks[i - 1]);
}

TEST_CASE("coinciding starts are rejected") {
  SymbolicGraph g(O("w"), 0, true);
  CHECK_THROWS_AS(simulate(g, make_pursuit_cop(g), make_stay_robber(),
                           G("2", "2"), G("2", "2"), 5),
                  std::invalid_argument);
}

TEST_CASE("budget robber survives its budget") {
  SymbolicGraph g(O("w"), 0, true);
  for (std::size_t k : {1u, 3u, 7u}) {
    PlayTrace trace = simulate(
        g, make_pursuit_cop(g), make_budget_robber(g, Ordinal(k - 1)),
        SymbolicVertex::grid(Ordinal(k + 3), Ordinal(k + 3)),
        SymbolicVertex::grid(Ordinal(k + 1), Ordinal(k + 2)), k);
    CHECK(!trace.captured);
    CHECK(trace.violations.empty());
  }
}

TEST_CASE("greedy cop also wins against a stayer") {
  SymbolicGraph g(O("w"), 1, true);
  PlayTrace trace = simulate(g, make_bound_greedy_cop(g), make_stay_robber(),
                             T(2), G("4", "7"), 50);
  CHECK(trace.captured);
  CHECK(trace.violations.empty());
}

TEST_CASE("phase names are stable") {
  CHECK(phase_name(Phase::ToDiagonal) == "to-diagonal");
  CHECK(phase_name(Phase::AxisChase) == "x-axis-chase");
  CHECK(phase_name(Phase::TailChase) == "tail-chase");
  CHECK(phase_name(Phase::Captured) == "captured");
}
