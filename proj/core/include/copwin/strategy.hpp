#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "copwin/symbolic.hpp"

namespace copwin {

/// Raised by strategies and witnesses when the input falls outside the
/// constructive case split; the message names the failing clause.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Phase { ToDiagonal, AxisChase, TailChase, Captured };
std::string phase_name(Phase p);

/// One pursuit move: capture when possible, walk the tail path after a
/// tail-dwelling robber, take the least adjacent diagonal vertex while
/// the robber sits on the diagonal, otherwise chase along the axis
/// matching the robber's larger coordinate.
std::pair<SymbolicVertex, Phase> cop_strategy(const SymbolicGraph& g,
                                              const SymbolicVertex& cop,
                                              const SymbolicVertex& robber,
                                              Phase phase);

/// Escape vertex for a robber defending the budget mu: a vertex of
/// N[u] outside N[v] whose relevant coordinate stays at least mu.
/// Requires mu below the applicable lower bound for (u, v).
SymbolicVertex robber_strategy(const SymbolicGraph& g, const Ordinal& mu,
                               const SymbolicVertex& u,
                               const SymbolicVertex& v);

using CopPolicy = std::function<std::pair<SymbolicVertex, Phase>(
    const SymbolicVertex& cop, const SymbolicVertex& robber, Phase phase)>;
using RobberPolicy = std::function<SymbolicVertex(
    const SymbolicVertex& robber, const SymbolicVertex& cop)>;

CopPolicy make_pursuit_cop(const SymbolicGraph& g);
/// Greedy over eta_bounds of (robber, candidate) with the canonical
/// order as final tie-break; candidates are the pursuit moves plus
/// stay, the origin, and single tail steps.
CopPolicy make_bound_greedy_cop(const SymbolicGraph& g);

RobberPolicy make_stay_robber();
/// Samples candidate moves and prefers those outside the cop's closed
/// neighborhood; deterministic given the seed.
RobberPolicy make_random_robber(const SymbolicGraph& g, std::uint64_t seed);
/// Plays robber_strategy with the budget counting down each move.
RobberPolicy make_budget_robber(const SymbolicGraph& g, Ordinal budget);

struct PlayTrace {
  struct Round {
    SymbolicVertex cop;
    SymbolicVertex robber;
    Phase phase;
  };
  std::vector<Round> rounds;
  /// Chase-phase coordinate of the robber (second coordinate under an
  /// x-axis chase, first under a y-axis chase), recorded while the cop
  /// is ahead on the axis; must strictly decrease.
  std::vector<Ordinal> chase_ranks;
  bool captured = false;
  std::vector<std::string> violations;
};

/// Runs the game cop-move-then-robber-move from distinct starts,
/// validating every emitted move; stops at capture or the round cap.
PlayTrace simulate(const SymbolicGraph& g, const CopPolicy& cop_policy,
                   const RobberPolicy& robber_policy, SymbolicVertex cop,
                   SymbolicVertex robber, std::size_t max_rounds);

}  // namespace copwin
