#pragma once

#include <cstdint>
#include <vector>

#include "copwin/finite_graph.hpp"

namespace copwin {

/// Capture-time table for a finite graph. values is u-major: the entry
/// for robber start u and cop start v sits at u*n+v. kRobberWins marks
/// pairs the cop never wins from.
struct EtaTable {
  static constexpr std::uint32_t kRobberWins = UINT32_MAX;

  std::size_t n = 0;
  std::vector<std::uint32_t> values;       // n*n, u-major
  std::vector<std::uint32_t> eta_per_cop;  // eta(v) = max over robber starts
  std::uint32_t eta_g = kRobberWins;       // min over v of eta_per_cop
  std::uint32_t rho_g = kRobberWins;       // max over v of eta_per_cop

  std::uint32_t at(std::size_t u, std::size_t v) const {
    return values[u * n + v];
  }
  /// Some cop start catches every robber start.
  bool cop_win() const {
    for (std::uint32_t x : eta_per_cop)
      if (x != kRobberWins) return true;
    return false;
  }
};

/// Solves eta(u, v) for every start pair by iterating the k-step
/// relations from below with dense bit rows. Terminates after at most
/// n^2 rounds (the relation chain stabilizes no later than that).
EtaTable eta_all(const FiniteGraph& g);

/// Independent reference solver for tiny graphs (|V| <= 12): layered
/// game-value recursion with no bitset machinery, used to cross-check
/// eta_all. Returns EtaTable::kRobberWins when the cop never captures.
std::uint32_t naive_game_value(const FiniteGraph& g, std::size_t u,
                               std::size_t v);

/// For each (u, v) with a finite value, a cop reply y in N[v] attaining
/// the minimum in eta(u,v) = 1 + max_x min_y eta(x,y); smallest vertex
/// index among the minimizers. Entries for robber-win pairs and for
/// v with u in N[v] (immediate capture: stay... move onto u) hold the
/// capturing vertex u itself when adjacent, otherwise v.
std::vector<std::size_t> optimal_cop_policy(const FiniteGraph& g,
                                            const EtaTable& table);

}  // namespace copwin
