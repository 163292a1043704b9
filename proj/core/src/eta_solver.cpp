#include "copwin/eta_solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace copwin {

EtaTable eta_all(const FiniteGraph& g) {
  const std::size_t n = g.size();
  const std::size_t words = g.words();
  EtaTable table;
  table.n = n;
  table.values.assign(n * n, EtaTable::kRobberWins);
  if (n == 0) {
    table.eta_g = 0;
    table.rho_g = 0;
    return table;
  }

  // rows[u] holds, as a bit row over cop starts v, the pairs already
  // known cop-win within the current round count.
  std::vector<std::uint64_t> rows(n * words, 0);
  for (std::size_t u = 0; u < n; ++u) {
    rows[u * words + u / 64] |= std::uint64_t{1} << (u % 64);
    table.values[u * n + u] = 0;
  }

  std::vector<std::uint64_t> reach(n * words);  // per robber move x
  std::vector<std::uint64_t> next(words);
  const std::size_t round_cap = n * n + 1;
  for (std::uint32_t k = 1; k <= round_cap; ++k) {
    // reach[x][v] <=> some cop reply y in N[v] has rows[x][y] set.
    std::fill(reach.begin(), reach.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t* rx = rows.data() + x * words;
      for (std::size_t y = 0; y < n; ++y) {
        if (!((rx[y / 64] >> (y % 64)) & 1u)) continue;
        auto ny = g.closed_row(y);
        std::uint64_t* out = reach.data() + x * words;
        for (std::size_t w = 0; w < words; ++w) out[w] |= ny[w];
      }
    }
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      std::fill(next.begin(), next.end(), ~std::uint64_t{0});
      auto nu = g.closed_row(u);
      for (std::size_t x = 0; x < n; ++x) {
        if (!((nu[x / 64] >> (x % 64)) & 1u)) continue;
        const std::uint64_t* rx = reach.data() + x * words;
        for (std::size_t w = 0; w < words; ++w) next[w] &= rx[w];
      }
      std::uint64_t* ru = rows.data() + u * words;
      for (std::size_t w = 0; w < words; ++w) {
        // Monotone by construction: earlier rounds stay settled.
        assert((ru[w] & ~next[w] &
                (w + 1 < words || n % 64 == 0
                     ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << (n % 64)) - 1)) == 0);
        const std::uint64_t fresh = next[w] & ~ru[w];
        if (!fresh) continue;
        changed = true;
        ru[w] |= fresh;
        for (std::size_t b = 0; b < 64; ++b) {
          const std::size_t v = w * 64 + b;
          if (v >= n) break;
          if ((fresh >> b) & 1u) table.values[u * n + v] = k;
        }
      }
    }
    if (!changed) break;
  }

  // eta(v) is the worst case over robber starts; kRobberWins absorbs.
  table.eta_per_cop.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      table.eta_per_cop[v] = std::max(table.eta_per_cop[v],
                                      table.values[u * n + v]);
  table.eta_g = EtaTable::kRobberWins;
  table.rho_g = 0;
  for (std::uint32_t x : table.eta_per_cop) {
    table.eta_g = std::min(table.eta_g, x);
    table.rho_g = std::max(table.rho_g, x);
  }
  return table;
}

std::uint32_t naive_game_value(const FiniteGraph& g, std::size_t u,
                               std::size_t v) {
  const std::size_t n = g.size();
  if (n > 20)
    throw std::invalid_argument("naive_game_value is limited to 20 vertices");
  // av[r][c]: cop starting at c captures a robber starting at r within
  // the current round count, computed layer by layer from below.
  std::vector<std::vector<bool>> av(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < n; ++r) av[r][r] = true;
  if (av[u][v]) return 0;
  const std::size_t cap = n * n + 1;
  for (std::uint32_t k = 1; k <= cap; ++k) {
    auto prev = av;
    bool changed = false;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (prev[r][c]) continue;
        bool all = true;
        for (std::size_t x = 0; x < n && all; ++x) {
          if (x != r && !g.adjacent(r, x)) continue;
          bool any = false;
          for (std::size_t y = 0; y < n && !any; ++y)
            if ((y == c || g.adjacent(c, y)) && prev[x][y]) any = true;
          if (!any) all = false;
        }
        if (all) {
          av[r][c] = true;
          changed = true;
          if (r == u && c == v) return k;
        }
      }
    }
    if (!changed) break;
  }
  return EtaTable::kRobberWins;
}

std::vector<std::size_t> optimal_cop_policy(const FiniteGraph& g,
                                            const EtaTable& table) {
  const std::size_t n = g.size();
  std::vector<std::size_t> policy(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || g.adjacent(u, v)) {
        policy[u * n + v] = u;  // capture now
        continue;
      }
      std::size_t best = v;
      std::uint32_t best_val = EtaTable::kRobberWins;
      for (std::size_t y = 0; y < n; ++y) {
        if (y != v && !g.adjacent(v, y)) continue;
        if (table.at(u, y) < best_val) {
          best_val = table.at(u, y);
          best = y;
        }
      }
      policy[u * n + v] = best;
    }
  }
  return policy;
}

}  // namespace copwin
