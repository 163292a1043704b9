#include "copwin/strategy.hpp"

#include <memory>
#include <random>

#include "copwin/sampling.hpp"

namespace copwin {

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::ToDiagonal: return "to-diagonal";
    case Phase::AxisChase: return "x-axis-chase";
    case Phase::TailChase: return "tail-chase";
    case Phase::Captured: return "captured";
  }
  return "?";
}

namespace {

// Path position of a tail-or-origin vertex: T(i) -> i, (0,0) -> 0.
std::uint64_t path_index(const SymbolicVertex& v) {
  return v.is_tail() ? v.tail_index() : 0;
}

SymbolicVertex path_vertex(std::uint64_t index) {
  return index == 0 ? SymbolicVertex::grid(Ordinal(), Ordinal())
                    : SymbolicVertex::tail(index);
}

bool on_path(const SymbolicVertex& v) { return v.is_tail() || v.is_origin(); }

}  // namespace

std::pair<SymbolicVertex, Phase> cop_strategy(const SymbolicGraph& g,
                                              const SymbolicVertex& cop,
                                              const SymbolicVertex& robber,
                                              Phase phase) {
  if (phase == Phase::Captured || cop == robber)
    throw std::invalid_argument("cop_strategy called on a capture state");
  if (g.adjacent(cop, robber)) return {robber, Phase::Captured};

  if (robber.is_tail() || cop.is_tail()) {
    if (on_path(cop)) {
      const std::uint64_t k = path_index(cop);
      const std::uint64_t target = path_index(robber);  // 0 for grid robber
      return {path_vertex(target > k ? k + 1 : k - 1), Phase::TailChase};
    }
    // Grid cop off the path: route toward the origin.
    if (g.adjacent(cop, SymbolicVertex::grid(Ordinal(), Ordinal())))
      return {SymbolicVertex::grid(Ordinal(), Ordinal()), Phase::TailChase};
    return {SymbolicVertex::grid(cop.a().successor(), Ordinal()),
            Phase::TailChase};
  }

  if (g.diagonal_edges() && robber.is_diagonal()) {
    if (auto d = g.least_diagonal_neighbor(cop)) return {*d, Phase::ToDiagonal};
    // No adjacent diagonal vertex: reach the x-axis first; from there
    // the origin (and with it the whole diagonal) is one move away.
    return {SymbolicVertex::grid(ord_max(robber.a(), cop.a()).successor(),
                                 Ordinal()),
            Phase::ToDiagonal};
  }

  const Ordinal& a = robber.a();
  const Ordinal& b = robber.b();
  if (b <= a) {
    Ordinal target = cop.b().is_zero() ? a.successor()
                                       : ord_max(a, cop.a()).successor();
    return {SymbolicVertex::grid(std::move(target), Ordinal()),
            Phase::AxisChase};
  }
  Ordinal target = cop.a().is_zero() ? b.successor()
                                     : ord_max(b, cop.b()).successor();
  return {SymbolicVertex::grid(Ordinal(), std::move(target)),
          Phase::AxisChase};
}

SymbolicVertex robber_strategy(const SymbolicGraph& g, const Ordinal& mu,
                               const SymbolicVertex& u,
                               const SymbolicVertex& v) {
  g.require(u);
  g.require(v);
  if (u == v) throw HypothesisViolation("robber and cop share a vertex");

  auto check = [&](SymbolicVertex move) {
    if (!(move == u) && !g.adjacent(u, move))
      throw HypothesisViolation("escape " + move.str() +
                                " is not a move from " + u.str());
    if (g.in_closed_neighborhood(move, v))
      throw HypothesisViolation("escape " + move.str() +
                                " does not avoid N[" + v.str() + "]");
    return move;
  };

  if (u.is_tail())
    throw HypothesisViolation("no escape lemma covers a tail robber");

  const bool diagonal_hop =
      g.diagonal_edges() && u.is_diagonal() &&
      (v.is_tail() || (v.is_grid() && !v.is_diagonal()));
  if (diagonal_hop) {
    if (v.is_tail()) {
      // (mu, mu) works except against T(1), whose neighborhood holds
      // the origin.
      Ordinal m = mu;
      if (m.is_zero() && v.tail_index() == 1) m = Ordinal(1);
      return check(SymbolicVertex::grid(m, m));
    }
    Ordinal m = mu.successor();
    const Ordinal& lo = ord_min(v.a(), v.b());
    const Ordinal& hi = ord_max(v.a(), v.b());
    if (lo < m && m < hi) m = hi;  // first diagonal point past the cop
    return check(SymbolicVertex::grid(m, m));
  }

  if (v.is_tail())
    return check(
        SymbolicVertex::grid(ord_max(u.a(), mu).successor(), mu));

  const Ordinal& alpha = u.a();
  const Ordinal& beta = u.b();
  const Ordinal& xi = v.a();
  const Ordinal& delta = v.b();
  if (!(mu < alpha) || !(mu < beta))
    throw HypothesisViolation("budget " + mu.str() +
                              " is not below min coordinate of " + u.str());

  if (alpha < xi || delta < beta) {
    if (alpha < xi && !(mu == delta))
      return check(SymbolicVertex::grid(xi, mu));
    if (delta < beta) {
      Ordinal first =
          ord_max(ord_max(alpha, xi), ord_max(mu, delta)).successor();
      Ordinal second = ord_max(mu, delta);
      if (second.is_zero()) second = Ordinal(1);
      return check(SymbolicVertex::grid(std::move(first), std::move(second)));
    }
    throw HypothesisViolation("case split mismatch for u=" + u.str() +
                              " v=" + v.str() + " mu=" + mu.str());
  }
  // Remaining case: xi <= alpha and beta <= delta.
  if (beta < delta && !(mu == xi))
    return check(SymbolicVertex::grid(mu, delta));
  if (xi < alpha) {
    Ordinal first = ord_max(mu, xi);
    Ordinal second = ord_max(ord_max(delta, mu), xi).successor();
    if (first.is_zero()) first = Ordinal(1);
    return check(SymbolicVertex::grid(std::move(first), std::move(second)));
  }
  throw HypothesisViolation("case split mismatch for u=" + u.str() +
                            " v=" + v.str() + " mu=" + mu.str());
}

CopPolicy make_pursuit_cop(const SymbolicGraph& g) {
  return [&g](const SymbolicVertex& cop, const SymbolicVertex& robber,
              Phase phase) { return cop_strategy(g, cop, robber, phase); };
}

CopPolicy make_bound_greedy_cop(const SymbolicGraph& g) {
  return [&g](const SymbolicVertex& cop, const SymbolicVertex& robber,
              Phase phase) -> std::pair<SymbolicVertex, Phase> {
    if (g.adjacent(cop, robber)) return {robber, Phase::Captured};
    std::vector<SymbolicVertex> candidates;
    auto offer = [&](SymbolicVertex m) {
      if (!g.contains(m)) return;
      if (!(m == cop) && !g.adjacent(cop, m)) return;
      for (const auto& c : candidates)
        if (c == m) return;
      candidates.push_back(std::move(m));
    };
    offer(cop);
    offer(SymbolicVertex::grid(Ordinal(), Ordinal()));
    if (auto d = g.least_diagonal_neighbor(cop)) offer(*d);
    if (robber.is_grid()) {
      if (cop.is_grid()) {
        offer(SymbolicVertex::grid(ord_max(robber.a(), cop.a()).successor(),
                                   Ordinal()));
        offer(SymbolicVertex::grid(Ordinal(),
                                   ord_max(robber.b(), cop.b()).successor()));
      }
      offer(SymbolicVertex::grid(robber.a().successor(), Ordinal()));
      offer(SymbolicVertex::grid(Ordinal(), robber.b().successor()));
    }
    if (on_path(cop)) {
      const std::uint64_t k = path_index(cop);
      if (k > 0) offer(path_vertex(k - 1));
      if (k < g.tail_n() + 1 && g.tail_n() > 0) offer(path_vertex(k + 1));
    }
    const SymbolicVertex* best = nullptr;
    OrdinalBound best_bound;
    for (const auto& m : candidates) {
      OrdinalBound bound = eta_bounds(g, robber, m);
      bool better =
          best == nullptr || bound.upper < best_bound.upper ||
          (bound.upper == best_bound.upper &&
           (bound.lower < best_bound.lower ||
            (bound.lower == best_bound.lower && m < *best)));
      if (better) {
        best = &m;
        best_bound = bound;
      }
    }
    Phase next = phase;
    if (best->is_tail() || robber.is_tail())
      next = Phase::TailChase;
    else if (best->is_diagonal() && g.diagonal_edges())
      next = Phase::ToDiagonal;
    else
      next = Phase::AxisChase;
    return {*best, next};
  };
}

RobberPolicy make_stay_robber() {
  return [](const SymbolicVertex& robber, const SymbolicVertex&) {
    return robber;
  };
}

RobberPolicy make_random_robber(const SymbolicGraph& g, std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [&g, rng](const SymbolicVertex& robber, const SymbolicVertex& cop) {
    auto moves = sample_closed_neighborhood(g, robber, cop, *rng, 16);
    std::vector<SymbolicVertex> safe;
    for (const auto& m : moves)
      if (!g.in_closed_neighborhood(m, cop)) safe.push_back(m);
    if (safe.empty()) return robber;  // cornered: stay and be caught
    return safe[std::uniform_int_distribution<std::size_t>(
        0, safe.size() - 1)(*rng)];
  };
}

RobberPolicy make_budget_robber(const SymbolicGraph& g, Ordinal budget) {
  auto remaining = std::make_shared<Ordinal>(std::move(budget));
  return [&g, remaining](const SymbolicVertex& robber,
                         const SymbolicVertex& cop) {
    try {
      SymbolicVertex move = robber_strategy(g, *remaining, robber, cop);
      // Limit budgets stay put (any finite descent fits below them);
      // successor budgets count down.
      if (remaining->is_successor())
        *remaining = remaining->limit_part() +
                     Ordinal(remaining->finite_part() - 1);
      return move;
    } catch (const HypothesisViolation&) {
      return robber;  // budget exhausted or no constructive case
    }
  };
}

PlayTrace simulate(const SymbolicGraph& g, const CopPolicy& cop_policy,
                   const RobberPolicy& robber_policy, SymbolicVertex cop,
                   SymbolicVertex robber, std::size_t max_rounds) {
  g.require(cop);
  g.require(robber);
  if (cop == robber)
    throw std::invalid_argument("cop and robber must start apart");
  PlayTrace trace;
  Phase phase = g.diagonal_edges() ? Phase::ToDiagonal : Phase::AxisChase;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    auto [cop_move, next_phase] = cop_policy(cop, robber, phase);
    if (!(cop_move == cop) && !g.adjacent(cop, cop_move)) {
      trace.violations.push_back("cop move " + cop_move.str() +
                                 " is illegal from " + cop.str());
      return trace;
    }
    cop = cop_move;
    phase = next_phase;
    if (cop == robber) {
      phase = Phase::Captured;
      trace.rounds.push_back({cop, robber, phase});
      trace.captured = true;
      return trace;
    }
    SymbolicVertex robber_move = robber_policy(robber, cop);
    if (!(robber_move == robber) && !g.adjacent(robber, robber_move)) {
      trace.violations.push_back("robber move " + robber_move.str() +
                                 " is illegal from " + robber.str());
      return trace;
    }
    robber = robber_move;
    trace.rounds.push_back({cop, robber, phase});
    if (robber == cop) {
      trace.captured = true;
      trace.rounds.back().phase = Phase::Captured;
      return trace;
    }
    // Chase ranks: the coordinate the pursuit argument drives down,
    // recorded only for genuine escapes (a cornered stay is followed
    // by capture and proves nothing).
    if (phase == Phase::AxisChase && cop.is_grid() && robber.is_grid() &&
        !g.in_closed_neighborhood(robber, cop)) {
      if (cop.b().is_zero() && !cop.a().is_zero() && robber.a() < cop.a())
        trace.chase_ranks.push_back(robber.b());
      else if (cop.a().is_zero() && !cop.b().is_zero() &&
               robber.b() < cop.b())
        trace.chase_ranks.push_back(robber.a());
    }
  }
  return trace;
}

}  // namespace copwin
