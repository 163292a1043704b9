#include "copwin/sampling.hpp"

#include <algorithm>

namespace copwin {

Ordinal random_ordinal_below(const Ordinal& bound, std::mt19937_64& rng) {
  if (bound.is_zero())
    throw OrdinalDomainError("no ordinal lies below zero");
  if (bound.is_finite())
    return Ordinal(std::uniform_int_distribution<std::uint64_t>(
        0, bound.as_natural() - 1)(rng));
  // Small naturals are disproportionately interesting boundary values.
  if (rng() % 4 == 0)
    return Ordinal(std::uniform_int_distribution<std::uint64_t>(0, 12)(rng));

  const auto& terms = bound.terms();
  const std::size_t k = std::uniform_int_distribution<std::size_t>(
      0, terms.size() - 1)(rng);
  std::vector<Ordinal::Term> out(terms.begin(), terms.begin() + k);
  const Ordinal::Term& pivot = terms[k];
  const std::uint64_t coeff = std::uniform_int_distribution<std::uint64_t>(
      0, pivot.coeff - 1)(rng);
  if (coeff > 0) out.push_back({pivot.exponent, coeff});
  Ordinal prefix = Ordinal::from_terms(std::move(out));
  // Pad below the pivot exponent so results are not always clean sums.
  if (!pivot.exponent.is_zero() && rng() % 2 == 0) {
    Ordinal sub_exp = random_ordinal_below(pivot.exponent, rng);
    const std::uint64_t c = 1 + rng() % 3;
    prefix += Ordinal::omega_pow(sub_exp, c);
  }
  if (rng() % 2 == 0) prefix += Ordinal(rng() % 6);
  return prefix;
}

namespace {

void push_unique(std::vector<SymbolicVertex>& out, const SymbolicGraph& g,
                 const SymbolicVertex& u, SymbolicVertex candidate) {
  if (!g.contains(candidate)) return;
  if (!(candidate == u) && !g.adjacent(u, candidate)) return;
  if (std::find(out.begin(), out.end(), candidate) != out.end()) return;
  out.push_back(std::move(candidate));
}

}  // namespace

std::vector<SymbolicVertex> sample_closed_neighborhood(
    const SymbolicGraph& g, const SymbolicVertex& u, const SymbolicVertex& v,
    std::mt19937_64& rng, std::size_t target) {
  std::vector<SymbolicVertex> out;
  out.push_back(u);  // staying put is always a legal robber move

  if (u.is_tail()) {
    const std::uint64_t i = u.tail_index();
    push_unique(out, g, u,
                i == 1 ? SymbolicVertex::grid(Ordinal(), Ordinal())
                       : SymbolicVertex::tail(i - 1));
    if (i <= g.tail_n()) push_unique(out, g, u, SymbolicVertex::tail(i + 1));
    return out;
  }

  const Ordinal& gamma = g.gamma();
  std::vector<Ordinal> strata{Ordinal(0), Ordinal(1), Ordinal(2),
                              Ordinal::omega(), Ordinal::omega() + Ordinal(1)};
  auto add_stratum = [&](const Ordinal& o) {
    strata.push_back(o);
    strata.push_back(o.successor());
  };
  add_stratum(u.a());
  add_stratum(u.b());
  if (v.is_grid()) {
    add_stratum(v.a());
    add_stratum(v.b());
  }

  auto consider = [&](Ordinal a, Ordinal b) {
    if (a < gamma && b < gamma)
      push_unique(out, g, u, SymbolicVertex::grid(std::move(a), std::move(b)));
  };

  if (u.is_origin() && g.tail_n() > 0)
    push_unique(out, g, u, SymbolicVertex::tail(1));
  for (const Ordinal& s : strata) {
    if (u.a().is_zero()) consider(Ordinal(), s);
    if (u.b().is_zero()) consider(s, Ordinal());
    if (g.diagonal_edges() && u.is_diagonal()) consider(s, s);
    // Anti-monotone in both directions around u.
    consider(u.a() + Ordinal(1) + s, s);  // right-and-down needs s < b
    consider(s, u.b() + Ordinal(1) + s);  // left-and-up needs s < a
  }
  // Random fill until the target count (or until progress stalls).
  std::size_t stall = 0;
  while (out.size() < target && stall < 4 * target + 16) {
    ++stall;
    const std::size_t before = out.size();
    Ordinal r0 = random_ordinal_below(gamma, rng);
    Ordinal r1 = random_ordinal_below(gamma, rng);
    switch (rng() % 4) {
      case 0:
        consider(u.a() + Ordinal(1) + r0, r1);
        break;
      case 1:
        consider(r0, u.b() + Ordinal(1) + r1);
        break;
      case 2:
        if (g.diagonal_edges() && u.is_diagonal()) consider(r0, r0);
        if (u.a().is_zero()) consider(Ordinal(), r0);
        break;
      default:
        if (u.b().is_zero()) consider(r0, Ordinal());
        consider(u.a() + Ordinal(1) + r0, Ordinal(r1.is_zero() ? 0 : 1));
        break;
    }
    if (out.size() > before) stall = 0;
  }
  return out;
}

}  // namespace copwin
