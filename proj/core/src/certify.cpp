#include "copwin/certify.hpp"

#include <algorithm>

#include "copwin/sampling.hpp"

namespace copwin {

std::string claim_family_name(ClaimFamily f) {
  switch (f) {
    case ClaimFamily::AxisX: return "axis-x";
    case ClaimFamily::AxisY: return "axis-y";
    case ClaimFamily::DiagonalPair: return "diagonal";
    case ClaimFamily::GridAssembly: return "assembly";
    case ClaimFamily::TailDiagonal: return "tail-diagonal";
    case ClaimFamily::GridCop: return "grid-cop";
    case ClaimFamily::TailCop: return "tail-cop";
  }
  return "?";
}

std::optional<ClaimFamily> claim_family_from_name(std::string_view name) {
  for (ClaimFamily f :
       {ClaimFamily::AxisX, ClaimFamily::AxisY, ClaimFamily::DiagonalPair,
        ClaimFamily::GridAssembly, ClaimFamily::TailDiagonal,
        ClaimFamily::GridCop, ClaimFamily::TailCop})
    if (claim_family_name(f) == name) return f;
  return std::nullopt;
}

namespace {

// Internal routing of a claim to the proof case whose witness map
// handles it.
enum class Shape {
  Equality,
  AxisX,
  AxisY,
  DiagonalPair,
  Assembly,
  OriginCop,
  TailPath,        // both players on the attached path, cop below
  TailVsDiagonal,  // tail robber against a diagonal cop
  TailCop          // cop on the path, robber anywhere above
};

std::uint64_t path_index(const SymbolicVertex& v) {
  return v.is_tail() ? v.tail_index() : 0;
}

bool on_path(const SymbolicVertex& v) { return v.is_tail() || v.is_origin(); }

SymbolicVertex path_vertex(std::uint64_t index) {
  return index == 0 ? SymbolicVertex::grid(Ordinal(), Ordinal())
                    : SymbolicVertex::tail(index);
}

SymbolicVertex origin() {
  return SymbolicVertex::grid(Ordinal(), Ordinal());
}

Shape classify(const SymbolicGraph& g, const SymbolicVertex& u,
               const SymbolicVertex& v) {
  if (u == v) return Shape::Equality;
  if (v.is_tail()) {
    if (u.is_tail() && u.tail_index() > v.tail_index()) return Shape::TailPath;
    return Shape::TailCop;
  }
  if (u.is_tail()) {
    if (v.is_origin()) return Shape::TailPath;
    if (g.diagonal_edges() && v.is_diagonal()) return Shape::TailVsDiagonal;
    return Shape::Assembly;
  }
  if (g.diagonal_edges() && u.is_diagonal() && v.is_diagonal())
    return Shape::DiagonalPair;
  const bool below = g.diagonal_edges() ? u.b() < u.a() : u.b() <= u.a();
  const bool above = g.diagonal_edges() ? u.a() < u.b() : u.a() <= u.b();
  if (v.b().is_zero() && !v.a().is_zero() && below && u.a() < v.a())
    return Shape::AxisX;
  if (v.a().is_zero() && !v.b().is_zero() && above && u.b() < v.b())
    return Shape::AxisY;
  if (v.is_origin()) return Shape::OriginCop;
  return Shape::Assembly;
}

SymbolicVertex require_diagonal_reply(const SymbolicGraph& g,
                                      const SymbolicVertex& v) {
  if (g.diagonal_edges() && v.is_diagonal()) return v;
  if (auto d = g.least_diagonal_neighbor(v)) return *d;
  throw HypothesisViolation(
      "cop vertex " + v.str() +
      " has no diagonal vertex in its closed neighborhood");
}

// Least x-axis reply in N[v] strictly beyond `past`.
SymbolicVertex x_axis_reply(const SymbolicVertex& v, const Ordinal& past) {
  if (v.b().is_zero()) return SymbolicVertex::grid(past.successor(), Ordinal());
  return SymbolicVertex::grid(ord_max(past, v.a()).successor(), Ordinal());
}

SymbolicVertex y_axis_reply(const SymbolicVertex& v, const Ordinal& past) {
  if (v.a().is_zero()) return SymbolicVertex::grid(Ordinal(), past.successor());
  return SymbolicVertex::grid(Ordinal(), ord_max(past, v.b()).successor());
}

std::pair<SymbolicVertex, Ordinal> witness_for_shape(const SymbolicGraph& g,
                                                     Shape shape,
                                                     const SymbolicVertex& u,
                                                     const SymbolicVertex& v,
                                                     const SymbolicVertex& x) {
  if (g.in_closed_neighborhood(x, v)) return {x, Ordinal()};
  const std::uint64_t n = g.tail_n();

  switch (shape) {
    case Shape::Equality:
      throw HypothesisViolation("challenge " + x.str() +
                                " escapes an equality claim");

    case Shape::AxisX: {
      if (!x.is_grid())
        throw HypothesisViolation("tail challenge in the x-axis case");
      const Ordinal& a0 = x.a();
      const Ordinal& b0 = x.b();
      if (a0 < v.a() || b0.is_zero())
        throw HypothesisViolation("challenge " + x.str() +
                                  " violates the x-axis case analysis");
      return {SymbolicVertex::grid(a0.successor(), Ordinal()),
              ord_max(Ordinal(1), b0)};
    }

    case Shape::AxisY: {
      if (!x.is_grid())
        throw HypothesisViolation("tail challenge in the y-axis case");
      const Ordinal& a0 = x.a();
      const Ordinal& b0 = x.b();
      if (b0 < v.b() || a0.is_zero())
        throw HypothesisViolation("challenge " + x.str() +
                                  " violates the y-axis case analysis");
      return {SymbolicVertex::grid(Ordinal(), b0.successor()),
              ord_max(Ordinal(1), a0)};
    }

    case Shape::DiagonalPair: {
      if (x.is_tail())  // robber slipped from (0,0) onto the path
        return {origin() == v ? v : origin(), Ordinal(n + 1)};
      const Ordinal& a0 = x.a();
      const Ordinal& b0 = x.b();
      Ordinal delta = ord_max(Ordinal(1), ord_min(a0, b0));
      if (b0 < u.a() && u.a() < a0) return {x_axis_reply(v, a0), delta};
      if (a0 < u.a() && u.a() < b0) return {y_axis_reply(v, b0), delta};
      // Low diagonal starts: axis escapes are dominated one move out.
      if (u.a() <= Ordinal(1)) {
        if (b0.is_zero() && !a0.is_zero())
          return {x_axis_reply(v, a0), Ordinal(1)};
        if (a0.is_zero() && !b0.is_zero())
          return {y_axis_reply(v, b0), Ordinal(1)};
      }
      throw HypothesisViolation("challenge " + x.str() +
                                " violates the diagonal case analysis");
    }

    case Shape::TailVsDiagonal:
      // Any escape along the path is met by regrouping at the origin.
      return {origin() == v ? v : origin(), Ordinal(n + 1)};

    case Shape::TailPath: {
      const std::uint64_t k = path_index(v);
      if (!on_path(x) || path_index(x) <= k + 1)
        throw HypothesisViolation("challenge " + x.str() +
                                  " violates the path chase analysis");
      return {path_vertex(k + 1), Ordinal(n - k)};
    }

    case Shape::TailCop: {
      const std::uint64_t i = v.tail_index();
      if (i == 1) {
        Ordinal delta =
            x.is_grid() ? ord_max(x.a(), x.b()) + Ordinal(2) : Ordinal(n + 1);
        return {origin(), std::move(delta)};
      }
      return {SymbolicVertex::tail(i - 1), g.gamma() + Ordinal(i - 2)};
    }

    case Shape::OriginCop: {
      if (!x.is_grid())
        throw HypothesisViolation("tail challenge against the origin cop");
      const Ordinal& a0 = x.a();
      const Ordinal& b0 = x.b();
      if (x.is_diagonal())  // in N[v] when the diagonal clique exists
        throw HypothesisViolation(
            "diagonal challenge against the origin without diagonal edges");
      Ordinal delta = ord_min(a0, b0).successor();
      if (b0 < a0)
        return {SymbolicVertex::grid(ord_max(a0, b0).successor(), Ordinal()),
                std::move(delta)};
      return {SymbolicVertex::grid(Ordinal(), ord_max(a0, b0).successor()),
              std::move(delta)};
    }

    case Shape::Assembly: {
      if (x.is_tail())  // u = T(1) or the origin; regroup on the diagonal
        return {require_diagonal_reply(g, v), Ordinal(n + 2)};
      const Ordinal& a0 = x.a();
      const Ordinal& b0 = x.b();
      if (x.is_diagonal()) {
        if (g.diagonal_edges())
          return {require_diagonal_reply(g, v),
                  a0 + Ordinal(n > 0 ? n + 2 : 2)};
        // Variant graph: the extended axis case absorbs the diagonal.
        return {x_axis_reply(v, a0), a0.successor()};
      }
      Ordinal delta = ord_min(a0, b0).successor();
      if (b0 < a0) return {x_axis_reply(v, a0), std::move(delta)};
      return {y_axis_reply(v, b0), std::move(delta)};
    }
  }
  throw HypothesisViolation("unhandled claim shape");
}

class Auditor {
 public:
  Auditor(const SymbolicGraph& g, const CertifyOptions& opts,
          std::uint64_t seed)
      : g_(g), opts_(opts), rng_(seed) {}

  CertifyResult run(const Claim& claim) {
    CertifyResult result;
    result.certificate = std::make_unique<CertificateNode>();
    result.certificate->claim = claim;
    try {
      descend(*result.certificate, 0);
      result.ok = true;
    } catch (const HypothesisViolation& e) {
      result.violation = e.what();
    }
    result.stats = stats_;
    return result;
  }

 private:
  void descend(CertificateNode& node, std::size_t depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (++stats_.total_steps > opts_.step_budget)
      throw HypothesisViolation(
          "step budget exceeded (descent failed to shrink)");
    const SymbolicVertex& u = node.claim.u;
    const SymbolicVertex& v = node.claim.v;
    if (u == v) return;  // equality leaf, valid at any rank
    if (node.claim.rank.is_zero())
      throw HypothesisViolation("rank-0 claim between distinct vertices " +
                                u.str() + " and " + v.str());
    const Shape shape = classify(g_, u, v);

    const std::size_t want = depth == 0 ? opts_.root_samples
                             : depth <= opts_.deep_depth ? opts_.child_samples
                                                         : 1;
    auto challenges = pick_challenges(u, v, want);
    for (const SymbolicVertex& x : challenges) {
      ++stats_.challenges;
      if (g_.in_closed_neighborhood(x, v)) {
        node.steps.push_back({x, x, Ordinal(), nullptr});
        continue;
      }
      auto [y, delta] = witness_for_shape(g_, shape, u, v, x);
      if (opts_.tamper) opts_.tamper(y, delta, depth);
      if (!g_.in_closed_neighborhood(y, v))
        throw HypothesisViolation("witness " + y.str() + " for challenge " +
                                  x.str() + " is outside N[" + v.str() + "]");
      if (!(delta < node.claim.rank))
        throw HypothesisViolation(
            "witness rank " + delta.str() + " does not decrease below " +
            node.claim.rank.str() + " at challenge " + x.str());
      auto child = std::make_unique<CertificateNode>();
      child->claim = {x, y, delta};
      descend(*child, depth + 1);
      node.steps.push_back({x, y, std::move(delta), std::move(child)});
    }
  }

  std::vector<SymbolicVertex> pick_challenges(const SymbolicVertex& u,
                                              const SymbolicVertex& v,
                                              std::size_t want) {
    auto pool = sample_closed_neighborhood(g_, u, v, rng_,
                                           std::max<std::size_t>(want, 8));
    if (pool.size() <= want) return pool;
    // Escaping challenges are the ones that exercise the witness map;
    // keep them first, then pad with in-neighborhood leaves.
    std::vector<SymbolicVertex> adversarial, tame;
    for (auto& x : pool)
      (g_.in_closed_neighborhood(x, v) ? tame : adversarial)
          .push_back(std::move(x));
    std::shuffle(adversarial.begin(), adversarial.end(), rng_);
    std::shuffle(tame.begin(), tame.end(), rng_);
    std::vector<SymbolicVertex> out;
    for (auto& x : adversarial) {
      if (out.size() == want) break;
      out.push_back(std::move(x));
    }
    for (auto& x : tame) {
      if (out.size() == want) break;
      out.push_back(std::move(x));
    }
    return out;
  }

  const SymbolicGraph& g_;
  CertifyOptions opts_;
  std::mt19937_64 rng_;
  DescentStats stats_;
};

}  // namespace

std::pair<SymbolicVertex, Ordinal> witness(const SymbolicGraph& g,
                                           ClaimFamily family,
                                           const SymbolicVertex& u,
                                           const SymbolicVertex& v,
                                           const SymbolicVertex& x) {
  g.require(u);
  g.require(v);
  g.require(x);
  if (!g.in_closed_neighborhood(x, u))
    throw HypothesisViolation("challenge " + x.str() + " is not in N[" +
                              u.str() + "]");
  (void)family;  // the claim shape is determined by the positions
  return witness_for_shape(g, classify(g, u, v), u, v, x);
}

CertifyResult certify(const SymbolicGraph& g, const Claim& claim,
                      ClaimFamily family, std::uint64_t seed,
                      const CertifyOptions& options) {
  g.require(claim.u);
  g.require(claim.v);
  (void)family;
  return Auditor(g, options, seed).run(claim);
}

namespace {

// base + (1 + jitter), rejected back to a small step if it escapes
// gamma.
Ordinal bump_below(const Ordinal& base, const Ordinal& gamma,
                   std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    Ordinal candidate =
        base + Ordinal(1) + random_ordinal_below(gamma, rng);
    if (candidate < gamma) return candidate;
  }
  return base + Ordinal(1 + rng() % 6);
}

}  // namespace

Claim make_family_claim(const SymbolicGraph& g, ClaimFamily family,
                        std::mt19937_64& rng) {
  const Ordinal& gamma = g.gamma();
  auto rand_ord = [&] { return random_ordinal_below(gamma, rng); };
  auto good_cop = [&] {
    // A cop vertex whose closed neighborhood reaches the diagonal; the
    // (a, a+1)-shaped vertices fall outside the assembly argument.
    for (;;) {
      SymbolicVertex v = SymbolicVertex::grid(rand_ord(), rand_ord());
      if (!g.diagonal_edges() || g.least_diagonal_neighbor(v)) return v;
    }
  };

  switch (family) {
    case ClaimFamily::AxisX: {
      Ordinal b = rand_ord();
      // Without the diagonal clique the axis case also covers b == a.
      Ordinal a = (!g.diagonal_edges() && rng() % 3 == 0)
                      ? b
                      : bump_below(b, gamma, rng);
      Ordinal xi = bump_below(a, gamma, rng);
      Ordinal rank = b.successor();
      return {SymbolicVertex::grid(std::move(a), std::move(b)),
              SymbolicVertex::grid(std::move(xi), Ordinal()),
              std::move(rank)};
    }
    case ClaimFamily::AxisY: {
      Ordinal a = rand_ord();
      Ordinal b = (!g.diagonal_edges() && rng() % 3 == 0)
                      ? a
                      : bump_below(a, gamma, rng);
      Ordinal xi = bump_below(b, gamma, rng);
      Ordinal rank = a.successor();
      return {SymbolicVertex::grid(std::move(a), std::move(b)),
              SymbolicVertex::grid(Ordinal(), std::move(xi)),
              std::move(rank)};
    }
    case ClaimFamily::DiagonalPair:
    case ClaimFamily::TailDiagonal: {
      Ordinal a = rand_ord();
      Ordinal xi = rand_ord();
      while (xi == a) xi = rand_ord();
      Ordinal rank = a + Ordinal(g.tail_n() > 0 ? g.tail_n() + 2 : 2);
      return {SymbolicVertex::grid(a, a), SymbolicVertex::grid(xi, xi),
              std::move(rank)};
    }
    case ClaimFamily::GridAssembly: {
      SymbolicVertex u = SymbolicVertex::grid(rand_ord(), rand_ord());
      SymbolicVertex v = good_cop();
      while (v == u) v = good_cop();
      return {std::move(u), std::move(v), gamma};
    }
    case ClaimFamily::GridCop: {
      SymbolicVertex u =
          (g.tail_n() > 0 && rng() % 3 == 0)
              ? SymbolicVertex::tail(1 + rng() % (g.tail_n() + 1))
              : SymbolicVertex::grid(rand_ord(), rand_ord());
      SymbolicVertex v = good_cop();
      while (v == u) v = good_cop();
      return {std::move(u), std::move(v), gamma + Ordinal(1)};
    }
    case ClaimFamily::TailCop: {
      const std::uint64_t i = 1 + rng() % (g.tail_n() + 1);
      SymbolicVertex u = SymbolicVertex::grid(rand_ord(), rand_ord());
      return {std::move(u), SymbolicVertex::tail(i),
              gamma + Ordinal(i - 1)};
    }
  }
  throw HypothesisViolation("unknown claim family");
}

}  // namespace copwin
