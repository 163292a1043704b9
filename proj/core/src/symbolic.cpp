#include "copwin/symbolic.hpp"

#include <stdexcept>

namespace copwin {

namespace {

std::uint64_t parse_tail_index(std::string_view text) {
  // text is everything between "T(" and ")".
  std::uint64_t value = 0;
  if (text.empty()) throw OrdinalParseError("expected a tail index", 2);
  for (char c : text) {
    if (c < '0' || c > '9')
      throw OrdinalParseError("tail index must be a natural number", 2);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

}  // namespace

SymbolicVertex SymbolicVertex::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  text = text.substr(begin, end - begin);
  if (text.size() >= 3 && (text[0] == 'T' || text[0] == 't') &&
      text[1] == '(' && text.back() == ')')
    return tail(parse_tail_index(text.substr(2, text.size() - 3)));
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    std::string_view inner = text.substr(1, text.size() - 2);
    // The ordinal grammar has no commas, so the first one splits.
    auto comma = inner.find(',');
    if (comma == std::string_view::npos)
      throw OrdinalParseError("expected ',' between grid coordinates",
                              begin + 1);
    return grid(Ordinal::parse(inner.substr(0, comma)),
                Ordinal::parse(inner.substr(comma + 1)));
  }
  throw OrdinalParseError("expected a vertex '(a,b)' or 'T(i)'", begin);
}

std::string SymbolicVertex::str() const {
  if (is_tail()) return "T(" + std::to_string(tail_index()) + ")";
  return "(" + a().str() + "," + b().str() + ")";
}

std::strong_ordering operator<=>(const SymbolicVertex& x,
                                 const SymbolicVertex& y) {
  if (x.is_tail() != y.is_tail())
    return x.is_tail() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  if (x.is_tail()) return y.tail_index() <=> x.tail_index();  // descending
  auto c = x.a() <=> y.a();
  return c != 0 ? c : x.b() <=> y.b();
}

SymbolicGraph::SymbolicGraph(Ordinal gamma, std::uint64_t tail_n,
                             bool diagonal_edges)
    : gamma_(std::move(gamma)), tail_n_(tail_n), diagonal_(diagonal_edges) {
  if (!gamma_.is_limit() || gamma_ < Ordinal::omega())
    throw OrdinalDomainError("gamma must be an infinite limit ordinal");
  if (!diagonal_ && tail_n_ > 0)
    throw OrdinalDomainError(
        "the diagonal-removed variant is only defined without a tail");
}

bool SymbolicGraph::contains(const SymbolicVertex& v) const {
  if (v.is_tail()) return tail_n_ > 0 && v.tail_index() <= tail_n_ + 1;
  return v.a() < gamma_ && v.b() < gamma_;
}

void SymbolicGraph::require(const SymbolicVertex& v) const {
  if (!contains(v))
    throw OrdinalDomainError("vertex " + v.str() + " is not in the graph");
}

bool SymbolicGraph::adjacent(const SymbolicVertex& u,
                             const SymbolicVertex& v) const {
  require(u);
  require(v);
  if (u == v) return false;
  if (u.is_tail() && v.is_tail()) {
    std::uint64_t i = u.tail_index(), j = v.tail_index();
    return i + 1 == j || j + 1 == i;
  }
  if (u.is_tail() || v.is_tail()) {
    const SymbolicVertex& t = u.is_tail() ? u : v;
    const SymbolicVertex& g = u.is_tail() ? v : u;
    return t.tail_index() == 1 && g.is_origin();
  }
  if (u.a().is_zero() && v.a().is_zero()) return true;
  if (u.b().is_zero() && v.b().is_zero()) return true;
  if (diagonal_ && u.is_diagonal() && v.is_diagonal()) return true;
  if (u.a() < v.a() && u.b() > v.b()) return true;
  if (u.a() > v.a() && u.b() < v.b()) return true;
  return false;
}

bool SymbolicGraph::in_closed_neighborhood(const SymbolicVertex& x,
                                           const SymbolicVertex& v) const {
  return x == v || adjacent(x, v);
}

std::optional<SymbolicVertex> SymbolicGraph::least_diagonal_neighbor(
    const SymbolicVertex& v) const {
  if (!diagonal_) return std::nullopt;
  if (v.is_tail())
    return v.tail_index() == 1
               ? std::optional(SymbolicVertex::grid(Ordinal(), Ordinal()))
               : std::nullopt;
  // The origin sits on the diagonal clique and on both axis cliques, so
  // every diagonal or axis vertex sees (0,0).
  if (v.is_diagonal() || v.a().is_zero() || v.b().is_zero())
    return SymbolicVertex::grid(Ordinal(), Ordinal());
  const Ordinal& lo = ord_min(v.a(), v.b());
  const Ordinal& hi = ord_max(v.a(), v.b());
  Ordinal m = lo.successor();
  if (m < hi) return SymbolicVertex::grid(m, m);
  return std::nullopt;  // (a, a+1) and (a+1, a) see no diagonal vertex
}

namespace {

Ordinal lower_min_rule(const SymbolicVertex& u) {
  // min(a, b), floored at 1 because distinct vertices need one move.
  return ord_max(Ordinal(1), ord_min(u.a(), u.b()));
}

}  // namespace

OrdinalBound eta_bounds(const SymbolicGraph& g, const SymbolicVertex& u,
                        const SymbolicVertex& v) {
  g.require(u);
  g.require(v);
  const Ordinal& gamma = g.gamma();
  const std::uint64_t n = g.tail_n();
  if (u == v) return {Ordinal(), Ordinal(), true};

  auto finish = [](Ordinal lower, Ordinal upper) {
    if (upper < lower)
      throw OrdinalDomainError("eta bound assembly produced lower > upper");
    bool exact = lower == upper;
    return OrdinalBound{std::move(lower), std::move(upper), exact};
  };

  if (v.is_tail()) {
    const std::uint64_t j = v.tail_index();
    if (u.is_tail()) {
      const std::uint64_t i = u.tail_index();
      if (i < j)  // robber deeper toward the grid than the cop
        return finish(gamma + Ordinal(i), gamma + Ordinal(j - 1));
      // Cop between robber and grid: robber is cornered on the path.
      return finish(Ordinal(1), Ordinal(n + 1 - j));
    }
    if (u.is_origin())  // the path's index-0 endpoint
      return finish(gamma, gamma + Ordinal(j - 1));
    return finish(lower_min_rule(u), gamma + Ordinal(j - 1));
  }

  if (u.is_tail()) {
    const std::uint64_t i = u.tail_index();
    if (v.is_origin()) return finish(Ordinal(1), Ordinal(n + 1));
    if (i == 1) return finish(Ordinal(1), gamma + Ordinal(1));
    // Deeper tail robbers are caught in finite time provided the cop
    // can step to a diagonal vertex; otherwise only the generic bound
    // applies.
    if (g.least_diagonal_neighbor(v))
      return finish(Ordinal(1), Ordinal(n + 3));
    return finish(Ordinal(1), gamma + Ordinal(1));
  }

  // Both on the grid.
  if (g.diagonal_edges() && u.is_diagonal()) {
    if (v.is_diagonal()) {
      Ordinal upper = u.a() + Ordinal(n > 0 ? n + 2 : 2);
      return finish(lower_min_rule(u), std::move(upper));
    }
    return finish(gamma, gamma);  // exact for every off-diagonal cop
  }
  const Ordinal& a = u.a();
  const Ordinal& b = u.b();
  const bool strict = g.diagonal_edges();
  if (v.b().is_zero() && !v.a().is_zero() &&
      (strict ? b < a : b <= a) && a < v.a())
    return finish(lower_min_rule(u), b.successor());
  if (v.a().is_zero() && !v.b().is_zero() &&
      (strict ? a < b : a <= b) && b < v.b())
    return finish(lower_min_rule(u), a.successor());
  if (v.is_origin() && g.diagonal_edges())
    return finish(lower_min_rule(u), ord_max(a, b) + Ordinal(2));
  return finish(lower_min_rule(u), gamma);
}

Ordinal rho(const SymbolicGraph& g) {
  return g.gamma() + Ordinal(g.tail_n());
}

}  // namespace copwin
