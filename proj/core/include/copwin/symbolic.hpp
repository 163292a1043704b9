#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "copwin/ordinal.hpp"

namespace copwin {

/// Vertex of the ordinal grid graph: either a grid point (a, b) with
/// both coordinates below gamma, or the i-th tail vertex (-i, 0).
class SymbolicVertex {
 public:
  SymbolicVertex() : data_(Grid{Ordinal(), Ordinal()}) {}

  static SymbolicVertex grid(Ordinal a, Ordinal b) {
    return SymbolicVertex(Grid{std::move(a), std::move(b)});
  }
  static SymbolicVertex tail(std::uint64_t i) {
    if (i == 0) throw OrdinalDomainError("tail indices start at 1");
    return SymbolicVertex(Tail{i});
  }

  bool is_grid() const noexcept { return std::holds_alternative<Grid>(data_); }
  bool is_tail() const noexcept { return !is_grid(); }

  const Ordinal& a() const { return std::get<Grid>(data_).a; }
  const Ordinal& b() const { return std::get<Grid>(data_).b; }
  std::uint64_t tail_index() const { return std::get<Tail>(data_).i; }

  bool is_diagonal() const { return is_grid() && a() == b(); }
  bool is_origin() const { return is_grid() && a().is_zero() && b().is_zero(); }

  /// Grammar: "(a,b)" with ordinal components, or "T(i)".
  static SymbolicVertex parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const SymbolicVertex& x,
                         const SymbolicVertex& y) = default;
  /// Canonical order used for every least-vertex tie-break: tail
  /// vertices descending by index first, then grid lexicographic.
  friend std::strong_ordering operator<=>(const SymbolicVertex& x,
                                          const SymbolicVertex& y);

 private:
  struct Grid {
    Ordinal a, b;
    friend bool operator==(const Grid&, const Grid&) = default;
  };
  struct Tail {
    std::uint64_t i;
    friend bool operator==(const Tail&, const Tail&) = default;
  };
  explicit SymbolicVertex(Grid g) : data_(std::move(g)) {}
  explicit SymbolicVertex(Tail t) : data_(std::move(t)) {}
  std::variant<Grid, Tail> data_;
};

/// The grid graph over gamma x gamma, with an optional attached path of
/// tail_n + 1 vertices at the origin (tail_n >= 1) and an optional
/// diagonal clique. The diagonal-removed variant is only defined
/// without a tail.
class SymbolicGraph {
 public:
  SymbolicGraph(Ordinal gamma, std::uint64_t tail_n = 0,
                bool diagonal_edges = true);

  const Ordinal& gamma() const noexcept { return gamma_; }
  std::uint64_t tail_n() const noexcept { return tail_n_; }
  bool diagonal_edges() const noexcept { return diagonal_; }

  bool contains(const SymbolicVertex& v) const;
  void require(const SymbolicVertex& v) const;

  bool adjacent(const SymbolicVertex& u, const SymbolicVertex& v) const;
  bool in_closed_neighborhood(const SymbolicVertex& x,
                              const SymbolicVertex& v) const;

  /// Least diagonal vertex in N[v] under the canonical order, if any.
  /// Off-diagonal, off-axis vertices (a, b) with |a - b| = 1 have none;
  /// that gap is what the hypothesis-violation paths report.
  std::optional<SymbolicVertex> least_diagonal_neighbor(
      const SymbolicVertex& v) const;

 private:
  Ordinal gamma_;
  std::uint64_t tail_n_;
  bool diagonal_;
};

struct OrdinalBound {
  Ordinal lower;
  Ordinal upper;
  bool exact = false;
};

/// Tightest interval for eta(u, v) assembled from the closed-form case
/// bounds; exact only where the bounds pin equality.
OrdinalBound eta_bounds(const SymbolicGraph& g, const SymbolicVertex& u,
                        const SymbolicVertex& v);

/// Maximum capture time: gamma + tail_n.
Ordinal rho(const SymbolicGraph& g);

}  // namespace copwin
