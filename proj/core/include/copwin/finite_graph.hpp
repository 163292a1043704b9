#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace copwin {

/// Undirected simple graph over indexed vertices with dense bit-row
/// adjacency, so neighborhood sweeps cost O(n/64) words per row.
class FiniteGraph {
 public:
  explicit FiniteGraph(std::size_t vertex_count,
                       std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;

  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Index for a label; falls back to numeric indices for unnamed graphs.
  std::optional<std::size_t> find_vertex(const std::string& label) const;

  /// Bit row of N[v] = {v} together with v's neighbors.
  std::span<const std::uint64_t> closed_row(std::size_t v) const;
  std::vector<std::size_t> closed_neighborhood(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t degree(std::size_t v) const;

  /// True iff N[x] is contained in N[y].
  bool dominates(std::size_t y, std::size_t x) const;

 private:
  void check_index(std::size_t v) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> open_rows_;    // adjacency without the vertex
  std::vector<std::uint64_t> closed_rows_;  // adjacency with the vertex
};

/// Elimination order witnessing constructibility: each listed vertex is
/// dominated by a surviving vertex at its removal time, the final entry
/// is the surviving vertex. nullopt when no dominated vertex exists at
/// some stage. Ties broken toward the smallest vertex index.
std::optional<std::vector<std::size_t>> dismantle(const FiniteGraph& g);

}  // namespace copwin
