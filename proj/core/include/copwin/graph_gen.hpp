#pragma once

#include <cstdint>
#include <random>

#include "copwin/finite_graph.hpp"

namespace copwin {

/// Finite truncation of the ordinal grid: vertices (a, b) with
/// a, b < grid_n, plus an attached path of tail_n + 1 extra vertices
/// hanging off (0, 0) when tail_n > 0. diagonal_edges toggles the
/// diagonal clique (the variant construction drops it).
struct TruncationSpec {
  std::size_t grid_n = 2;
  std::size_t tail_n = 0;
  bool diagonal_edges = true;
};

/// Vertex layout: grid vertices row-major at a * grid_n + b, then the
/// tail vertices T(1), ..., T(tail_n + 1) in order. Labels follow the
/// symbolic notation: "(a,b)" and "T(i)".
FiniteGraph generate_truncation(const TruncationSpec& spec);

FiniteGraph generate_path(std::size_t n);
FiniteGraph generate_cycle(std::size_t n);
FiniteGraph generate_complete(std::size_t n);
/// G(n, p) with a fixed engine so corpora are reproducible from a seed.
FiniteGraph generate_random(std::size_t n, double p, std::uint64_t seed);

}  // namespace copwin
