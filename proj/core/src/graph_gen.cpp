#include "copwin/graph_gen.hpp"

#include <stdexcept>
#include <string>

namespace copwin {

FiniteGraph generate_truncation(const TruncationSpec& spec) {
  if (spec.grid_n < 2)
    throw std::invalid_argument("truncation needs grid_n >= 2");
  const std::size_t n = spec.grid_n;
  const std::size_t tails = spec.tail_n == 0 ? 0 : spec.tail_n + 1;
  std::vector<std::string> labels;
  labels.reserve(n * n + tails);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) +
                       ")");
  for (std::size_t i = 1; i <= tails; ++i)
    labels.push_back("T(" + std::to_string(i) + ")");

  FiniteGraph g(n * n + tails, std::move(labels));
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  for (std::size_t a0 = 0; a0 < n; ++a0) {
    for (std::size_t b0 = 0; b0 < n; ++b0) {
      for (std::size_t a1 = a0; a1 < n; ++a1) {
        for (std::size_t b1 = (a1 == a0 ? b0 + 1 : 0); b1 < n; ++b1) {
          const bool both_y_axis = a0 == 0 && a1 == 0;
          const bool both_x_axis = b0 == 0 && b1 == 0;
          const bool both_diagonal =
              spec.diagonal_edges && a0 == b0 && a1 == b1;
          const bool anti_monotone =
              (a0 < a1 && b0 > b1) || (a0 > a1 && b0 < b1);
          if (both_y_axis || both_x_axis || both_diagonal || anti_monotone)
            g.add_edge(idx(a0, b0), idx(a1, b1));
        }
      }
    }
  }
  if (tails > 0) {
    g.add_edge(idx(0, 0), n * n);  // T(1) hangs off the origin
    for (std::size_t i = 1; i < tails; ++i)
      g.add_edge(n * n + i - 1, n * n + i);
  }
  return g;
}

FiniteGraph generate_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  FiniteGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

FiniteGraph generate_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  FiniteGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  g.add_edge(n - 1, 0);
  return g;
}

FiniteGraph generate_complete(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("complete graph needs at least one vertex");
  FiniteGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

FiniteGraph generate_random(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0)
    throw std::invalid_argument("random graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  FiniteGraph g(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j);
  return g;
}

}  // namespace copwin
