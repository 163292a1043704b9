#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "copwin/graph_gen.hpp"

using namespace copwin;

namespace {

std::size_t grid_index(std::size_t n, std::size_t a, std::size_t b) {
  return a * n + b;
}

// Independent re-statement of the five-clause edge rule, used to catch
// divergence in the generator.
bool grid_edge(std::size_t a0, std::size_t b0, std::size_t a1,
               std::size_t b1, bool diagonal) {
  if (a0 == a1 && b0 == b1) return false;
  if (a0 == 0 && a1 == 0) return true;                      // y-axis clique
  if (b0 == 0 && b1 == 0) return true;                      // x-axis clique
  if (diagonal && a0 == b0 && a1 == b1) return true;        // diagonal clique
  if (a0 < a1 && b0 > b1) return true;                      // anti-monotone
  if (a0 > a1 && b0 < b1) return true;
  return false;
}

}  // namespace

TEST_CASE("N=2 edge rule, clause by clause") {
  FiniteGraph g = generate_truncation({2, 0, true});
  CHECK(g.adjacent(grid_index(2, 0, 1), grid_index(2, 1, 0)));  // anti-monotone
  CHECK(g.adjacent(grid_index(2, 0, 0), grid_index(2, 1, 1)));  // diagonal
  CHECK(!g.adjacent(grid_index(2, 0, 1), grid_index(2, 1, 1)));  // no clause
}

TEST_CASE("N=3: the origin reaches exactly the three cliques") {
  FiniteGraph g = generate_truncation({3, 0, true});
  const std::size_t o = grid_index(3, 0, 0);
  // Axis and diagonal vertices share a clique with the origin.
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1},
                      {0, 2},
                      {1, 0},
                      {2, 0},
                      {1, 1},
                      {2, 2}})
    CHECK(g.adjacent(o, grid_index(3, a, b)));
  // (1,2) and (2,1) are on no clique and not anti-monotone against (0,0).
  CHECK(!g.adjacent(o, grid_index(3, 1, 2)));
  CHECK(!g.adjacent(o, grid_index(3, 2, 1)));
}

TEST_CASE("N=4 with tail 2: counts, labels and tail neighbors") {
  FiniteGraph g = generate_truncation({4, 2, true});
  CHECK(g.size() == 19);
  auto t1 = g.find_vertex("T(1)");
  auto t2 = g.find_vertex("T(2)");
  auto t3 = g.find_vertex("T(3)");
  auto origin = g.find_vertex("(0,0)");
  REQUIRE(t1);
  REQUIRE(t2);
  REQUIRE(t3);
  REQUIRE(origin);
  CHECK(g.closed_neighborhood(*t2) ==
        std::vector<std::size_t>{*t1, *t2, *t3});
  CHECK(g.adjacent(*t1, *origin));
  CHECK(g.degree(*t3) == 1);
  // T(1) touches the grid only at the origin.
  for (std::size_t v = 0; v < 16; ++v)
    CHECK(g.adjacent(*t1, v) == (v == *origin));
}

TEST_CASE("edge rule agrees with the independent predicate") {
  for (bool diag : {true, false}) {
    FiniteGraph g = generate_truncation({5, 0, diag});
    for (std::size_t a0 = 0; a0 < 5; ++a0)
      for (std::size_t b0 = 0; b0 < 5; ++b0)
        for (std::size_t a1 = 0; a1 < 5; ++a1)
          for (std::size_t b1 = 0; b1 < 5; ++b1)
            CHECK(g.adjacent(grid_index(5, a0, b0), grid_index(5, a1, b1)) ==
                  grid_edge(a0, b0, a1, b1, diag));
  }
}

TEST_CASE("adjacency is symmetric") {
  FiniteGraph g = generate_truncation({4, 3, true});
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
}

TEST_CASE("standard families") {
  CHECK(generate_path(5).edges().size() == 4);
  CHECK(generate_cycle(6).edges().size() == 6);
  CHECK(generate_complete(5).edges().size() == 10);
}

TEST_CASE("random graphs are reproducible from the seed") {
  FiniteGraph a = generate_random(8, 0.5, 0);
  FiniteGraph b = generate_random(8, 0.5, 0);
  REQUIRE(a.size() == b.size());
  CHECK(a.edges() == b.edges());
  FiniteGraph c = generate_random(8, 0.5, 1);
  CHECK(a.edges() != c.edges());
}

TEST_CASE("invalid truncation specs are rejected") {
  CHECK_THROWS(generate_truncation({1, 0, true}));
}
