#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "copwin/eta_solver.hpp"
#include "copwin/graph_gen.hpp"
#include "copwin/graph_io.hpp"

using namespace copwin;

TEST_CASE("edge lists parse with comments and labels") {
  std::istringstream in(
      "# a path\n"
      "a b\n"
      "\n"
      "b c  # trailing comment\n");
  FiniteGraph g = read_edge_list(in);
  CHECK(g.size() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 2));
}

TEST_CASE("edge list errors carry line numbers") {
  std::istringstream one("a b\nc\n");
  CHECK_THROWS_AS(read_edge_list(one), GraphParseError);
  try {
    std::istringstream again("a b\nc\n");
    read_edge_list(again);
  } catch (const GraphParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream three("a b c\n");
  CHECK_THROWS_AS(read_edge_list(three), GraphParseError);
}

TEST_CASE("dot subset parses chains, quotes and bare vertices") {
  std::istringstream in(
      "graph G {\n"
      "  a -- b -- c;\n"
      "  \"(0,1)\" -- a;\n"
      "  lonely;\n"
      "}\n");
  FiniteGraph g = read_dot(in);
  CHECK(g.size() == 5);
  CHECK(g.find_vertex("(0,1)").has_value());
  CHECK(g.find_vertex("lonely").has_value());
  CHECK(g.adjacent(*g.find_vertex("a"), *g.find_vertex("b")));
  CHECK(g.adjacent(*g.find_vertex("b"), *g.find_vertex("c")));
  CHECK(g.adjacent(*g.find_vertex("(0,1)"), *g.find_vertex("a")));
  CHECK(g.degree(*g.find_vertex("lonely")) == 0);
}

TEST_CASE("read_graph dispatches on the leading keyword") {
  std::istringstream dot("graph { a -- b; }");
  CHECK(read_graph(dot).size() == 2);
  std::istringstream edges("x y\n");
  CHECK(read_graph(edges).size() == 2);
}

TEST_CASE("write and re-read round-trips both formats") {
  FiniteGraph g = generate_truncation({3, 1, true});

  std::ostringstream edges;
  write_edge_list(edges, g);
  std::istringstream edges_in(edges.str());
  FiniteGraph ge = read_edge_list(edges_in);
  REQUIRE(ge.size() == g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      CHECK(g.adjacent(u, v) ==
            ge.adjacent(*ge.find_vertex(g.label(u)),
                        *ge.find_vertex(g.label(v))));

  std::ostringstream dot;
  write_dot(dot, g);
  std::istringstream dot_in(dot.str());
  FiniteGraph gd = read_dot(dot_in);
  REQUIRE(gd.size() == g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      CHECK(g.adjacent(u, v) ==
            gd.adjacent(*gd.find_vertex(g.label(u)),
                        *gd.find_vertex(g.label(v))));
}

TEST_CASE("eta table serialization") {
  FiniteGraph c4 = generate_cycle(4);
  EtaTable c4t = eta_all(c4);
  std::ostringstream text;
  write_eta_table_text(text, c4, c4t);
  CHECK(text.str().find("RW") != std::string::npos);

  FiniteGraph k2 = generate_complete(2);
  EtaTable k2t = eta_all(k2);
  nlohmann::json j = eta_table_to_json(k2, k2t);
  CHECK(j["eta"] == 1);
  CHECK(j["rho"] == 1);
  CHECK(j["values"][0][1] == 1);
  CHECK(j["values"][0][0] == 0);
  CHECK(j["vertices"].size() == 2);

  nlohmann::json jc4 = eta_table_to_json(c4, c4t);
  CHECK(jc4["eta"].is_null());
  CHECK(jc4["values"][0][1].is_null());
}
