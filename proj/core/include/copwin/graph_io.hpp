#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "copwin/eta_solver.hpp"
#include "copwin/finite_graph.hpp"

namespace copwin {

class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: one `u v` pair per line, `#` starts a comment,
/// blank lines ignored. Vertices are arbitrary whitespace-free tokens;
/// indices are assigned in order of first appearance and the tokens
/// kept as labels.
FiniteGraph read_edge_list(std::istream& in);

/// DOT subset: `graph NAME { a -- b; ... }`, undirected, no attributes,
/// no subgraphs. Statements may also be bare vertex names.
FiniteGraph read_dot(std::istream& in);

/// Dispatches on content: a leading `graph` keyword selects DOT.
FiniteGraph read_graph(std::istream& in);
FiniteGraph read_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const FiniteGraph& g);
void write_dot(std::ostream& out, const FiniteGraph& g);

/// Full matrix plus the per-cop-start values and both scalars;
/// robber-win entries appear as "RW" in text and null in JSON.
void write_eta_table_text(std::ostream& out, const FiniteGraph& g,
                          const EtaTable& table);
nlohmann::json eta_table_to_json(const FiniteGraph& g, const EtaTable& table);

}  // namespace copwin
