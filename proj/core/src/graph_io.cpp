#include "copwin/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace copwin {

namespace {

struct EdgeAccumulator {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t vertex(const std::string& token) {
    auto [it, inserted] = index.try_emplace(token, labels.size());
    if (inserted) labels.push_back(token);
    return it->second;
  }

  FiniteGraph build() {
    const std::size_t n = labels.size();
    FiniteGraph g(n, std::move(labels));
    for (auto [u, v] : edges)
      if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
    return g;
  }
};

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// DOT identifiers may be quoted; labels like "(0,1)" need it.
std::string unquote(const std::string& token) {
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
    return token.substr(1, token.size() - 2);
  return token;
}

}  // namespace

FiniteGraph read_edge_list(std::istream& in) {
  EdgeAccumulator acc;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(strip_comment(line));
    std::string a, b, extra;
    if (!(row >> a)) continue;
    if (!(row >> b))
      throw GraphParseError("expected two vertex tokens", line_no);
    if (row >> extra)
      throw GraphParseError("unexpected trailing token '" + extra + "'",
                            line_no);
    std::size_t u = acc.vertex(a);
    std::size_t v = acc.vertex(b);
    acc.edges.emplace_back(u, v);
  }
  return acc.build();
}

FiniteGraph read_dot(std::istream& in) {
  // Tokenize the whole stream; the subset has no line-sensitive syntax
  // but errors still report the line of the offending token.
  std::vector<std::pair<std::string, std::size_t>> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = strip_comment(line);
    // Split on whitespace and the punctuation we care about.
    std::string current;
    auto flush = [&] {
      if (!current.empty()) tokens.emplace_back(current, line_no);
      current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '"') {
        current += c;
        for (++i; i < text.size() && text[i] != '"'; ++i) current += text[i];
        if (i >= text.size())
          throw GraphParseError("unterminated quoted identifier", line_no);
        current += '"';
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
        continue;
      }
      if (c == '{' || c == '}' || c == ';') {
        flush();
        tokens.emplace_back(std::string(1, c), line_no);
        continue;
      }
      if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
        flush();
        tokens.emplace_back("--", line_no);
        ++i;
        continue;
      }
      current += c;
    }
    flush();
  }

  std::size_t pos = 0;
  auto peek = [&]() -> const std::string& {
    static const std::string kEnd;
    return pos < tokens.size() ? tokens[pos].first : kEnd;
  };
  auto line_of = [&] {
    return pos < tokens.size() ? tokens[pos].second : line_no;
  };

  if (peek() == "strict") ++pos;
  if (peek() != "graph")
    throw GraphParseError("expected 'graph' keyword", line_of());
  ++pos;
  if (peek() != "{") ++pos;  // optional graph name
  if (peek() != "{") throw GraphParseError("expected '{'", line_of());
  ++pos;

  EdgeAccumulator acc;
  while (pos < tokens.size() && peek() != "}") {
    if (peek() == ";") {
      ++pos;
      continue;
    }
    std::size_t u = acc.vertex(unquote(peek()));
    ++pos;
    while (peek() == "--") {
      ++pos;
      if (pos >= tokens.size() || peek() == ";" || peek() == "}")
        throw GraphParseError("edge missing right-hand vertex", line_of());
      std::size_t v = acc.vertex(unquote(peek()));
      acc.edges.emplace_back(u, v);
      u = v;
      ++pos;
    }
  }
  if (peek() != "}") throw GraphParseError("expected '}'", line_of());
  return acc.build();
}

FiniteGraph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t i = 0;
  while (i < text.size() &&
         (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '#')) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      ++i;
    }
  }
  std::istringstream replay(text);
  if (text.compare(i, 5, "graph") == 0 || text.compare(i, 6, "strict") == 0)
    return read_dot(replay);
  return read_edge_list(replay);
}

FiniteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_edge_list(std::ostream& out, const FiniteGraph& g) {
  out << "# " << g.size() << " vertices\n";
  for (auto [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_dot(std::ostream& out, const FiniteGraph& g) {
  out << "graph G {\n";
  std::vector<bool> touched(g.size(), false);
  for (auto [u, v] : g.edges()) {
    out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    touched[u] = touched[v] = true;
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!touched[v]) out << "  \"" << g.label(v) << "\";\n";
  out << "}\n";
}

namespace {

std::string cell(std::uint32_t value) {
  return value == EtaTable::kRobberWins ? "RW" : std::to_string(value);
}

}  // namespace

void write_eta_table_text(std::ostream& out, const FiniteGraph& g,
                          const EtaTable& table) {
  const std::size_t n = table.n;
  out << "eta(u,v): rows are robber starts u, columns cop starts v\n";
  for (std::size_t u = 0; u < n; ++u) {
    out << g.label(u) << ':';
    for (std::size_t v = 0; v < n; ++v) out << ' ' << cell(table.at(u, v));
    out << '\n';
  }
  out << "eta(v):";
  for (std::size_t v = 0; v < n; ++v) out << ' ' << cell(table.eta_per_cop[v]);
  out << '\n';
  out << "eta(G) = " << cell(table.eta_g) << '\n';
  out << "rho(G) = " << cell(table.rho_g) << '\n';
}

nlohmann::json eta_table_to_json(const FiniteGraph& g, const EtaTable& table) {
  auto encode = [](std::uint32_t value) {
    return value == EtaTable::kRobberWins ? nlohmann::json(nullptr)
                                          : nlohmann::json(value);
  };
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t u = 0; u < table.n; ++u) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t v = 0; v < table.n; ++v) row.push_back(encode(table.at(u, v)));
    matrix.push_back(std::move(row));
  }
  nlohmann::json per_cop = nlohmann::json::array();
  for (std::uint32_t x : table.eta_per_cop) per_cop.push_back(encode(x));
  return {
      {"vertices", g.labels()},
      {"values", std::move(matrix)},
      {"eta_per_cop", std::move(per_cop)},
      {"eta", encode(table.eta_g)},
      {"rho", encode(table.rho_g)},
  };
}

}  // namespace copwin
