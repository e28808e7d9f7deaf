#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mics/graph.hpp"

namespace mics {

enum class GraphFormat { Dimacs, EdgeList };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dimacs" || name == "gr") return GraphFormat::Dimacs;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
  throw ValidationError("unknown graph format '" + std::string(name) + "'");
}

inline std::string_view format_name(GraphFormat f) { return f == GraphFormat::Dimacs ? "dimacs" : "edgelist"; }

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

inline long parse_integer(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
  return v;
}

inline std::pair<Vertex, Vertex> parse_edge(const std::vector<std::string>& toks, int line, int n, int base) {
  if (toks.size() != 2) throw ParseError(line, "edge line must have exactly two endpoints");
  long u = parse_integer(toks[0], line) - base;
  long v = parse_integer(toks[1], line) - base;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw ValidationError("line " + std::to_string(line) + ": vertex index out of range");
  }
  if (u == v) throw ValidationError("line " + std::to_string(line) + ": self-loop at vertex " + toks[0]);
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace detail

/// Reads a graph. DIMACS-tw: "c" comments, header "p tw <n> <m>", 1-based edges.
/// Edge list: first line "<n>", then 0-based "<u> <v>" pairs.
inline Graph parse_graph(std::istream& in, GraphFormat format) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long declared_m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    if (format == GraphFormat::Dimacs) {
      if (toks[0] == "c") continue;
      if (toks[0] == "p") {
        if (n >= 0) throw ParseError(lineno, "duplicate header");
        if (toks.size() != 4 || toks[1] != "tw") throw ParseError(lineno, "header must read 'p tw <n> <m>'");
        long nn = detail::parse_integer(toks[2], lineno);
        declared_m = detail::parse_integer(toks[3], lineno);
        if (nn < 0 || declared_m < 0) throw ParseError(lineno, "negative count in header");
        n = static_cast<int>(nn);
        continue;
      }
      if (n < 0) throw ParseError(lineno, "edge before header");
      edges.push_back(detail::parse_edge(toks, lineno, n, 1));
    } else {
      if (toks[0] == "#") continue;
      if (n < 0) {
        if (toks.size() != 1) throw ParseError(lineno, "first line must hold the vertex count");
        long nn = detail::parse_integer(toks[0], lineno);
        if (nn < 0) throw ParseError(lineno, "negative vertex count");
        n = static_cast<int>(nn);
        continue;
      }
      edges.push_back(detail::parse_edge(toks, lineno, n, 0));
    }
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (format == GraphFormat::Dimacs && static_cast<long>(edges.size()) != declared_m) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return {n, edges};
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

/// Writes edges in sorted order, lower endpoint first.
inline void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Dimacs) {
    out << "p tw " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
}

inline std::string to_text(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

}  // namespace mics
