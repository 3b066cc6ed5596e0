#pragma once

#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "findex/graph.hpp"

namespace findex {

// Malformed edge-list document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Splits text into lines, dropping comment lines (first non-blank char '#')
// and blank lines.
inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  auto flush = [&] {
    const std::size_t start = current.find_first_not_of(" \t\r");
    if (start != std::string::npos && current[start] != '#') lines.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '\n')
      flush();
    else
      current.push_back(c);
  }
  if (!current.empty()) flush();
  return lines;
}

inline std::vector<std::size_t> parse_fields(const std::string& line, std::size_t expected,
                                             const char* what) {
  std::istringstream in(line);
  std::vector<std::size_t> fields;
  std::string token;
  while (in >> token) {
    std::size_t value = 0;
    std::size_t consumed = 0;
    try {
      value = std::stoull(token, &consumed);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": not a nonnegative integer: '" + token + "'");
    }
    if (consumed != token.size() || token[0] == '-' || token[0] == '+')
      throw ParseError(std::string(what) + ": not a nonnegative integer: '" + token + "'");
    fields.push_back(value);
  }
  if (fields.size() != expected)
    throw ParseError(std::string(what) + ": expected " + std::to_string(expected) +
                     " fields, got " + std::to_string(fields.size()) + " in '" + line + "'");
  return fields;
}

}  // namespace detail

// Parses the "n m" + edge-lines document. Files are authored artifacts, so a
// duplicate edge is an error here, unlike the collapsing Graph constructor.
inline Graph parse_edge_list(std::string_view text) {
  const std::vector<std::string> lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("edge list: missing header line");
  const auto header = detail::parse_fields(lines[0], 2, "edge list header");
  const std::size_t n = header[0], m = header[1];
  if (lines.size() - 1 != m)
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::parse_fields(lines[i], 2, "edge line");
    std::size_t u = fields[0], v = fields[1];
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range in '" + lines[i] + "'");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    edges.push_back(Edge{u, v});
  }
  return Graph(n, std::move(edges));
}

// Canonical text form; parse_edge_list(write_edge_list(g)) == g.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace findex
