#ifndef LSCAT_IO_HPP
#define LSCAT_IO_HPP

#include <string>

#include "lscat/graph.hpp"

namespace lscat {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list text: one "u v" pair per line, blank lines and '#' comments
// allowed, a line with a single token declares an isolated vertex.
// Loops and duplicate edges are rejected with their line number.
SimpleGraph parse_edge_list(const std::string& text);
// Normalized form: vertices relabeled to ascending 0-based ids, isolated
// vertices as singleton lines, edges ascending lexicographic.
std::string serialize_edge_list(const SimpleGraph& g);

// Standard graph6 (optionally with the ">>graph6<<" header). Vertex labels
// are the 0-based ascending relabeling.
SimpleGraph parse_graph6(const std::string& text);
std::string serialize_graph6(const SimpleGraph& g);

// {"vertices":[...],"edges":[[u,v],...]} with optional "metadata" echoed
// through unchanged; ids round-trip exactly.
SimpleGraph parse_graph_json(const std::string& text);
std::string serialize_graph_json(const SimpleGraph& g);

// Sniffs graph6 / JSON / edge list from content (used for file input).
SimpleGraph parse_any(const std::string& text);

}  // namespace lscat

#endif
