#include "lscat/io.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace lscat {

using nlohmann::json;

SimpleGraph parse_edge_list(const std::string& text) {
  std::set<int> verts;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) {
      ls.clear();
      std::string junk;
      if (ls >> junk) fail("malformed line: '" + line + "'");
      continue;  // blank or comment-only
    }
    if (a < 0) fail("negative vertex id");
    if (!(ls >> b)) {
      std::string junk;
      if (ls.clear(), ls >> junk) fail("malformed line: '" + line + "'");
      verts.insert(static_cast<int>(a));
      continue;
    }
    if (b < 0) fail("negative vertex id");
    std::string junk;
    if (ls >> junk) fail("trailing tokens: '" + junk + "'");
    if (a == b) fail("loop at vertex " + std::to_string(a));
    std::pair<int, int> e = std::minmax<int>(static_cast<int>(a), static_cast<int>(b));
    if (!seen.insert({e.first, e.second}).second)
      fail("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    verts.insert(e.first);
    verts.insert(e.second);
    edges.emplace_back(e.first, e.second);
  }
  return SimpleGraph(std::vector<int>(verts.begin(), verts.end()), edges);
}

std::string serialize_edge_list(const SimpleGraph& g) {
  std::map<int, int> relabel;
  for (int i = 0; i < g.order(); ++i) relabel[g.id_at(i)] = i;
  std::ostringstream out;
  for (int i = 0; i < g.order(); ++i)
    if (g.degree(g.id_at(i)) == 0) out << i << "\n";
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) {
    std::pair<int, int> e = std::minmax<int>(relabel[u], relabel[v]);
    es.emplace_back(e.first, e.second);
  }
  std::sort(es.begin(), es.end());
  for (auto [u, v] : es) out << u << " " << v << "\n";
  return out.str();
}

SimpleGraph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s.erase(0, header.size());
  if (s.rfind(">>", 0) == 0) throw ParseError("bad graph6 header");
  if (s.empty()) throw ParseError("empty graph6 string");
  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= s.size()) throw ParseError("graph6 string truncated");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte at offset " + std::to_string(i));
    return c - 63;
  };
  long long n;
  if (byte(0) == 63) {  // '~': multi-byte order
    if (byte(1) == 63) throw ParseError("graph6 order too large");
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  if (n > SimpleGraph::kMaxOrder) throw ParseError("graph6 order too large: " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = byte(pos++);
        bits = 6;
      }
      if ((acc >> (bits - 1)) & 1) edges.emplace_back(i, j);
      --bits;
    }
  if (pos != s.size()) throw ParseError("trailing graph6 bytes");
  return SimpleGraph(static_cast<int>(n), edges);
}

std::string serialize_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::map<int, int> relabel;
  for (int i = 0; i < n; ++i) relabel[g.id_at(i)] = i;
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0, acc = 0;
  std::set<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) {
    std::pair<int, int> e = std::minmax<int>(relabel[u], relabel[v]);
    es.insert({e.first, e.second});
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (es.count({i, j}) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

SimpleGraph parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'vertices' and 'edges'");
  std::vector<int> vs;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw ParseError("non-integer vertex id");
    vs.push_back(v.get<int>());
  }
  std::vector<std::pair<int, int>> es;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u,v]");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    std::pair<int, int> p = std::minmax<int>(u, v);
    if (!seen.insert({p.first, p.second}).second)
      throw ParseError("duplicate edge " + std::to_string(p.first) + " " + std::to_string(p.second));
    es.emplace_back(u, v);
  }
  return SimpleGraph(vs, es);
}

std::string serialize_graph_json(const SimpleGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  auto arr = json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = arr;
  return j.dump();
}

SimpleGraph parse_any(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw ParseError("empty input");
  if (text[i] == '{') return parse_graph_json(text);
  if (text.compare(i, 2, ">>") == 0) return parse_graph6(text.substr(i));
  // A single line whose first byte is not a digit/comment is graph6.
  if (!isdigit(static_cast<unsigned char>(text[i])) && text[i] != '#') return parse_graph6(text.substr(i));
  return parse_edge_list(text);
}

}  // namespace lscat
