#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "defdom/graph.hpp"

namespace defdom {

// Text graph format:
//   c <comment>
//   c role <v> <label>
//   c params <key> <value> [<key> <value> ...]
//   p dds <n> <m>
//   e <u> <v>          (1 <= u < v <= n, m lines)
struct GraphFile {
  Graph graph;
  std::map<std::string, long long> params;
};

namespace detail {

inline std::string line_context(int lineno, const std::string& line) {
  return "line " + std::to_string(lineno) + ": '" + line + "'";
}

inline long long parse_integer(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw InputError("expected integer for " + what + ", got '" + token + "'");
  }
  if (used != token.size()) throw InputError("expected integer for " + what + ", got '" + token + "'");
  return value;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

inline GraphFile read_graph(std::istream& in) {
  GraphFile out;
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::map<Vertex, std::string> roles;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      if (tok.size() >= 2 && tok[1] == "role") {
        if (tok.size() != 4) throw InputError("malformed role " + detail::line_context(lineno, line));
        auto v = static_cast<Vertex>(detail::parse_integer(tok[2], "role vertex"));
        if (!roles.emplace(v, tok[3]).second)
          throw InputError("duplicate role for vertex " + tok[2]);
      } else if (tok.size() >= 2 && tok[1] == "params") {
        if (tok.size() % 2 != 0) throw InputError("malformed params " + detail::line_context(lineno, line));
        for (std::size_t i = 2; i + 1 < tok.size(); i += 2)
          out.params[tok[i]] = detail::parse_integer(tok[i + 1], "param " + tok[i]);
      }
      continue;
    }
    if (tok[0] == "p") {
      if (n >= 0) throw InputError("second header " + detail::line_context(lineno, line));
      if (tok.size() != 4 || tok[1] != "dds")
        throw InputError("expected 'p dds <n> <m>' at " + detail::line_context(lineno, line));
      n = detail::parse_integer(tok[2], "vertex count");
      m = detail::parse_integer(tok[3], "edge count");
      if (n < 0 || m < 0) throw InputError("negative counts in header");
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw InputError("edge before header at " + detail::line_context(lineno, line));
      if (tok.size() != 3) throw InputError("malformed edge " + detail::line_context(lineno, line));
      auto u = detail::parse_integer(tok[1], "edge endpoint");
      auto v = detail::parse_integer(tok[2], "edge endpoint");
      if (!(1 <= u && u < v && v <= n))
        throw InputError("edge must satisfy 1 <= u < v <= n at " + detail::line_context(lineno, line));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      continue;
    }
    throw InputError("unrecognised " + detail::line_context(lineno, line));
  }
  if (n < 0) throw InputError("missing 'p dds' header");
  if (static_cast<long long>(edges.size()) != m)
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  out.graph = Graph(static_cast<int>(n), edges);
  if (static_cast<long long>(out.graph.edge_count()) != m) throw InputError("duplicate edges");
  if (!roles.empty()) {
    if (static_cast<long long>(roles.size()) != n || roles.begin()->first != 1 || roles.rbegin()->first != n)
      throw InputError("role lines must cover every vertex exactly once");
    std::vector<std::string> labels;
    for (auto& [v, l] : roles) labels.push_back(l);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

inline GraphFile read_graph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const std::vector<std::pair<std::string, long long>>& params = {}) {
  if (!params.empty()) {
    out << "c params";
    for (const auto& [k, v] : params) out << ' ' << k << ' ' << v;
    out << '\n';
  }
  if (g.has_labels())
    for (Vertex v = 1; v <= g.n(); ++v) out << "c role " << v << ' ' << g.label(v) << '\n';
  auto edges = g.edges();
  out << "p dds " << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

// Vertex set file: one identity per line; "c " comments and blanks skipped.
inline VertexSet read_vertex_set(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok.size() != 1) throw InputError("vertex set: expected one id on " + detail::line_context(lineno, line));
    out.push_back(static_cast<Vertex>(detail::parse_integer(tok[0], "vertex id")));
  }
  auto sorted = make_set(out);
  if (sorted.size() != out.size()) throw InputError("vertex set: duplicate identity");
  return sorted;
}

// Multiset file: lines "<v> <count>". Lines holding a single id count as
// one copy, so a plain vertex set file also parses as a multiset.
inline VertexMultiset read_vertex_multiset(std::istream& in, bool strict = false) {
  VertexMultiset out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok.size() > 2 || (strict && tok.size() != 2))
      throw InputError("multiset: expected '<v> <count>' on " + detail::line_context(lineno, line));
    auto v = static_cast<Vertex>(detail::parse_integer(tok[0], "vertex id"));
    long long c = tok.size() == 2 ? detail::parse_integer(tok[1], "multiplicity") : 1;
    if (c < 1) throw InputError("multiset: multiplicity must be positive on " + detail::line_context(lineno, line));
    out.add(v, static_cast<int>(c));
  }
  return out;
}

inline VertexSet read_vertex_set_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_vertex_set(in);
}

inline VertexMultiset read_vertex_multiset_file(const std::string& path, bool strict = false) {
  auto in = detail::open_input(path);
  return read_vertex_multiset(in, strict);
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s) out << v << '\n';
}

inline void write_vertex_multiset(std::ostream& out, const VertexMultiset& d) {
  for (const auto& [v, c] : d.entries()) out << v << ' ' << c << '\n';
}

// One attack per line, whitespace separated; empty lines are skipped.
inline std::vector<VertexSet> read_attack_list(std::istream& in) {
  std::vector<VertexSet> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    std::vector<Vertex> a;
    for (const auto& t : tok) a.push_back(static_cast<Vertex>(detail::parse_integer(t, "attack vertex")));
    auto s = make_set(a);
    if (s.size() != a.size()) throw InputError("attack lists a vertex twice: '" + line + "'");
    out.push_back(std::move(s));
  }
  return out;
}

inline std::string format_set(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::string format_multiset(const VertexMultiset& d) {
  std::string out;
  for (const auto& [v, c] : d.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
    if (c != 1) out += 'x' + std::to_string(c);
  }
  return out;
}

}  // namespace defdom
