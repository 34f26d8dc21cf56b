#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "defdom/clique_deletion.hpp"
#include "defdom/formula.hpp"
#include "defdom/graph.hpp"
#include "defdom/graph_io.hpp"

// Existential 2-level 3-CNF -> clique node deletion, s = ac + 3c, t = b + c.
// Indices below are 1-based for variables and clauses, 0-based for the three
// occurrences of a clause and for the x-gadget class members (member j-1 is
// the vertex numbered j).

namespace defdom {

struct CndLayout {
  std::vector<std::vector<Vertex>> x_pos, x_neg;  // [i][j-1]
  std::vector<Vertex> y_pos, y_neg;               // [j]
  std::vector<std::vector<Vertex>> good, bad;     // [k][o]; bad[k][0] is ugly
  std::vector<std::vector<Vertex>> q_members;     // [k] all vertices of Q_{C_k}
};

struct E2CndInstance {
  CndInstance cnd;
  CndLayout layout;
};

inline E2CndInstance e2sat_to_cnd(const E2Formula& f, bool allow_small = false) {
  f.validate();
  const int a = f.a, b = f.b, c = f.c();
  if (!allow_small && c <= 6)
    throw InputError("reduction requires c > 6 clauses (got c = " + std::to_string(c) + ")");
  if (c < 1) throw InputError("reduction requires at least one clause");
  const int t = b + c;
  if (t < 2) throw InputError("reduction requires t = b + c >= 2");

  E2CndInstance out;
  auto& L = out.layout;
  std::vector<std::string> labels;
  auto fresh = [&](std::string label) {
    labels.push_back(std::move(label));
    return static_cast<Vertex>(labels.size());
  };
  auto tag = [](auto... parts) {
    std::string s;
    ((s += (s.empty() ? "" : ":") + std::string(parts)), ...);
    return s;
  };
  auto num = [](int v) { return std::to_string(v); };

  L.x_pos.assign(static_cast<std::size_t>(a) + 1, {});
  L.x_neg.assign(static_cast<std::size_t>(a) + 1, {});
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= c; ++j) L.x_pos[i].push_back(fresh(tag("xpos", num(i), num(j))));
    for (int j = 1; j <= c; ++j) L.x_neg[i].push_back(fresh(tag("xneg", num(i), num(j))));
  }
  L.y_pos.assign(static_cast<std::size_t>(b) + 1, 0);
  L.y_neg.assign(static_cast<std::size_t>(b) + 1, 0);
  for (int j = 1; j <= b; ++j) {
    L.y_pos[j] = fresh(tag("ypos", num(j)));
    L.y_neg[j] = fresh(tag("yneg", num(j)));
  }
  L.good.assign(static_cast<std::size_t>(c) + 1, {});
  L.bad.assign(static_cast<std::size_t>(c) + 1, {});
  for (int k = 1; k <= c; ++k) {
    const auto& cl = f.clauses[static_cast<std::size_t>(k) - 1];
    for (int o = 0; o < 3; ++o)
      L.good[k].push_back(fresh(tag(f.is_x(cl[static_cast<std::size_t>(o)]) ? "xgood" : "ygood", num(k), num(o))));
    L.bad[k].push_back(fresh(tag("ugly", num(k))));
    for (int o = 1; o < 3; ++o) L.bad[k].push_back(fresh(tag("bad", num(k), num(o))));
  }

  std::vector<Edge> edges;
  int fillers = 0;
  auto clique_on = [&](std::vector<Vertex> members) {
    for (std::size_t p = 0; p < members.size(); ++p)
      for (std::size_t q = p + 1; q < members.size(); ++q) edges.emplace_back(members[p], members[q]);
  };
  // Steps 1, 3, 4: the bipartite gadgets, each edge completed to a K_t.
  auto gadget = [&](const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
    for (Vertex u : left)
      for (Vertex v : right) {
        std::vector<Vertex> copy{u, v};
        for (int r = 0; r < t - 2; ++r) copy.push_back(fresh(tag("fill", num(++fillers))));
        clique_on(copy);
      }
  };
  for (int i = 1; i <= a; ++i) gadget(L.x_pos[i], L.x_neg[i]);
  for (int k = 1; k <= c; ++k) gadget(L.good[k], L.bad[k]);

  // Step 5.
  L.q_members.assign(static_cast<std::size_t>(c) + 1, {});
  for (int k = 1; k <= c; ++k) {
    const auto& cl = f.clauses[static_cast<std::size_t>(k) - 1];
    auto& z = L.q_members[k];
    int g = 0;
    for (int o = 0; o < 3; ++o) {
      int lit = cl[static_cast<std::size_t>(o)];
      if (!f.is_x(lit)) continue;
      ++g;
      int i = std::abs(lit);
      z.push_back(L.good[k][static_cast<std::size_t>(o)]);
      z.push_back(lit > 0 ? L.x_pos[i][static_cast<std::size_t>(k) - 1] : L.x_neg[i][static_cast<std::size_t>(k) - 1]);
    }
    for (int r = 1; r <= t - 1 - g; ++r) z.push_back(fresh(tag("qfill", num(k), num(r))));
    clique_on(z);
  }

  // Steps 6 and 7.
  for (int k = 1; k <= c; ++k) {
    const auto& cl = f.clauses[static_cast<std::size_t>(k) - 1];
    for (int o = 0; o < 3; ++o) {
      int lit = cl[static_cast<std::size_t>(o)];
      if (f.is_x(lit)) continue;
      Vertex u = L.good[k][static_cast<std::size_t>(o)];
      int j = std::abs(lit) - a;
      for (int jj = 1; jj <= b; ++jj) {
        if (jj == j) {
          edges.emplace_back(u, lit > 0 ? L.y_pos[jj] : L.y_neg[jj]);
        } else {
          edges.emplace_back(u, L.y_pos[jj]);
          edges.emplace_back(u, L.y_neg[jj]);
        }
      }
    }
    for (int j = 1; j <= b; ++j) {
      edges.emplace_back(L.bad[k][0], L.y_pos[j]);
      edges.emplace_back(L.bad[k][0], L.y_neg[j]);
    }
  }
  // Step 8.
  for (int j = 1; j <= b; ++j)
    for (int jj = j + 1; jj <= b; ++jj)
      for (Vertex u : {L.y_pos[j], L.y_neg[j]})
        for (Vertex v : {L.y_pos[jj], L.y_neg[jj]}) edges.emplace_back(u, v);
  // Step 9.
  auto cross_side = [&](int k) {
    std::vector<Vertex> side = L.bad[k];
    const auto& cl = f.clauses[static_cast<std::size_t>(k) - 1];
    for (int o = 0; o < 3; ++o)
      if (!f.is_x(cl[static_cast<std::size_t>(o)])) side.push_back(L.good[k][static_cast<std::size_t>(o)]);
    return side;
  };
  for (int k = 1; k <= c; ++k)
    for (int kk = k + 1; kk <= c; ++kk)
      for (Vertex u : cross_side(k))
        for (Vertex v : cross_side(kk)) edges.emplace_back(u, v);

  out.cnd.graph = Graph(static_cast<int>(labels.size()), edges);
  out.cnd.graph.set_labels(std::move(labels));
  out.cnd.s = a * c + 3 * c;
  out.cnd.t = t;
  return out;
}

inline VertexSet valuation_to_deletion(const E2Formula& f, const E2CndInstance& inst, const Assignment& nu) {
  if (static_cast<int>(nu.size()) != f.a)
    throw InputError("valuation must assign all " + std::to_string(f.a) + " existential variables");
  const auto& L = inst.layout;
  std::vector<Vertex> x;
  for (int i = 1; i <= f.a; ++i) {
    const auto& cls = nu[static_cast<std::size_t>(i) - 1] ? L.x_neg[i] : L.x_pos[i];
    x.insert(x.end(), cls.begin(), cls.end());
  }
  for (int k = 1; k <= f.c(); ++k) {
    const auto& side = satisfied_by_x(f, f.clauses[static_cast<std::size_t>(k) - 1], nu) ? L.good[k] : L.bad[k];
    x.insert(x.end(), side.begin(), side.end());
  }
  return make_set(std::move(x));
}

// Role of a vertex, recovered from its label.
struct CndRole {
  enum Kind { x_pos, x_neg, y_pos, y_neg, x_good, y_good, bad, ugly, fill, q_fill } kind;
  int major = 0;  // variable or clause index
  int minor = 0;
};

namespace detail {

inline CndRole parse_cnd_role(const std::string& label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = label.find(':', start);
    parts.push_back(label.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto field = [&](std::size_t i) {
    return static_cast<int>(parse_integer(parts[i], "label field in '" + label + "'"));
  };
  static const std::pair<const char*, CndRole::Kind> table[] = {
      {"xpos", CndRole::x_pos},   {"xneg", CndRole::x_neg}, {"ypos", CndRole::y_pos}, {"yneg", CndRole::y_neg},
      {"xgood", CndRole::x_good}, {"ygood", CndRole::y_good}, {"bad", CndRole::bad},  {"ugly", CndRole::ugly},
      {"fill", CndRole::fill},    {"qfill", CndRole::q_fill}};
  for (auto [name, kind] : table) {
    if (parts[0] != name) continue;
    CndRole r{kind};
    if (parts.size() >= 2) r.major = field(1);
    if (parts.size() >= 3) r.minor = field(2);
    if (parts.size() > 3) break;
    return r;
  }
  throw InputError("unrecognised construction label '" + label + "'");
}

// K_t inside `pool`, skipping deleted vertices.
inline std::optional<VertexSet> clique_within(const Graph& g, const std::vector<Vertex>& pool,
                                              const std::vector<char>& gone, int t) {
  std::vector<Vertex> keep;
  for (Vertex v : pool)
    if (!gone[v]) keep.push_back(v);
  if (static_cast<int>(keep.size()) < t) return std::nullopt;
  auto sub = induced_subgraph(g, make_set(keep));
  auto found = find_clique(sub.graph, t);
  if (!found) return std::nullopt;
  VertexSet out;
  for (Vertex v : *found) out.push_back(sub.original[v]);
  return make_set(std::move(out));
}

}  // namespace detail

enum class CliqueType { A, B, C, D };

struct TypedClique {
  CliqueType type;
  VertexSet members;
};

// K_t search in G \ deleted organised by the four clique types of the
// construction:
//   A  positive and negative vertex of one x-gadget plus common neighbours,
//   B  good and bad vertex of one clause gadget plus common neighbours,
//   C  inside the clause clique Q_{C_k} of an X-good vertex,
//   D  among y-gadget, Y-good and bad vertices.
// Every K_t of a constructed graph falls in one of these, so the search is
// complete; witnesses are checked before being returned.
inline std::optional<TypedClique> typed_clique_audit(const Graph& g, int t, const VertexSet& deleted = {}) {
  if (!g.has_labels()) throw InputError("typed clique audit needs role labels on the graph");
  if (t < 2) throw InputError("typed clique audit needs t >= 2");
  std::vector<CndRole> role(static_cast<std::size_t>(g.n()) + 1);
  for (Vertex v = 1; v <= g.n(); ++v) role[v] = detail::parse_cnd_role(g.label(v));
  std::vector<char> gone(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : deleted) {
    g.check_vertex(v);
    gone[v] = 1;
  }

  auto verified = [&](CliqueType type, VertexSet members) {
    if (static_cast<int>(members.size()) != t || !is_clique(g, members))
      throw std::logic_error("typed clique audit produced a non-clique witness");
    return TypedClique{type, std::move(members)};
  };
  auto pair_search = [&](Vertex u, Vertex v) -> std::optional<VertexSet> {
    if (gone[u] || gone[v] || !g.adjacent(u, v)) return std::nullopt;
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                          g.neighbors(v).end(), std::back_inserter(common));
    std::optional<VertexSet> rest;
    if (t == 2) {
      rest = VertexSet{};
    } else {
      rest = detail::clique_within(g, common, gone, t - 2);
    }
    if (!rest) return std::nullopt;
    rest->push_back(u);
    rest->push_back(v);
    return make_set(std::move(*rest));
  };

  auto is_good = [](const CndRole& r) { return r.kind == CndRole::x_good || r.kind == CndRole::y_good; };
  auto is_bad = [](const CndRole& r) { return r.kind == CndRole::bad || r.kind == CndRole::ugly; };

  for (Vertex u = 1; u <= g.n(); ++u)
    if (role[u].kind == CndRole::x_pos)
      for (Vertex v : g.neighbors(u))
        if (role[v].kind == CndRole::x_neg && role[v].major == role[u].major)
          if (auto w = pair_search(u, v)) return verified(CliqueType::A, *w);

  for (Vertex u = 1; u <= g.n(); ++u)
    if (is_good(role[u]))
      for (Vertex v : g.neighbors(u))
        if (is_bad(role[v]) && role[v].major == role[u].major)
          if (auto w = pair_search(u, v)) return verified(CliqueType::B, *w);

  for (Vertex u = 1; u <= g.n(); ++u) {
    if (role[u].kind != CndRole::x_good || gone[u]) continue;
    const int k = role[u].major;
    std::vector<Vertex> q{u};
    for (Vertex v : g.neighbors(u)) {
      const auto& r = role[v];
      bool same_clause_side = (r.kind == CndRole::x_good || r.kind == CndRole::q_fill) && r.major == k;
      if (same_clause_side || r.kind == CndRole::x_pos || r.kind == CndRole::x_neg) q.push_back(v);
    }
    if (auto w = detail::clique_within(g, make_set(q), gone, t)) return verified(CliqueType::C, *w);
  }

  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= g.n(); ++v) {
    auto kind = role[v].kind;
    if (kind == CndRole::y_pos || kind == CndRole::y_neg || kind == CndRole::y_good || is_bad(role[v]))
      pool.push_back(v);
  }
  if (auto w = detail::clique_within(g, pool, gone, t)) return verified(CliqueType::D, *w);
  return std::nullopt;
}

// Reads nu off a deletion set that kills every type A and B clique within
// budget: nu_i is true exactly when X holds the whole negative class of x_i.
inline Assignment deletion_to_valuation(const E2Formula& f, const E2CndInstance& inst, const VertexSet& x) {
  const auto& g = inst.cnd.graph;
  check_set(g, x);
  if (make_set(x).size() != x.size()) throw InputError("deletion set lists a vertex twice");
  if (static_cast<int>(x.size()) > inst.cnd.s)
    throw InputError("deletion set has " + std::to_string(x.size()) + " vertices, budget s = " +
                     std::to_string(inst.cnd.s));
  if (auto w = typed_clique_audit(g, inst.cnd.t, x);
      w && (w->type == CliqueType::A || w->type == CliqueType::B))
    throw InputError(std::string("deletion set leaves a type-") + (w->type == CliqueType::A ? "A" : "B") +
                     " clique " + format_set(w->members));
  std::vector<char> in(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : x) in[v] = 1;
  auto all_in = [&](const std::vector<Vertex>& cls) {
    return std::all_of(cls.begin(), cls.end(), [&](Vertex v) { return in[v] != 0; });
  };
  Assignment nu;
  for (int i = 1; i <= f.a; ++i) {
    bool neg = all_in(inst.layout.x_neg[i]);
    bool pos = all_in(inst.layout.x_pos[i]);
    if (neg == pos)
      throw InputError("deletion set must contain exactly one full class of x-gadget " + std::to_string(i) +
                       " (the budget ac + 3c allows c vertices per x-gadget)");
    nu.push_back(neg);
  }
  return nu;
}

// The t-clique built from mu when nu is not a winning valuation. X defaults
// to valuation_to_deletion(nu).
inline VertexSet kt_witness_from_y(const E2Formula& f, const E2CndInstance& inst, const Assignment& nu,
                                   const Assignment& mu, std::optional<VertexSet> deleted = std::nullopt) {
  if (static_cast<int>(mu.size()) != f.b)
    throw InputError("y-valuation must assign all " + std::to_string(f.b) + " universal variables");
  const auto& L = inst.layout;
  const auto& g = inst.cnd.graph;
  VertexSet x = deleted ? make_set(*deleted) : valuation_to_deletion(f, inst, nu);
  auto removed = [&](Vertex v) { return std::binary_search(x.begin(), x.end(), v); };

  std::vector<Vertex> q;
  for (int j = 1; j <= f.b; ++j) q.push_back(mu[static_cast<std::size_t>(j) - 1] ? L.y_pos[j] : L.y_neg[j]);
  for (int k = 1; k <= f.c(); ++k) {
    if (!removed(L.bad[k][0])) {
      q.push_back(L.bad[k][0]);
      continue;
    }
    const auto& cl = f.clauses[static_cast<std::size_t>(k) - 1];
    Vertex pick = 0;
    for (int o = 0; o < 3 && pick == 0; ++o) {
      int lit = cl[static_cast<std::size_t>(o)];
      Vertex u = L.good[k][static_cast<std::size_t>(o)];
      if (!f.is_x(lit) && literal_true(lit, f, nu, mu) && !removed(u)) pick = u;
    }
    if (pick == 0)
      throw InputError("clause " + std::to_string(k) + " offers no ugly or satisfied Y-good vertex under mu");
    q.push_back(pick);
  }
  auto out = make_set(std::move(q));
  if (static_cast<int>(out.size()) != inst.cnd.t || !is_clique(g, out))
    throw InputError("selected vertices do not form a K_t; mu does not satisfy the formula");
  return out;
}

}  // namespace defdom
