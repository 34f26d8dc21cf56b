#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "defdom/clique_deletion.hpp"
#include "defdom/defense.hpp"
#include "defdom/graph.hpp"
#include "defdom/matching.hpp"

// Clique node deletion -> defensive domination.
//
// Groups of the constructed graph G' (sizes with N = n + s):
//   V   = {v', v''} per source vertex        E   = one e' per source edge
//   I1, I4, Q1, Q4 : N                        I2  = N - C(t,2)
//   I3  = N + ell                             Q2  = N - (t+1)
//   I_v = C(t,2), I'_v = t per source vertex
// Q1, Q2, Q4 are cliques, the I groups independent. Complete bipartite joins:
// (I1,Q1), (Q2, Q1+I2+E+I_V), (V, Q4+I3), (Q4,I4), ({v',v''}, I_v), (I_v, I'_v);
// e' is joined to u', u'', v', v''. Attack bound k = N.

namespace defdom {

enum class EllMode { proof_consistent, literal };

inline long long choose2(long long t) { return t * (t - 1) / 2; }

// 4N + nt - (t+1) sums the parts of the forward-direction defense; the
// literal variant 4N + nt - (t-1) is two larger.
inline long long dds_ell(int n, int s, int t, EllMode mode) {
  long long base = 4LL * (n + s) + static_cast<long long>(n) * t;
  return mode == EllMode::proof_consistent ? base - (t + 1) : base - (t - 1);
}

struct DdsLayout {
  std::vector<Vertex> v_prime, v_double;  // indexed by source vertex, slot 0 unused
  std::vector<Vertex> edge_vertex;        // parallel to source_edges
  std::vector<Edge> source_edges;
  std::vector<Vertex> i1, i2, i3, i4, q1, q2, q4;
  std::vector<std::vector<Vertex>> iv, iv_prime;  // indexed by source vertex
};

struct DdsInstance {
  Graph graph;
  int k = 0;
  long long ell = 0;
  EllMode mode = EllMode::proof_consistent;
  int source_n = 0;
  int s = 0;
  int t = 0;
  DdsLayout layout;

  // Every vertex of the V group.
  std::vector<Vertex> v_group() const {
    std::vector<Vertex> out;
    for (int v = 1; v <= source_n; ++v) {
      out.push_back(layout.v_prime[v]);
      out.push_back(layout.v_double[v]);
    }
    return out;
  }
};

inline DdsInstance cnd_to_dds(const CndInstance& inst, EllMode mode = EllMode::proof_consistent) {
  inst.validate();
  const int n = inst.graph.n();
  const int s = inst.s;
  const int t = inst.t;
  const long long big = n + s;
  if (t < 4) throw InputError("reduction requires t >= 4 (got t = " + std::to_string(t) + ")");
  if (big < choose2(t))
    throw InputError("reduction requires n + s >= C(t,2) so that |I2| >= 0 (n + s = " + std::to_string(big) +
                     ", C(t,2) = " + std::to_string(choose2(t)) + ")");
  if (big < t + 1)
    throw InputError("reduction requires n + s >= t + 1 so that |Q2| >= 0 (n + s = " + std::to_string(big) + ")");

  DdsInstance dds;
  dds.k = static_cast<int>(big);
  dds.ell = dds_ell(n, s, t, mode);
  dds.mode = mode;
  dds.source_n = n;
  dds.s = s;
  dds.t = t;
  auto& L = dds.layout;

  std::vector<std::string> labels;
  auto fresh = [&](std::string label) {
    labels.push_back(std::move(label));
    return static_cast<Vertex>(labels.size());
  };
  auto group = [&](const std::string& name, long long size) {
    std::vector<Vertex> out;
    for (long long i = 1; i <= size; ++i) out.push_back(fresh(name + "#" + std::to_string(i)));
    return out;
  };

  L.v_prime.assign(static_cast<std::size_t>(n) + 1, 0);
  L.v_double.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    L.v_prime[v] = fresh("v'(" + std::to_string(v) + ")");
    L.v_double[v] = fresh("v''(" + std::to_string(v) + ")");
  }
  L.source_edges = inst.graph.edges();
  for (auto [u, v] : L.source_edges)
    L.edge_vertex.push_back(fresh("e'(" + std::to_string(u) + "," + std::to_string(v) + ")"));
  L.i1 = group("I1", big);
  L.i2 = group("I2", big - choose2(t));
  L.i3 = group("I3", big + dds.ell);
  L.i4 = group("I4", big);
  L.q1 = group("Q1", big);
  L.q2 = group("Q2", big - (t + 1));
  L.q4 = group("Q4", big);
  L.iv.assign(static_cast<std::size_t>(n) + 1, {});
  L.iv_prime.assign(static_cast<std::size_t>(n) + 1, {});
  for (int v = 1; v <= n; ++v) L.iv[v] = group("Iv(" + std::to_string(v) + ")", choose2(t));
  for (int v = 1; v <= n; ++v) L.iv_prime[v] = group("I'v(" + std::to_string(v) + ")", t);

  std::vector<Edge> edges;
  auto join = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b) edges.emplace_back(x, y);
  };
  auto clique = [&](const std::vector<Vertex>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) edges.emplace_back(a[i], a[j]);
  };

  for (std::size_t e = 0; e < L.source_edges.size(); ++e) {
    auto [u, v] = L.source_edges[e];
    join({L.edge_vertex[e]}, {L.v_prime[u], L.v_double[u], L.v_prime[v], L.v_double[v]});
  }
  clique(L.q1);
  clique(L.q2);
  clique(L.q4);
  join(L.i1, L.q1);
  std::vector<Vertex> q2_side = L.q1;
  q2_side.insert(q2_side.end(), L.i2.begin(), L.i2.end());
  q2_side.insert(q2_side.end(), L.edge_vertex.begin(), L.edge_vertex.end());
  for (int v = 1; v <= n; ++v) q2_side.insert(q2_side.end(), L.iv[v].begin(), L.iv[v].end());
  join(L.q2, q2_side);
  std::vector<Vertex> v_side = L.q4;
  v_side.insert(v_side.end(), L.i3.begin(), L.i3.end());
  join(dds.v_group(), v_side);
  join(L.q4, L.i4);
  for (int v = 1; v <= n; ++v) {
    join({L.v_prime[v], L.v_double[v]}, L.iv[v]);
    join(L.iv[v], L.iv_prime[v]);
  }

  dds.graph = Graph(static_cast<int>(labels.size()), edges);
  dds.graph.set_labels(std::move(labels));
  return dds;
}

// Structural audit of a construction against its source instance. Returns a
// description of every failed check; empty means the construction is sound.
inline std::vector<std::string> dds_invariant_violations(const CndInstance& inst, const DdsInstance& dds) {
  std::vector<std::string> bad;
  const Graph& g = dds.graph;
  const auto& L = dds.layout;
  const long long n = inst.graph.n();
  const long long big = n + inst.s;
  const long long t = inst.t;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  auto sz = [](const auto& v) { return static_cast<long long>(v.size()); };

  expect(dds.k == big, "k = n + s");
  expect(dds.ell == dds_ell(static_cast<int>(n), inst.s, inst.t, dds.mode), "ell formula");
  expect(sz(L.i1) == big && sz(L.i4) == big && sz(L.q1) == big && sz(L.q4) == big, "|I1| = |I4| = |Q1| = |Q4| = n+s");
  expect(sz(L.i2) == big - choose2(t), "|I2| = n+s-C(t,2)");
  expect(sz(L.q2) == big - (t + 1), "|Q2| = n+s-(t+1)");
  expect(sz(L.i3) == big + dds.ell, "|I3| = n+s+ell");
  for (int v = 1; v <= n; ++v) {
    expect(sz(L.iv[v]) == choose2(t), "|I_v| = C(t,2) for v = " + std::to_string(v));
    expect(sz(L.iv_prime[v]) == t, "|I'_v| = t for v = " + std::to_string(v));
  }
  expect(sz(L.edge_vertex) == static_cast<long long>(inst.graph.edge_count()), "one e' per source edge");

  auto all_adjacent = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b)
        if (!g.adjacent(x, y)) return false;
    return true;
  };
  auto independent = [&](const std::vector<Vertex>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (g.adjacent(a[i], a[j])) return false;
    return true;
  };
  expect(is_clique(g, L.q1) && is_clique(g, L.q2) && is_clique(g, L.q4), "Q1, Q2, Q4 are cliques");
  expect(independent(L.i1) && independent(L.i2) && independent(L.i3) && independent(L.i4),
         "I1..I4 are independent");

  for (std::size_t e = 0; e < L.edge_vertex.size(); ++e) {
    auto [u, v] = L.source_edges[e];
    std::vector<Vertex> want{L.v_prime[u], L.v_double[u], L.v_prime[v], L.v_double[v]};
    want.insert(want.end(), L.q2.begin(), L.q2.end());
    expect(g.neighbors(L.edge_vertex[e]) == make_set(want),
           "e'(" + std::to_string(u) + "," + std::to_string(v) + ") adjacent to exactly its endpoints' copies and Q2");
  }
  expect(all_adjacent(L.i1, L.q1), "(I1, Q1) complete");
  expect(all_adjacent(L.q2, L.q1) && all_adjacent(L.q2, L.i2) && all_adjacent(L.q2, L.edge_vertex),
         "(Q2, Q1 + I2 + E) complete");
  auto vg = dds.v_group();
  expect(all_adjacent(vg, L.q4) && all_adjacent(vg, L.i3), "(V, Q4 + I3) complete");
  expect(all_adjacent(L.q4, L.i4), "(Q4, I4) complete");
  for (int v = 1; v <= n; ++v) {
    expect(all_adjacent(L.q2, L.iv[v]), "(Q2, I_v) complete");
    expect(all_adjacent({L.v_prime[v], L.v_double[v]}, L.iv[v]), "({v',v''}, I_v) complete");
    expect(all_adjacent(L.iv[v], L.iv_prime[v]), "(I_v, I'_v) complete");
  }

  // Total edge count pins down that nothing else was added.
  const long long m = static_cast<long long>(inst.graph.edge_count());
  const long long q2 = sz(L.q2);
  long long expected = 4 * m + choose2(big) * 2 + choose2(q2) + big * big * 2 +
                       q2 * (big + sz(L.i2) + m + n * choose2(t)) + 2 * n * (big + sz(L.i3)) +
                       2 * n * choose2(t) + n * choose2(t) * t;
  expect(static_cast<long long>(g.edge_count()) == expected, "edge count matches the construction");
  return bad;
}

inline void check_deletion_set(const CndInstance& inst, const VertexSet& x) {
  check_set(inst.graph, x);
  if (make_set(x).size() != x.size()) throw InputError("deletion set lists a vertex twice");
  if (static_cast<int>(x.size()) != inst.s)
    throw InputError("deletion set must have exactly s = " + std::to_string(inst.s) + " vertices, got " +
                     std::to_string(x.size()));
}

// D = Q1 + Q2 + Q4 + I'_V + {v'} + {v'' : v in X}, one copy each.
inline VertexMultiset proof_defense(const CndInstance& inst, const DdsInstance& dds, const VertexSet& x) {
  check_deletion_set(inst, x);
  const auto& L = dds.layout;
  VertexMultiset d;
  for (Vertex v : L.q1) d.add(v);
  for (Vertex v : L.q2) d.add(v);
  for (Vertex v : L.q4) d.add(v);
  for (int v = 1; v <= dds.source_n; ++v) {
    for (Vertex w : L.iv_prime[v]) d.add(w);
    d.add(L.v_prime[v]);
  }
  for (Vertex v : x) d.add(L.v_double[v]);
  return d;
}

// Walks the attacks I2 + S, S a C(t,2)-subset of the E group, in
// lexicographic order of S.
class SeriousAttacks {
public:
  explicit SeriousAttacks(const DdsInstance& dds)
      : dds_(dds), pick_(static_cast<std::size_t>(choose2(dds.t))) {
    const auto e = dds.layout.edge_vertex.size();
    done_ = pick_.size() > e;
    std::iota(pick_.begin(), pick_.end(), std::size_t{0});
  }

  std::optional<VertexSet> next() {
    if (done_) return std::nullopt;
    std::vector<Vertex> attack = dds_.layout.i2;
    for (std::size_t i : pick_) attack.push_back(dds_.layout.edge_vertex[i]);
    advance();
    return make_set(std::move(attack));
  }

private:
  void advance() {
    const std::size_t m = pick_.size(), e = dds_.layout.edge_vertex.size();
    std::size_t i = m;
    while (i > 0 && pick_[i - 1] == e - m + i - 1) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    ++pick_[i - 1];
    for (std::size_t j = i; j < m; ++j) pick_[j] = pick_[j - 1] + 1;
  }

  const DdsInstance& dds_;
  std::vector<std::size_t> pick_;
  bool done_ = false;
};

inline std::vector<VertexSet> serious_attacks(const DdsInstance& dds) {
  std::vector<VertexSet> out;
  SeriousAttacks walk(dds);
  while (auto a = walk.next()) out.push_back(std::move(*a));
  return out;
}

struct Extraction {
  VertexSet deletion;        // source vertices with both copies defended
  VertexMultiset normalized;  // defense after the three moves
};

// Normalises a defense of G' with the backward-direction moves and reads off
// the deletion set:
//   1. a source vertex with neither v' nor v'' defended takes one defender
//      from I_v onto v';
//   2. every defender on I2 or E moves to Q2;
//   3. while V holds more than n + s defenders, some v with both copies
//      defended gives up its v'' defender to Q2.
inline Extraction extract_deletion_set(const DdsInstance& dds, VertexMultiset d) {
  d.check_in(dds.graph);
  const auto& L = dds.layout;
  auto to_q2 = [&](Vertex from, int copies) {
    if (copies == 0) return;
    if (L.q2.empty()) throw InputError("defense places defenders that must move to Q2, but Q2 is empty");
    for (int c = 0; c < copies; ++c) {
      Vertex target = L.q2.front();
      for (Vertex q : L.q2)
        if (d.count(q) < d.count(target)) target = q;
      d.remove(from, 1);
      d.add(target, 1);
    }
  };

  for (int v = 1; v <= dds.source_n; ++v) {
    if (d.count(L.v_prime[v]) > 0 || d.count(L.v_double[v]) > 0) continue;
    auto it = std::find_if(L.iv[v].begin(), L.iv[v].end(), [&](Vertex w) { return d.count(w) > 0; });
    if (it == L.iv[v].end())
      throw InputError("defense cannot come from a deletion set: no defender in I_v + {v', v''} for source vertex " +
                       std::to_string(v));
    d.remove(*it, 1);
    d.add(L.v_prime[v], 1);
  }

  for (Vertex w : L.i2) to_q2(w, d.count(w));
  for (Vertex w : L.edge_vertex) to_q2(w, d.count(w));

  auto in_v = [&] {
    long long c = 0;
    for (int v = 1; v <= dds.source_n; ++v) c += d.count(L.v_prime[v]) + d.count(L.v_double[v]);
    return c;
  };
  while (in_v() > dds.source_n + dds.s) {
    int pick = 0;
    for (int v = 1; v <= dds.source_n && pick == 0; ++v)
      if (d.count(L.v_prime[v]) > 0 && d.count(L.v_double[v]) > 0) pick = v;
    if (pick == 0) break;
    to_q2(L.v_double[pick], 1);
  }

  Extraction out;
  for (int v = 1; v <= dds.source_n; ++v)
    if (d.count(L.v_prime[v]) > 0 && d.count(L.v_double[v]) > 0) out.deletion.push_back(v);
  out.normalized = std::move(d);
  return out;
}

struct ForwardAudit {
  std::size_t serious_checked = 0;
  std::optional<VertexSet> uncountered_serious;  // first serious attack the defense fails
  std::optional<Violator> violator;              // from the pruned search over all of G'
  bool pass() const { return !uncountered_serious && !violator; }
};

// Builds the forward defense from X, matches it against every serious attack,
// then runs the pruned violator search over the whole construction.
inline ForwardAudit audit_forward(const CndInstance& inst, const DdsInstance& dds, const VertexSet& x, int jobs = 1) {
  auto d = proof_defense(inst, dds, x);
  ForwardAudit audit;
  SeriousAttacks walk(dds);
  while (auto a = walk.next()) {
    ++audit.serious_checked;
    if (!counters(dds.graph, d, *a)) {
      audit.uncountered_serious = *a;
      break;
    }
  }
  audit.violator = find_violator(dds.graph, d, dds.k, {SearchMode::pruned, jobs});
  return audit;
}

}  // namespace defdom
