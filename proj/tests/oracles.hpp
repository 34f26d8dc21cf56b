#pragma once

// Independent brute-force oracles. They use only the adjacency test of Graph
// and plain loops so they share no logic with the code under test.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "defdom/graph.hpp"

namespace oracle {

using defdom::Graph;
using defdom::Vertex;

// Calls fn on every subset of {1..n} of size lo..hi, ascending size.
inline void subsets(int n, int lo, int hi, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> cur;
  std::function<void(Vertex, int)> rec = [&](Vertex from, int want) {
    if (want == 0) {
      fn(cur);
      return;
    }
    for (Vertex v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1, want - 1);
      cur.pop_back();
    }
  };
  for (int size = lo; size <= hi; ++size) rec(1, size);
}

inline bool near(const Graph& g, Vertex a, Vertex b) { return a == b || g.adjacent(a, b); }

// Copies of D within distance one of some attacker.
inline long long covered(const Graph& g, const std::map<Vertex, int>& d, const std::vector<Vertex>& a) {
  long long total = 0;
  for (auto [v, c] : d)
    for (Vertex x : a)
      if (near(g, v, x)) {
        total += c;
        break;
      }
  return total;
}

// Attackers matched to distinct defender copies, by exhaustive assignment.
inline bool counters_bruteforce(const Graph& g, const std::map<Vertex, int>& d, const std::vector<Vertex>& a) {
  std::map<Vertex, int> left = d;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.size()) return true;
    for (auto& [v, c] : left) {
      if (c == 0 || !near(g, v, a[i])) continue;
      --c;
      bool ok = rec(i + 1);
      ++c;
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

// Every subset of A has at least as many defender copies around it.
inline bool hall_all_subsets(const Graph& g, const std::map<Vertex, int>& d, const std::vector<Vertex>& a) {
  const std::size_t m = a.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) sub.push_back(a[i]);
    if (covered(g, d, sub) < static_cast<long long>(sub.size())) return false;
  }
  return true;
}

inline bool violator_exists(const Graph& g, const std::map<Vertex, int>& d, int k) {
  bool found = false;
  subsets(g.n(), 1, std::min(k, g.n()), [&](const std::vector<Vertex>& a) {
    if (!found && covered(g, d, a) < static_cast<long long>(a.size())) found = true;
  });
  return found;
}

// Minimum multiset defense by enumerating every multiplicity vector with
// entries 0..cap, smallest total first.
inline long long min_defense(const Graph& g, int k, int cap) {
  const int n = g.n();
  long long best = -1;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  while (true) {
    long long total = 0;
    for (int x : c) total += x;
    if (best < 0 || total < best) {
      std::map<Vertex, int> d;
      for (int v = 1; v <= n; ++v)
        if (c[static_cast<std::size_t>(v) - 1] > 0) d[v] = c[static_cast<std::size_t>(v) - 1];
      if (!violator_exists(g, d, k)) best = total;
    }
    int i = 0;
    while (i < n && c[static_cast<std::size_t>(i)] == cap) c[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return best;
}

inline bool has_clique(const Graph& g, int t) {
  bool found = false;
  subsets(g.n(), t, t, [&](const std::vector<Vertex>& s) {
    if (found) return;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.adjacent(s[i], s[j])) return;
    found = true;
  });
  return found;
}

inline std::map<Vertex, int> as_map(const defdom::VertexMultiset& d) {
  std::map<Vertex, int> out;
  for (auto [v, c] : d.entries()) out[v] = c;
  return out;
}

}  // namespace oracle
