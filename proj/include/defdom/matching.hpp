#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "defdom/graph.hpp"

namespace defdom {

struct BipartiteInstance {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;  // (left index, right index), 0-based

  void validate() const {
    if (left < 0 || right < 0) throw InputError("bipartite: negative side size");
    std::set<std::pair<int, int>> seen;
    for (auto e : edges) {
      if (e.first < 0 || e.first >= left || e.second < 0 || e.second >= right)
        throw InputError("bipartite: edge index out of range");
      if (!seen.insert(e).second) throw InputError("bipartite: duplicate edge");
    }
  }
};

struct Matching {
  int size = 0;
  std::vector<int> mate_of_left;  // right index or -1
};

// Augmenting-path maximum matching (Kuhn). Attack-sized inputs only.
inline Matching max_matching(const BipartiteInstance& b) {
  b.validate();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(b.left));
  for (auto [l, r] : b.edges) adj[l].push_back(r);
  std::vector<int> mate_right(static_cast<std::size_t>(b.right), -1);
  Matching m;
  m.mate_of_left.assign(static_cast<std::size_t>(b.left), -1);
  std::vector<int> seen(static_cast<std::size_t>(b.right), -1);

  auto augment = [&](auto&& self, int l, int stamp) -> bool {
    for (int r : adj[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (mate_right[r] < 0 || self(self, mate_right[r], stamp)) {
        mate_right[r] = l;
        m.mate_of_left[l] = r;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < b.left; ++l)
    if (augment(augment, l, l)) ++m.size;
  return m;
}

// Left = attacked vertices, right = one token per defender copy, edge when
// the defender sits in the attacker's closed neighbourhood.
inline BipartiteInstance attack_instance(const Graph& g, const VertexMultiset& d,
                                         std::span<const Vertex> attack) {
  BipartiteInstance b;
  b.left = static_cast<int>(attack.size());
  std::vector<Vertex> token_vertex;
  for (const auto& [v, c] : d.entries())
    for (int i = 0; i < c; ++i) token_vertex.push_back(v);
  b.right = static_cast<int>(token_vertex.size());
  for (int i = 0; i < b.left; ++i) {
    Vertex a = attack[static_cast<std::size_t>(i)];
    g.check_vertex(a);
    for (int r = 0; r < b.right; ++r) {
      Vertex v = token_vertex[static_cast<std::size_t>(r)];
      if (v == a || g.adjacent(a, v)) b.edges.emplace_back(i, r);
    }
  }
  return b;
}

// D counters A iff every attacker is matched to a distinct defender.
inline bool counters(const Graph& g, const VertexMultiset& d, std::span<const Vertex> attack) {
  if (attack.empty()) return true;
  return max_matching(attack_instance(g, d, attack)).size == static_cast<int>(attack.size());
}

}  // namespace defdom
