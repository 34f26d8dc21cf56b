#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "defdom/graph.hpp"

namespace defdom {

// Delete at most s vertices so that no K_t remains.
struct CndInstance {
  Graph graph;
  int s = 1;
  int t = 1;

  void validate() const {
    if (s < 1) throw InputError("clique deletion: s must be at least 1");
    if (t < 1) throw InputError("clique deletion: t must be at least 1");
    if (s > graph.n()) throw InputError("clique deletion: s exceeds the vertex count");
  }
};

inline bool kt_free_after(const CndInstance& inst, const VertexSet& x) {
  return !has_clique(delete_vertices(inst.graph, x).graph, inst.t);
}

// Smallest, then lexicographically least, X with |X| <= s and G \ X free of K_t.
inline std::optional<VertexSet> solve_cnd_bruteforce(const CndInstance& inst) {
  inst.validate();
  const int n = inst.graph.n();
  for (int size = 0; size <= inst.s; ++size) {
    std::vector<Vertex> comb(static_cast<std::size_t>(size));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      if (kt_free_after(inst, comb)) return comb;
      int i = size - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i + 1) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace defdom
