#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "defdom/defense.hpp"
#include "defdom/graph.hpp"
#include "defdom/matching.hpp"

namespace defdom {

struct SolveResult {
  long long optimum = 0;
  VertexMultiset witness;
  std::uint64_t explored = 0;  // search nodes visited
};

namespace detail {

// Depth-first search over multiplicity vectors c_1..c_n with lo_v <= c_v <= hi_v
// and sum exactly ell. Vertex v is assigned before v+1, larger multiplicities
// first, which visits multisets in lexicographic order of their sorted vertex
// sequences. A constraint is checked as soon as every vertex of its N[A] has
// been assigned.
class DefenseSearch {
public:
  struct Constraint {
    VertexSet attack;
    VertexSet closed;  // N[A]
    bool hall_only;    // true: |A| <= #_D(N[A]) suffices (all subsets are also constraints)
  };

  DefenseSearch(const Graph& g, std::vector<Constraint> constraints, std::vector<int> lo, std::vector<int> hi)
      : g_(g), lo_(std::move(lo)), hi_(std::move(hi)) {
    const int n = g.n();
    by_trigger_.resize(static_cast<std::size_t>(n) + 1);
    for (auto& c : constraints) {
      Vertex trigger = c.closed.empty() ? 1 : c.closed.back();
      if (n == 0) continue;
      by_trigger_[trigger].push_back(std::move(c));
    }
    suffix_lo_.assign(static_cast<std::size_t>(n) + 2, 0);
    suffix_hi_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (Vertex v = n; v >= 1; --v) {
      suffix_lo_[v] = suffix_lo_[v + 1] + lo_[v];
      suffix_hi_[v] = suffix_hi_[v + 1] + hi_[v];
    }
    counts_.assign(static_cast<std::size_t>(n) + 1, 0);
  }

  long long min_total() const { return suffix_lo_[1]; }
  long long max_total() const { return suffix_hi_[1]; }

  std::optional<VertexMultiset> search(long long ell) {
    if (g_.n() == 0) {
      if (ell != 0) return std::nullopt;
      return VertexMultiset{};
    }
    if (dfs(1, ell)) {
      VertexMultiset d;
      for (Vertex v = 1; v <= g_.n(); ++v) d.add(v, counts_[v]);
      return d;
    }
    return std::nullopt;
  }

  std::uint64_t explored() const { return explored_; }

private:
  bool satisfied(Vertex trigger) const {
    for (const auto& c : by_trigger_[trigger]) {
      long long cov = 0;
      for (Vertex u : c.closed) cov += counts_[u];
      if (cov < static_cast<long long>(c.attack.size())) return false;
      if (!c.hall_only) {
        VertexMultiset d;
        for (Vertex u : c.closed) d.add(u, counts_[u]);
        if (!counters(g_, d, c.attack)) return false;
      }
    }
    return true;
  }

  bool dfs(Vertex v, long long remaining) {
    ++explored_;
    if (v > g_.n()) return remaining == 0;
    int top = static_cast<int>(std::min<long long>(hi_[v], remaining - suffix_lo_[v + 1]));
    int bottom = static_cast<int>(std::max<long long>(lo_[v], remaining - suffix_hi_[v + 1]));
    for (int c = top; c >= bottom; --c) {
      counts_[v] = c;
      if (satisfied(v) && dfs(v + 1, remaining - c)) return true;
    }
    counts_[v] = 0;
    return false;
  }

  const Graph& g_;
  std::vector<int> lo_, hi_;
  std::vector<std::vector<Constraint>> by_trigger_;
  std::vector<long long> suffix_lo_, suffix_hi_;
  std::vector<int> counts_;
  std::uint64_t explored_ = 0;
};

// Every attack of size 1..k as a Hall constraint.
inline std::vector<DefenseSearch::Constraint> all_attack_constraints(const Graph& g, int k) {
  std::vector<DefenseSearch::Constraint> out;
  const int n = g.n();
  for (int m = 1; m <= std::min(k, n); ++m) {
    std::vector<Vertex> comb(static_cast<std::size_t>(m));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      out.push_back({comb, closed_neighborhood(g, comb), true});
      int i = m - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return out;
}

inline SolveResult ascending_search(const Graph& g, DefenseSearch& search, int k) {
  for (long long ell = search.min_total(); ell <= search.max_total(); ++ell) {
    if (auto d = search.search(ell)) {
      if (!good_defense(g, *d, k)) throw std::logic_error("solver produced a defense that fails verification");
      return SolveResult{ell, std::move(*d), search.explored()};
    }
  }
  throw std::logic_error("no defense found up to the trivial bound");
}

}  // namespace detail

// Smallest set defense (multiplicities 1) countering every k-attack.
inline SolveResult min_set_defense(const Graph& g, int k) {
  if (k < 1) throw InputError("attack bound k must be at least 1");
  const auto n = static_cast<std::size_t>(g.n());
  detail::DefenseSearch search(g, detail::all_attack_constraints(g, k), std::vector<int>(n + 1, 0),
                               std::vector<int>(n + 1, 1));
  return detail::ascending_search(g, search, k);
}

// Smallest multiset defense countering every k-attack. Multiplicities are
// capped at k: an attack has at most k vertices, so further copies at one
// vertex can never be matched.
inline SolveResult min_multiset_defense(const Graph& g, int k) {
  if (k < 1) throw InputError("attack bound k must be at least 1");
  const auto n = static_cast<std::size_t>(g.n());
  detail::DefenseSearch search(g, detail::all_attack_constraints(g, k), std::vector<int>(n + 1, 0),
                               std::vector<int>(n + 1, k));
  return detail::ascending_search(g, search, k);
}

// Smallest D with lower <= D <= upper countering each listed attack, or
// nothing when even D = upper fails.
inline std::optional<SolveResult> min_constrained_multiset(const Graph& g, std::span<const VertexSet> attacks,
                                                           const VertexMultiset& lower,
                                                           const VertexMultiset& upper) {
  lower.check_in(g);
  upper.check_in(g);
  if (!lower.subset_of(upper)) throw InputError("lower bound multiset is not contained in the upper bound");
  std::vector<detail::DefenseSearch::Constraint> constraints;
  for (const auto& a : attacks) {
    check_set(g, a);
    if (a.empty()) continue;
    constraints.push_back({a, closed_neighborhood(g, a), false});
  }
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> lo(n + 1, 0), hi(n + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    lo[v] = lower.count(v);
    hi[v] = upper.count(v);
  }
  detail::DefenseSearch search(g, std::move(constraints), lo, hi);
  for (long long ell = search.min_total(); ell <= search.max_total(); ++ell)
    if (auto d = search.search(ell)) return SolveResult{ell, std::move(*d), search.explored()};
  return std::nullopt;
}

// k = 1 defensive domination is plain domination.
inline SolveResult domination_number(const Graph& g) { return min_set_defense(g, 1); }

}  // namespace defdom
