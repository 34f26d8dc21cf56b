#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "defdom/graph.hpp"

namespace defdom {

// |A| - #_D(N[A]). Positive means A cannot be countered.
inline long long hall_deficiency(const Graph& g, const VertexMultiset& d, std::span<const Vertex> attack) {
  return static_cast<long long>(attack.size()) - count_in(d, closed_neighborhood(g, attack));
}

enum class SearchMode { exhaustive, pruned };

struct ViolatorSearch {
  SearchMode mode = SearchMode::pruned;
  int jobs = 1;
};

struct Violator {
  VertexSet attack;
  int size = 0;
  long long deficiency = 0;
};

struct SearchStats {
  std::uint64_t attacks_checked = 0;
};

namespace detail {

// Per-query tables: defender count at every vertex and, for each vertex,
// the defended vertices of its closed neighbourhood.
class DeficiencyOracle {
public:
  DeficiencyOracle(const Graph& g, const VertexMultiset& d) : n_(g.n()) {
    d.check_in(g);
    count_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [v, c] : d.entries()) count_[v] = c;
    defended_nbrs_.resize(static_cast<std::size_t>(n_) + 1);
    closed_count_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      if (count_[v] > 0) defended_nbrs_[v].push_back(v);
      for (Vertex u : g.neighbors(v))
        if (count_[u] > 0) defended_nbrs_[v].push_back(u);
      for (Vertex u : defended_nbrs_[v]) closed_count_[v] += count_[u];
    }
  }

  int n() const { return n_; }

  // #_D(N[v])
  long long closed_count(Vertex v) const { return closed_count_[v]; }

  struct Scratch {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
  };

  Scratch scratch() const { return Scratch{std::vector<std::uint32_t>(static_cast<std::size_t>(n_) + 1, 0), 0}; }

  long long covered(std::span<const Vertex> attack, Scratch& s) const {
    if (++s.epoch == 0) {
      std::fill(s.stamp.begin(), s.stamp.end(), 0);
      s.epoch = 1;
    }
    long long total = 0;
    for (Vertex a : attack)
      for (Vertex u : defended_nbrs_[a])
        if (s.stamp[u] != s.epoch) {
          s.stamp[u] = s.epoch;
          total += count_[u];
        }
    return total;
  }

private:
  int n_;
  std::vector<long long> count_;
  std::vector<std::vector<Vertex>> defended_nbrs_;
  std::vector<long long> closed_count_;
};

// Enumerates, for a fixed size m, the candidate sets that are connected in the
// square graph (distance <= 2) restricted to the candidate vertices. Each set
// is produced exactly once, rooted at its smallest vertex (ESU enumeration).
class ConnectedViolatorSearch {
public:
  ConnectedViolatorSearch(const Graph& g, const DeficiencyOracle& oracle, int k)
      : oracle_(oracle), n_(g.n()) {
    // Candidates for the largest size; smaller sizes use subsets of these.
    in_pool_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v)
      if (oracle.closed_count(v) < k) in_pool_[v] = 1;
    square_.resize(static_cast<std::size_t>(n_) + 1);
    std::vector<Vertex> mark(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      if (!in_pool_[v]) continue;
      mark[v] = v;
      for (Vertex u : g.neighbors(v)) {
        if (mark[u] != v) {
          mark[u] = v;
          if (in_pool_[u]) square_[v].push_back(u);
        }
        for (Vertex w : g.neighbors(u))
          if (mark[w] != v) {
            mark[w] = v;
            if (in_pool_[w]) square_[v].push_back(w);
          }
      }
      std::sort(square_[v].begin(), square_[v].end());
    }
  }

  struct Worker {
    DeficiencyOracle::Scratch scratch;
    std::vector<int> blocked;  // > 0: in the current set or square-adjacent to it
    std::vector<Vertex> current;
    std::uint64_t checked = 0;
  };

  Worker worker() const {
    return Worker{oracle_.scratch(), std::vector<int>(static_cast<std::size_t>(n_) + 1, 0), {}, 0};
  }

  bool candidate(Vertex v, int m) const { return in_pool_[v] && oracle_.closed_count(v) < m; }

  // First violator (in this enumeration's order) of size m rooted at `root`.
  std::optional<VertexSet> search_root(Vertex root, int m, Worker& w) const {
    if (!candidate(root, m)) return std::nullopt;
    std::vector<Vertex> ext;
    for (Vertex u : square_[root])
      if (u > root && candidate(u, m)) ext.push_back(u);
    w.current.assign(1, root);
    block(root, +1, m, w);
    auto found = extend(ext, root, m, w);
    block(root, -1, m, w);
    return found;
  }

private:
  void block(Vertex v, int delta, int m, Worker& w) const {
    w.blocked[v] += delta;
    for (Vertex u : square_[v])
      if (candidate(u, m)) w.blocked[u] += delta;
  }

  std::optional<VertexSet> extend(std::vector<Vertex> ext, Vertex root, int m, Worker& w) const {
    if (static_cast<int>(w.current.size()) == m) {
      ++w.checked;
      if (static_cast<long long>(m) > oracle_.covered(w.current, w.scratch)) return make_set(w.current);
      return std::nullopt;
    }
    while (!ext.empty()) {
      Vertex x = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : square_[x])
        if (u > root && candidate(u, m) && w.blocked[u] == 0) next.push_back(u);
      w.current.push_back(x);
      block(x, +1, m, w);
      auto found = extend(std::move(next), root, m, w);
      block(x, -1, m, w);
      w.current.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const DeficiencyOracle& oracle_;
  int n_;
  std::vector<char> in_pool_;
  std::vector<std::vector<Vertex>> square_;
};

inline std::optional<Violator> exhaustive_violator(const Graph& g, const DeficiencyOracle& oracle, int k,
                                                   SearchStats* stats) {
  auto scratch = oracle.scratch();
  const int n = g.n();
  for (int m = 1; m <= std::min(k, n); ++m) {
    std::vector<Vertex> comb(static_cast<std::size_t>(m));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      if (stats) ++stats->attacks_checked;
      long long cov = oracle.covered(comb, scratch);
      if (m > cov) return Violator{comb, m, m - cov};
      int i = m - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - m + i + 1) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return std::nullopt;
}

inline std::optional<Violator> pruned_violator(const Graph& g, const DeficiencyOracle& oracle, int k, int jobs,
                                               SearchStats* stats) {
  ConnectedViolatorSearch search(g, oracle, k);
  const int n = g.n();
  for (int m = 1; m <= std::min(k, n); ++m) {
    std::optional<VertexSet> hit;
    if (jobs <= 1) {
      auto w = search.worker();
      for (Vertex r = 1; r <= n && !hit; ++r) hit = search.search_root(r, m, w);
      if (stats) stats->attacks_checked += w.checked;
    } else {
      // Roots are claimed in ascending order; the reported violator is the
      // one from the smallest root, so the answer matches the serial run.
      std::atomic<Vertex> next{1};
      std::atomic<Vertex> best{n + 1};
      std::vector<std::optional<VertexSet>> per_root(static_cast<std::size_t>(n) + 1);
      std::atomic<std::uint64_t> checked{0};
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
          auto w = search.worker();
          for (Vertex r = next++; r <= n; r = next++) {
            if (r > best.load()) break;
            auto found = search.search_root(r, m, w);
            if (found) {
              per_root[r] = std::move(found);
              Vertex cur = best.load();
              while (r < cur && !best.compare_exchange_weak(cur, r)) {
              }
            }
          }
          checked += w.checked;
        });
      }
      for (auto& t : pool) t.join();
      if (stats) stats->attacks_checked += checked.load();
      if (best.load() <= n) hit = per_root[best.load()];
    }
    if (hit) {
      auto scratch = oracle.scratch();
      long long cov = oracle.covered(*hit, scratch);
      return Violator{*hit, m, m - cov};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Some attack of size <= k with |A| > #_D(N[A]), if one exists.
//
// Exhaustive mode scans subsets by increasing size in lexicographic order and
// returns the first hit. Pruned mode only visits, for each size m, vertices v
// with #_D(N[v]) < m, and only sets whose closed neighbourhood is connected
// (connected at distance <= 2); an inclusion-minimal violator always has both
// properties, so the two modes agree on existence.
inline std::optional<Violator> find_violator(const Graph& g, const VertexMultiset& d, int k,
                                             ViolatorSearch strategy = {}, SearchStats* stats = nullptr) {
  if (k < 1) throw InputError("attack bound k must be at least 1");
  detail::DeficiencyOracle oracle(g, d);
  if (strategy.mode == SearchMode::exhaustive) return detail::exhaustive_violator(g, oracle, k, stats);
  return detail::pruned_violator(g, oracle, k, strategy.jobs, stats);
}

// D counters every k-attack.
inline bool good_defense(const Graph& g, const VertexMultiset& d, int k, ViolatorSearch strategy = {}) {
  return !find_violator(g, d, k, strategy).has_value();
}

// X subset of U with |N(X)| < |X| <= k, smallest size first, lexicographic.
// (U, W) must be a bipartition of G with both classes independent.
inline std::optional<VertexSet> hall_set(const Graph& g, std::span<const Vertex> u_class,
                                         std::span<const Vertex> w_class, int k) {
  if (k < 1) throw InputError("hall set: k must be at least 1");
  std::vector<int> side(static_cast<std::size_t>(g.n()) + 1, -1);
  for (Vertex v : u_class) {
    g.check_vertex(v);
    if (side[v] != -1) throw InputError("hall set: vertex listed twice");
    side[v] = 0;
  }
  for (Vertex v : w_class) {
    g.check_vertex(v);
    if (side[v] != -1) throw InputError("hall set: classes overlap at vertex " + std::to_string(v));
    side[v] = 1;
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (side[v] == -1) throw InputError("hall set: vertex " + std::to_string(v) + " is in neither class");
    for (Vertex x : g.neighbors(v))
      if (side[x] == side[v])
        throw InputError("hall set: edge " + std::to_string(v) + "-" + std::to_string(x) + " inside one class");
  }
  VertexSet us = make_set({u_class.begin(), u_class.end()});
  const int size = static_cast<int>(us.size());
  std::vector<std::uint32_t> stamp(static_cast<std::size_t>(g.n()) + 1, 0);
  std::uint32_t epoch = 0;
  for (int m = 1; m <= std::min(k, size); ++m) {
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ++epoch;
      int nbrs = 0;
      for (int i : idx)
        for (Vertex x : g.neighbors(us[static_cast<std::size_t>(i)]))
          if (stamp[x] != epoch) {
            stamp[x] = epoch;
            ++nbrs;
          }
      if (nbrs < m) {
        VertexSet out;
        for (int i : idx) out.push_back(us[static_cast<std::size_t>(i)]);
        return out;
      }
      int i = m - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == size - m + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace defdom
