#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defdom {

// Raised for malformed input: unknown vertices, violated preconditions,
// unparsable files. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;

// Sorted, duplicate-free list of vertex identities.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on vertices 1..n. Adjacency lists are sorted.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw InputError("graph: negative vertex count");
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  int n() const { return n_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 1; v <= n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  void check_vertex(Vertex v) const {
    if (!contains(v)) {
      throw InputError("unknown vertex " + std::to_string(v) + " (graph has " +
                       std::to_string(n_) + " vertices)");
    }
  }

  // Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }

  const std::string& label(Vertex v) const {
    check_vertex(v);
    if (labels_.empty()) throw InputError("graph carries no role labels");
    return labels_[v];
  }

  // Labels must cover every vertex exactly once; pass an n-element vector
  // indexed from vertex 1.
  void set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
      throw InputError("graph: label count does not match vertex count");
    labels_.assign(1, std::string());
    for (auto& l : labels) {
      if (l.empty()) throw InputError("graph: empty role label");
      labels_.push_back(std::move(l));
    }
  }

  const std::vector<std::string>& labels() const { return labels_; }

private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_{1};
  std::vector<std::string> labels_;  // index 0 unused when non-empty
};

// Multiset of vertices with positive multiplicities.
class VertexMultiset {
public:
  VertexMultiset() = default;

  static VertexMultiset from_set(std::span<const Vertex> set) {
    VertexMultiset m;
    for (Vertex v : set) m.add(v, 1);
    return m;
  }

  void add(Vertex v, int copies = 1) {
    if (copies < 0) throw InputError("multiset: negative multiplicity");
    if (copies == 0) return;
    counts_[v] += copies;
  }

  // Removes up to `copies` copies; returns how many were removed.
  int remove(Vertex v, int copies = 1) {
    auto it = counts_.find(v);
    if (it == counts_.end()) return 0;
    int taken = std::min(copies, it->second);
    it->second -= taken;
    if (it->second == 0) counts_.erase(it);
    return taken;
  }

  int count(Vertex v) const {
    auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
  }

  long long total() const {
    long long t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
  }

  bool empty() const { return counts_.empty(); }

  // Ascending by vertex.
  const std::map<Vertex, int>& entries() const { return counts_; }

  VertexSet support() const {
    VertexSet s;
    for (const auto& [v, c] : counts_) s.push_back(v);
    return s;
  }

  bool is_set() const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](const auto& e) { return e.second == 1; });
  }

  // Componentwise containment.
  bool subset_of(const VertexMultiset& other) const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [&](const auto& e) { return other.count(e.first) >= e.second; });
  }

  void check_in(const Graph& g) const {
    for (const auto& [v, c] : counts_) g.check_vertex(v);
  }

  friend bool operator==(const VertexMultiset&, const VertexMultiset&) = default;

private:
  std::map<Vertex, int> counts_;
};

inline void check_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
}

// N[S] = union of closed neighborhoods.
inline VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> mark(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    mark[v] = 1;
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  }
  VertexSet out;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  const Vertex one[] = {v};
  return closed_neighborhood(g, one);
}

// #_D(X): defender copies located inside X.
inline long long count_in(const VertexMultiset& d, std::span<const Vertex> x) {
  long long total = 0;
  for (Vertex v : x) total += d.count(v);
  return total;
}

struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new id] = old id; slot 0 unused
};

// Induced subgraph on V(G) \ X, renumbered 1..n' in ascending original order.
// Labels travel with their vertices.
inline Subgraph delete_vertices(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> gone(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : x) {
    g.check_vertex(v);
    gone[v] = 1;
  }
  std::vector<Vertex> fresh(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<Vertex> original{0};
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (gone[v]) continue;
    original.push_back(v);
    fresh[v] = static_cast<Vertex>(original.size() - 1);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) edges.emplace_back(fresh[u], fresh[v]);
  Subgraph out{Graph(static_cast<int>(original.size() - 1), edges), std::move(original)};
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < out.original.size(); ++i) labels.push_back(g.label(out.original[i]));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

// Induced subgraph on the listed vertices (same renumbering convention).
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<char> stay(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : keep) {
    g.check_vertex(v);
    stay[v] = 1;
  }
  VertexSet drop;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (!stay[v]) drop.push_back(v);
  return delete_vertices(g, drop);
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace detail {

// Fixed-width bitset over 0..size-1 backed by 64-bit words.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Lowest set index; call only when !none().
  std::size_t first() const {
    std::size_t w = 0;
    while (words_[w] == 0) ++w;
    return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  Bits& and_not(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

// Branch and bound with greedy colouring bounds (Tomita-style) that stops as
// soon as a clique of the target size is found.
class CliqueSearch {
public:
  CliqueSearch(const Graph& g, std::vector<Vertex> pool, int target)
      : target_(target), verts_(std::move(pool)) {
    const std::size_t m = verts_.size();
    std::vector<int> index(static_cast<std::size_t>(g.n()) + 1, -1);
    for (std::size_t i = 0; i < m; ++i) index[verts_[i]] = static_cast<int>(i);
    adj_.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
      for (Vertex u : g.neighbors(verts_[i]))
        if (index[u] >= 0) adj_[i].set(static_cast<std::size_t>(index[u]));
  }

  std::optional<VertexSet> run() {
    Bits candidates(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) candidates.set(i);
    if (expand(candidates)) {
      VertexSet out;
      for (std::size_t i : current_) out.push_back(verts_[i]);
      return make_set(std::move(out));
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool expand(Bits candidates) {
    ++nodes_;
    if (static_cast<int>(current_.size()) >= target_) return true;
    std::vector<std::size_t> order;
    std::vector<int> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t pos = order.size(); pos-- > 0;) {
      if (static_cast<int>(current_.size()) + colour[pos] < target_) return false;
      std::size_t v = order[pos];
      current_.push_back(v);
      if (expand(candidates & adj_[v])) return true;
      current_.pop_back();
      candidates.reset(v);
    }
    return false;
  }

  // Greedy sequential colouring; colour[i] bounds the clique size within
  // order[0..i].
  void colour_sort(const Bits& candidates, std::vector<std::size_t>& order,
                   std::vector<int>& colour) const {
    Bits uncoloured = candidates;
    int c = 0;
    while (!uncoloured.none()) {
      ++c;
      Bits q = uncoloured;
      while (!q.none()) {
        std::size_t v = q.first();
        q.reset(v);
        q.and_not(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  int target_;
  std::vector<Vertex> verts_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> current_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact K_t search. Vertices of degree < t-1 are peeled first (t-1 core),
// then a colouring-bounded branch and bound runs on what survives.
inline std::optional<VertexSet> find_clique(const Graph& g, int t) {
  if (t < 1) throw InputError("clique size must be at least 1");
  if (t > g.n()) return std::nullopt;
  if (t == 1) return VertexSet{1};
  std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1);
  std::vector<char> alive(static_cast<std::size_t>(g.n()) + 1, 1);
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < t - 1) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (alive[u] && --deg[u] < t - 1) {
        alive[u] = 0;
        stack.push_back(u);
      }
  }
  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (alive[v]) pool.push_back(v);
  if (static_cast<int>(pool.size()) < t) return std::nullopt;
  // Degree-descending order helps the colouring bound.
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return detail::CliqueSearch(g, std::move(pool), t).run();
}

inline bool has_clique(const Graph& g, int t) { return find_clique(g, t).has_value(); }

// ---------------------------------------------------------------------------
// Generators. Vertex 1 is the star centre; leaves are 2..t+1.

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph star_graph(int leaves) {
  if (leaves < 1) throw InputError("star needs at least one leaf");
  std::vector<Edge> e;
  for (Vertex v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph(leaves + 1, e);
}

inline Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

// G(n, p) with a seeded mt19937_64; identical seeds give identical graphs.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);           // outer cycle
    e.emplace_back(i + 1, i + 6);                     // spokes
    e.emplace_back(i + 6, (i + 2) % 5 + 6);           // inner pentagram
  }
  return Graph(10, e);
}

}  // namespace defdom
