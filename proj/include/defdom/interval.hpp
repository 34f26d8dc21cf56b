#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "defdom/graph.hpp"
#include "defdom/graph_io.hpp"
#include "defdom/rational.hpp"

namespace defdom {

struct Interval {
  Rational left;
  Rational right;

  bool intersects(const Interval& o) const { return left <= o.right && o.left <= right; }

  // this is a proper subset of o
  bool strictly_inside(const Interval& o) const {
    return o.left <= left && right <= o.right && !(left == o.left && right == o.right);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Vertex v (1-based) is represented by intervals()[v - 1].
class IntervalInstance {
public:
  IntervalInstance() = default;

  explicit IntervalInstance(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i)
      if (intervals_[i].right < intervals_[i].left)
        throw InputError("interval of vertex " + std::to_string(i + 1) + " has left > right");
  }

  int n() const { return static_cast<int>(intervals_.size()); }

  const Interval& operator[](Vertex v) const {
    if (v < 1 || v > n()) throw InputError("unknown interval vertex " + std::to_string(v));
    return intervals_[static_cast<std::size_t>(v) - 1];
  }

  const std::vector<Interval>& intervals() const { return intervals_; }

private:
  std::vector<Interval> intervals_;
};

struct EndpointConflict {
  Vertex first;
  Vertex second;
  Rational value;
};

// Two distinct intervals sharing an endpoint value, lowest value first.
inline std::optional<EndpointConflict> find_endpoint_conflict(const IntervalInstance& inst) {
  std::vector<std::pair<Rational, Vertex>> ends;
  for (Vertex v = 1; v <= inst.n(); ++v) {
    ends.emplace_back(inst[v].left, v);
    if (inst[v].right != inst[v].left) ends.emplace_back(inst[v].right, v);
  }
  std::sort(ends.begin(), ends.end());
  for (std::size_t i = 1; i < ends.size(); ++i)
    if (ends[i].first == ends[i - 1].first && ends[i].second != ends[i - 1].second)
      return EndpointConflict{ends[i - 1].second, ends[i].second, ends[i].first};
  return std::nullopt;
}

inline std::string describe(const EndpointConflict& c) {
  return "intervals " + std::to_string(c.first) + " and " + std::to_string(c.second) + " share endpoint " +
         c.value.str();
}

// Distinct intervals must not share endpoints. A point interval [a, a] is fine.
inline void validate(const IntervalInstance& inst) {
  if (auto c = find_endpoint_conflict(inst)) throw InputError(describe(*c));
}

// Closed-interval intersection graph via an endpoint sweep. At equal
// coordinates left endpoints are processed first, so touching intervals meet.
inline Graph intersection_graph(const IntervalInstance& inst) {
  struct Event {
    Rational at;
    int kind;  // 0 = open, 1 = close
    Vertex v;
  };
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(inst.n()) * 2);
  for (Vertex v = 1; v <= inst.n(); ++v) {
    events.push_back({inst[v].left, 0, v});
    events.push_back({inst[v].right, 1, v});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return std::tie(a.at, a.kind, a.v) < std::tie(b.at, b.kind, b.v); });
  std::vector<Vertex> active;
  std::vector<std::size_t> slot(static_cast<std::size_t>(inst.n()) + 1, 0);
  std::vector<Edge> edges;
  for (const auto& e : events) {
    if (e.kind == 0) {
      for (Vertex u : active) edges.emplace_back(std::min(u, e.v), std::max(u, e.v));
      slot[e.v] = active.size();
      active.push_back(e.v);
    } else {
      std::size_t s = slot[e.v];
      active[s] = active.back();
      slot[active[s]] = s;
      active.pop_back();
    }
  }
  return Graph(inst.n(), edges);
}

// Breaks endpoint ties by an order-preserving perturbation: tied endpoints are
// spread over [value, next distinct value) ordered by vertex id, left before
// right. The result is accepted only when the intersection graph survives;
// otherwise the conflicting pair is reported.
inline IntervalInstance normalize(const IntervalInstance& inst) {
  auto conflict = find_endpoint_conflict(inst);
  if (!conflict) return inst;

  struct End {
    Rational value;
    Vertex v;
    int side;  // 0 = left, 1 = right
  };
  std::vector<End> ends;
  for (Vertex v = 1; v <= inst.n(); ++v) {
    ends.push_back({inst[v].left, v, 0});
    ends.push_back({inst[v].right, v, 1});
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    return std::tie(a.value, a.v, a.side) < std::tie(b.value, b.v, b.side);
  });
  std::vector<Interval> out(inst.intervals());
  std::size_t i = 0;
  while (i < ends.size()) {
    std::size_t j = i;
    while (j < ends.size() && ends[j].value == ends[i].value) ++j;
    bool shared = false;
    for (std::size_t t = i + 1; t < j; ++t) shared = shared || ends[t].v != ends[i].v;
    if (shared) {
      Rational gap = j < ends.size() ? ends[j].value - ends[i].value : Rational(1);
      auto size = static_cast<long long>(j - i);
      for (std::size_t t = i; t < j; ++t) {
        Rational moved = ends[t].value + gap * Rational(static_cast<long long>(t - i), size);
        auto& iv = out[static_cast<std::size_t>(ends[t].v) - 1];
        (ends[t].side == 0 ? iv.left : iv.right) = moved;
      }
    }
    i = j;
  }
  IntervalInstance perturbed(std::move(out));
  if (intersection_graph(perturbed).edges() != intersection_graph(inst).edges())
    throw InputError(describe(*conflict) + "; separating them changes the intersection graph");
  validate(perturbed);
  return perturbed;
}

// Repeatedly moves every copy of a defender u onto a defender v with
// I_u strictly inside I_v until no such pair is left. Size is preserved.
inline VertexMultiset properize(const IntervalInstance& inst, VertexMultiset d) {
  for (const auto& [v, c] : d.entries()) (void)inst[v];
  while (true) {
    std::optional<std::pair<Vertex, Vertex>> move;
    for (const auto& [u, cu] : d.entries()) {
      for (const auto& [v, cv] : d.entries())
        if (inst[u].strictly_inside(inst[v])) {
          move.emplace(u, v);
          break;
        }
      if (move) break;
    }
    if (!move) return d;
    int copies = d.count(move->first);
    d.remove(move->first, copies);
    d.add(move->second, copies);
  }
}

// Vertices with right endpoint <= x, sorted by left endpoint descending.
inline std::vector<Vertex> sorted_prefix(const IntervalInstance& inst, const Rational& x) {
  std::vector<Vertex> vx;
  for (Vertex v = 1; v <= inst.n(); ++v)
    if (inst[v].right <= x) vx.push_back(v);
  std::sort(vx.begin(), vx.end(), [&](Vertex a, Vertex b) {
    if (inst[a].left != inst[b].left) return inst[a].left > inst[b].left;
    return a < b;
  });
  return vx;
}

struct Block {
  Rational x;
  int size = 0;
  VertexSet members;
};

// B_{x,i}: the i vertices of V_x with the largest left endpoints.
inline Block block(const IntervalInstance& inst, const Rational& x, int i) {
  bool is_right_end = false;
  for (const auto& iv : inst.intervals()) is_right_end = is_right_end || iv.right == x;
  if (!is_right_end) throw InputError("block: " + x.str() + " is not a right endpoint");
  auto vx = sorted_prefix(inst, x);
  if (i < 1 || i > static_cast<int>(vx.size()))
    throw InputError("block: size " + std::to_string(i) + " outside 1.." + std::to_string(vx.size()));
  vx.resize(static_cast<std::size_t>(i));
  return Block{x, i, make_set(std::move(vx))};
}

// Defender copies whose interval meets some interval of `attack`.
inline long long covering_defenders(const IntervalInstance& inst, const VertexMultiset& d,
                                    std::span<const Vertex> attack) {
  long long total = 0;
  for (const auto& [v, c] : d.entries())
    for (Vertex a : attack)
      if (inst[v].intersects(inst[a])) {
        total += c;
        break;
      }
  return total;
}

inline std::vector<Rational> right_endpoints(const IntervalInstance& inst) {
  std::vector<Rational> xs;
  for (const auto& iv : inst.intervals()) xs.push_back(iv.right);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// #_D(N[B_{x,i}]) >= i for every right endpoint x and every i <= min(|V_x|, k).
inline bool is_block_defense(const IntervalInstance& inst, const VertexMultiset& d, int k) {
  for (const auto& x : right_endpoints(inst)) {
    auto vx = sorted_prefix(inst, x);
    const int top = std::min<int>(k, static_cast<int>(vx.size()));
    for (int i = 1; i <= top; ++i) {
      std::span<const Vertex> b(vx.data(), static_cast<std::size_t>(i));
      if (covering_defenders(inst, d, b) < i) return false;
    }
  }
  return true;
}

namespace detail {

inline void check_greedy_input(const IntervalInstance& inst, int k) {
  if (k < 1) throw InputError("attack bound k must be at least 1");
  validate(inst);
}

}  // namespace detail

// Line-by-line transcription of the greedy: O(n^2 k) with explicit blocks.
// Kept as the differential-testing reference for greedy_defense.
inline VertexMultiset greedy_defense_reference(const IntervalInstance& inst, int k) {
  detail::check_greedy_input(inst, k);
  std::vector<Vertex> order(static_cast<std::size_t>(inst.n()));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inst[a].right < inst[b].right; });
  VertexMultiset d;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    const Rational x = inst[order[i - 1]].right;
    auto vx = sorted_prefix(inst, x);
    const int top = std::min<int>(static_cast<int>(i), k);
    for (int m = 1; m <= top; ++m) {
      std::span<const Vertex> b(vx.data(), static_cast<std::size_t>(m));
      long long count = std::max<long long>(0, m - covering_defenders(inst, d, b));
      // Interval with left endpoint at most x and the largest right endpoint.
      Vertex pick = 0;
      for (Vertex v = 1; v <= inst.n(); ++v)
        if (inst[v].left <= x && (pick == 0 || inst[v].right > inst[pick].right)) pick = v;
      d.add(pick, static_cast<int>(count));
    }
  }
  return d;
}

// Greedy multiset defense in O(n log n + nk log n).
//
// Endpoints are replaced by their ranks. The sweep keeps the k intervals of
// V_x with the largest left endpoints. Defenders are appended in increasing
// order of both endpoints (each new pick has the largest right endpoint seen
// so far and the output is proper), so the defenders meeting one interval form
// a contiguous index range and #_D(N[B_{x,m}]) is the weight of a union of m
// ranges. Range starts are non-increasing in m, which lets the union grow by
// merging at its left end only.
inline VertexMultiset greedy_defense(const IntervalInstance& inst, int k) {
  detail::check_greedy_input(inst, k);
  const int n = inst.n();
  if (n == 0) return {};

  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(n) * 2);
  for (const auto& iv : inst.intervals()) {
    coords.push_back(iv.left);
    coords.push_back(iv.right);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  auto rank = [&](const Rational& r) {
    return static_cast<int>(std::lower_bound(coords.begin(), coords.end(), r) - coords.begin());
  };
  std::vector<int> lo(static_cast<std::size_t>(n) + 1), hi(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) {
    lo[v] = rank(inst[v].left);
    hi[v] = rank(inst[v].right);
  }

  std::vector<Vertex> by_right(static_cast<std::size_t>(n)), by_left(static_cast<std::size_t>(n));
  std::iota(by_right.begin(), by_right.end(), 1);
  std::iota(by_left.begin(), by_left.end(), 1);
  std::sort(by_right.begin(), by_right.end(), [&](Vertex a, Vertex b) { return hi[a] < hi[b]; });
  std::sort(by_left.begin(), by_left.end(), [&](Vertex a, Vertex b) { return lo[a] < lo[b]; });

  // Defenders in append order with prefix weights.
  std::vector<Vertex> def_vertex;
  std::vector<int> def_lo, def_hi;
  std::vector<long long> prefix{0};

  std::vector<Vertex> top;  // largest left endpoints first
  top.reserve(static_cast<std::size_t>(k) + 1);
  struct Range {
    int first, last;
  };
  std::vector<Range> ranges;  // back() holds the leftmost range
  std::size_t left_ptr = 0;
  Vertex reach = 0;  // interval with lo <= x and maximal hi

  for (int i = 1; i <= n; ++i) {
    const Vertex cur = by_right[static_cast<std::size_t>(i) - 1];
    const int x = hi[cur];
    while (left_ptr < by_left.size() && lo[by_left[left_ptr]] <= x) {
      Vertex v = by_left[left_ptr++];
      if (reach == 0 || hi[v] > hi[reach]) reach = v;
    }

    auto at = std::find_if(top.begin(), top.end(), [&](Vertex v) { return lo[v] < lo[cur]; });
    const int pos = static_cast<int>(at - top.begin()) + 1;
    if (pos > k) continue;  // every block containing cur is larger than k
    top.insert(at, cur);
    if (static_cast<int>(top.size()) > k) top.pop_back();

    long long need = 0;
    long long covered = 0;
    ranges.clear();
    const int blocks = static_cast<int>(top.size());
    for (int m = 1; m <= blocks; ++m) {
      const Vertex b = top[static_cast<std::size_t>(m) - 1];
      int first = static_cast<int>(std::lower_bound(def_hi.begin(), def_hi.end(), lo[b]) - def_hi.begin());
      int last = static_cast<int>(std::upper_bound(def_lo.begin(), def_lo.end(), hi[b]) - def_lo.begin()) - 1;
      if (first <= last) {
        while (!ranges.empty() && ranges.back().first <= last + 1) {
          last = std::max(last, ranges.back().last);
          covered -= prefix[static_cast<std::size_t>(ranges.back().last) + 1] -
                     prefix[static_cast<std::size_t>(ranges.back().first)];
          ranges.pop_back();
        }
        ranges.push_back({first, last});
        covered += prefix[static_cast<std::size_t>(last) + 1] - prefix[static_cast<std::size_t>(first)];
      }
      if (m >= pos) need = std::max(need, m - covered);
    }
    if (need == 0) continue;

    if (!def_vertex.empty() && def_vertex.back() == reach) {
      prefix.back() += need;
    } else {
      if (!def_vertex.empty() && (lo[reach] < def_lo.back() || hi[reach] < def_hi.back()))
        throw std::logic_error("greedy: defender order invariant broken");
      def_vertex.push_back(reach);
      def_lo.push_back(lo[reach]);
      def_hi.push_back(hi[reach]);
      prefix.push_back(prefix.back() + need);
    }
  }

  VertexMultiset d;
  for (std::size_t j = 0; j < def_vertex.size(); ++j)
    d.add(def_vertex[j], static_cast<int>(prefix[j + 1] - prefix[j]));
  return d;
}

// ---------------------------------------------------------------------------
// File format: "p intervals <n>" then n lines "<id> <l> <r>".

inline IntervalInstance read_intervals(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::optional<Interval>> slots;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0 || tok.size() != 3 || tok[1] != "intervals")
        throw InputError("expected 'p intervals <n>' at " + detail::line_context(lineno, line));
      n = detail::parse_integer(tok[2], "interval count");
      if (n < 0) throw InputError("negative interval count");
      slots.assign(static_cast<std::size_t>(n), std::nullopt);
      continue;
    }
    if (n < 0) throw InputError("interval before header at " + detail::line_context(lineno, line));
    if (tok.size() != 3) throw InputError("expected '<id> <l> <r>' at " + detail::line_context(lineno, line));
    auto id = detail::parse_integer(tok[0], "interval id");
    if (id < 1 || id > n) throw InputError("interval id out of range at " + detail::line_context(lineno, line));
    auto& slot = slots[static_cast<std::size_t>(id) - 1];
    if (slot) throw InputError("interval id " + tok[0] + " given twice");
    slot = Interval{Rational::parse(tok[1]), Rational::parse(tok[2])};
    ++seen;
  }
  if (n < 0) throw InputError("missing 'p intervals' header");
  if (static_cast<long long>(seen) != n) throw InputError("interval file lists fewer intervals than announced");
  std::vector<Interval> out;
  for (auto& s : slots) out.push_back(*s);
  return IntervalInstance(std::move(out));
}

inline IntervalInstance read_interval_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_intervals(in);
}

inline void write_intervals(std::ostream& out, const IntervalInstance& inst) {
  out << "p intervals " << inst.n() << '\n';
  for (Vertex v = 1; v <= inst.n(); ++v) out << v << ' ' << inst[v].left << ' ' << inst[v].right << '\n';
}

// Random instance with pairwise distinct integer endpoints: interval v starts
// at a uniform grid position in [0, span) and has grid length in [1, max_len];
// the low-order term 2v / 2v+1 separates coinciding grid values.
inline IntervalInstance random_intervals(int n, std::uint64_t seed, long long span = -1, long long max_len = -1) {
  if (n < 0) throw InputError("interval count must be non-negative");
  if (span < 0) span = std::max<long long>(1, 3LL * n);
  if (max_len < 0) max_len = 6;
  if (span < 1 || max_len < 1) throw InputError("span and max length must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> start(0, span - 1), length(1, max_len);
  const long long scale = 2LL * n + 2;
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    long long a = start(rng);
    long long len = length(rng);
    out.push_back({Rational(a * scale + 2 * v), Rational((a + len) * scale + 2 * v + 1)});
  }
  return IntervalInstance(std::move(out));
}

}  // namespace defdom
