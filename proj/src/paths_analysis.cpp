#include "copath/paths_analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace copath {

namespace {

// States lying on some accepting run: reachable from `start` and
// co-reachable to a state at vertex `w` (any state when `w` is null).
std::vector<bool> live_states(const AllowedAutomaton& aut, int start, const VertexId* w) {
  std::size_t n = aut.states().size();
  std::vector<bool> fwd(n, false), bwd(n, false);
  std::deque<int> queue{start};
  fwd[start] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int ei : aut.out(s)) {
      int t = aut.edges()[ei].to;
      if (!fwd[t]) {
        fwd[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<std::vector<int>> rev(n);
  for (const auto& e : aut.edges()) rev[e.to].push_back(e.from);
  for (std::size_t s = 0; s < n; ++s)
    if (!w || aut.states()[s].vertex == *w) {
      bwd[s] = true;
      queue.push_back(int(s));
    }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : rev[s])
      if (!bwd[t]) {
        bwd[t] = true;
        queue.push_back(t);
      }
  }
  std::vector<bool> live(n, false);
  for (std::size_t s = 0; s < n; ++s) live[s] = fwd[s] && bwd[s];
  return live;
}

// Kahn topological order of the live-induced subgraph; empty optional when
// that subgraph has a cycle.
std::optional<std::vector<int>> topo_order(const AllowedAutomaton& aut,
                                           const std::vector<bool>& live) {
  std::size_t n = aut.states().size();
  std::vector<int> indeg(n, 0);
  std::size_t live_count = 0;
  for (std::size_t s = 0; s < n; ++s)
    if (live[s]) ++live_count;
  for (const auto& e : aut.edges())
    if (live[e.from] && live[e.to]) ++indeg[e.to];
  std::deque<int> queue;
  for (std::size_t s = 0; s < n; ++s)
    if (live[s] && indeg[s] == 0) queue.push_back(int(s));
  std::vector<int> order;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (int ei : aut.out(s)) {
      const auto& e = aut.edges()[ei];
      if (!live[e.to]) continue;
      if (--indeg[e.to] == 0) queue.push_back(e.to);
    }
  }
  if (order.size() != live_count) return std::nullopt;
  return order;
}

}  // namespace

ExtNat path_count(const MonomialShape& shape, const VertexId& v, const VertexId& w) {
  shape.quiver().require_vertex(v);
  shape.quiver().require_vertex(w);
  const AllowedAutomaton& aut = shape.automaton();
  int start = aut.initial(v);
  auto live = live_states(aut, start, &w);
  if (!live[start]) return ExtNat(std::uint64_t(0));
  for (const auto& e : aut.edges())
    if (live[e.from] && live[e.to] && e.weight.is_omega()) return ExtNat::omega();
  auto order = topo_order(aut, live);
  if (!order) return ExtNat::omega();
  std::vector<BigInt> count(aut.states().size(), 0);
  count[start] = 1;
  for (int s : *order)
    for (int ei : aut.out(s)) {
      const auto& e = aut.edges()[ei];
      if (live[e.to]) count[e.to] += count[e.from] * e.weight.finite();
    }
  BigInt total = 0;
  for (std::size_t s = 0; s < count.size(); ++s)
    if (live[s] && aut.states()[s].vertex == w) total += count[s];
  return ExtNat(total);
}

PathSup max_len(const MonomialShape& shape, const VertexId& v, const VertexId& w) {
  shape.quiver().require_vertex(v);
  shape.quiver().require_vertex(w);
  const AllowedAutomaton& aut = shape.automaton();
  int start = aut.initial(v);
  auto live = live_states(aut, start, &w);
  if (!live[start]) return PathSup::nopath();
  auto order = topo_order(aut, live);
  if (!order) return PathSup::omega();
  std::vector<BigInt> longest(aut.states().size(), 0);
  for (int s : *order)
    for (int ei : aut.out(s)) {
      const auto& e = aut.edges()[ei];
      if (live[e.to]) longest[e.to] = std::max(longest[e.to], BigInt(longest[e.from] + 1));
    }
  BigInt best = 0;
  for (std::size_t s = 0; s < longest.size(); ++s)
    if (live[s] && aut.states()[s].vertex == w) best = std::max(best, longest[s]);
  return PathSup::finite(best);
}

ExtNat arrow_count(const Quiver& q, const VertexId& v, const VertexId& w) {
  q.require_vertex(v);
  q.require_vertex(w);
  ExtNat total{std::uint64_t(0)};
  for (const Bundle& b : q.bundles())
    if (b.src == v && b.tgt == w) total += b.multiplicity;
  return total;
}

namespace {

EnumerateResult enumerate_impl(const MonomialShape& shape, const VertexId& v, const VertexId* w,
                               std::size_t max_len, std::size_t max_count) {
  shape.quiver().require_vertex(v);
  if (w) shape.quiver().require_vertex(*w);
  const AllowedAutomaton& aut = shape.automaton();
  std::size_t n = aut.states().size();
  int start = aut.initial(v);

  // Unweighted distance from each state to the nearest accepting state,
  // for pruning; SIZE_MAX when none is reachable.
  std::vector<std::size_t> dist(n, SIZE_MAX);
  {
    std::vector<std::vector<int>> rev(n);
    for (const auto& e : aut.edges()) rev[e.to].push_back(e.from);
    std::deque<int> queue;
    for (std::size_t s = 0; s < n; ++s)
      if (!w || aut.states()[s].vertex == *w) {
        dist[s] = 0;
        queue.push_back(int(s));
      }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int t : rev[s])
        if (dist[t] == SIZE_MAX) {
          dist[t] = dist[s] + 1;
          queue.push_back(t);
        }
    }
  }

  EnumerateResult result;
  std::function<bool(int, const Path&)> dfs = [&](int state, const Path& prefix) -> bool {
    if (!w || aut.states()[state].vertex == *w) {
      if (result.paths.size() >= max_count) {
        result.truncated = true;
        return false;
      }
      result.paths.push_back(prefix);
    }
    if (prefix.length() >= max_len) return true;
    std::size_t remaining = max_len - prefix.length();
    for (int ei : aut.out(state)) {
      const auto& e = aut.edges()[ei];
      if (dist[e.to] == SIZE_MAX || dist[e.to] + 1 > remaining) continue;
      if (e.weight.is_omega())
        fail(Errc::UninstantiatedOmega,
             "bundle " + e.bundle + " has omega multiplicity; instantiate it first");
      if (e.index) {
        if (!dfs(e.to, prefix.extended({e.bundle, *e.index}, aut.states()[e.to].vertex)))
          return false;
      } else {
        std::uint64_t mult = std::uint64_t(e.weight.finite());
        for (std::uint64_t i = 0; i < mult; ++i)
          if (!dfs(e.to, prefix.extended({e.bundle, i}, aut.states()[e.to].vertex))) return false;
      }
    }
    return true;
  };
  dfs(start, Path::trivial(v));
  return result;
}

}  // namespace

EnumerateResult enumerate_paths(const MonomialShape& shape, const VertexId& v, const VertexId& w,
                                std::size_t max_len, std::size_t max_count) {
  return enumerate_impl(shape, v, &w, max_len, max_count);
}

EnumerateResult enumerate_from(const MonomialShape& shape, const VertexId& v, std::size_t max_len,
                               std::size_t max_count) {
  return enumerate_impl(shape, v, nullptr, max_len, max_count);
}

std::vector<PairStats> pair_stats(const MonomialShape& shape) {
  std::vector<PairStats> out;
  for (const VertexId& v : shape.quiver().vertices())
    for (const VertexId& w : shape.quiver().vertices())
      out.push_back({v, w, path_count(shape, v, w), max_len(shape, v, w)});
  return out;
}

}  // namespace copath
