#include <algorithm>
#include <deque>

#include "bkneser/graph.hpp"

namespace bkneser {

namespace {

// Maximum cardinality search. Returns vertices in visit order; the reverse is
// a perfect elimination order iff the graph is chordal.
std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = true;
    visit.push_back(best);
    const auto& row = g.neighbors(best);
    for (Vertex u = row.first(); u >= 0; u = row.next(u))
      if (!done[u]) ++weight[u];
  }
  return visit;
}

// Shortest path from `from` to `to` avoiding `blocked`; empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& blocked) {
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    const auto& row = g.neighbors(v);
    for (Vertex u = row.first(); u >= 0; u = row.next(u))
      if (parent[u] < 0 && !blocked.test(u)) {
        parent[u] = v;
        queue.push_back(u);
      }
  }
  if (parent[to] < 0) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// A cycle of length >= 4 through `apex` whose neighbors on the cycle are the
// non-adjacent pair (a, b): a shortest a-b path outside N[apex] closes it
// without chords.
std::vector<Vertex> cycle_through(const Graph& g, Vertex apex, Vertex a, Vertex b) {
  VertexSet blocked = g.neighbors(apex);
  blocked.set(apex);
  blocked.reset(a);
  blocked.reset(b);
  auto path = shortest_path(g, a, b, blocked);
  if (path.empty()) return {};
  path.insert(path.begin(), apex);
  return path;
}

std::vector<Vertex> find_chordless_cycle(const Graph& g, Vertex hint) {
  const int n = g.order();
  for (int offset = 0; offset < n; ++offset) {
    const Vertex apex = (hint + offset) % n;
    const auto nbrs = g.neighbors(apex).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        auto cycle = cycle_through(g, apex, nbrs[i], nbrs[j]);
        if (!cycle.empty()) return cycle;
      }
  }
  return {};
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] >= 0) return false;
    position[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> later;
    const auto& row = g.neighbors(order[i]);
    for (Vertex u = row.first(); u >= 0; u = row.next(u))
      if (position[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult out;
  auto visit = mcs_order(g);
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  const int n = g.order();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  // Tarjan-Yannakakis check: the earliest later neighbor must see the rest.
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    Vertex parent = -1;
    const auto& row = g.neighbors(v);
    for (Vertex u = row.first(); u >= 0; u = row.next(u))
      if (position[u] > i && (parent < 0 || position[u] < position[parent])) parent = u;
    if (parent < 0) continue;
    for (Vertex u = row.first(); u >= 0; u = row.next(u))
      if (position[u] > i && u != parent && !g.has_edge(parent, u)) {
        out.chordal = false;
        out.chordless_cycle = cycle_through(g, v, parent, u);
        if (out.chordless_cycle.empty()) out.chordless_cycle = find_chordless_cycle(g, v);
        return out;
      }
  }
  out.chordal = true;
  out.elimination_order = std::move(order);
  return out;
}

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)).chordal; }

}  // namespace bkneser
