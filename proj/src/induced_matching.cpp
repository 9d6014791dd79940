#include <algorithm>

#include "bkneser/graph.hpp"

namespace bkneser {

namespace {

// Maximum clique in the "3-disjoint" compatibility graph on edges, with a
// greedy colouring bound (MCQ style).
class MatchingSearch {
 public:
  MatchingSearch(std::vector<VertexSet> compatible, std::uint64_t max_nodes)
      : compatible_(std::move(compatible)), max_nodes_(max_nodes) {}

  void run() {
    const int n = static_cast<int>(compatible_.size());
    std::vector<int> current;
    expand(current, VertexSet::full(n));
  }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void colour_sort(const VertexSet& candidates, std::vector<int>& order, std::vector<int>& colour) const {
    VertexSet uncoloured = candidates;
    int k = 0;
    while (!uncoloured.empty()) {
      ++k;
      VertexSet cls = uncoloured;
      for (int v = cls.first(); v >= 0; v = cls.first()) {
        cls.reset(v);
        uncoloured.reset(v);
        cls.subtract(compatible_[v]);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(std::vector<int>& current, VertexSet candidates) {
    if (++nodes_ > max_nodes_)
      throw GuardExceeded("max_search_nodes", max_nodes_, "induced matching branch and bound");
    std::vector<int> order;
    std::vector<int> colour;
    colour_sort(candidates, order, colour);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + colour[i] <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      VertexSet next = candidates & compatible_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<VertexSet> compatible_;
  std::uint64_t max_nodes_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

InducedMatching induced_matching_number(const Graph& g, const SearchGuard& guard) {
  const auto edges = g.edges().edges;
  if (edges.size() > guard.max_edges)
    throw GuardExceeded("max_edges", guard.max_edges,
                        "induced matching search over " + std::to_string(edges.size()) + " edges");
  const int n = static_cast<int>(edges.size());
  std::vector<VertexSet> compatible(n, VertexSet(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (three_disjoint(g, edges[i], edges[j])) {
        compatible[i].set(j);
        compatible[j].set(i);
      }
  InducedMatching out;
  if (n == 0) return out;
  MatchingSearch search(std::move(compatible), guard.max_nodes);
  search.run();
  auto chosen = search.best();
  std::sort(chosen.begin(), chosen.end());
  for (int i : chosen) out.witness.edges.push_back(edges[i]);
  out.size = static_cast<int>(chosen.size());
  out.nodes = search.nodes();
  return out;
}

}  // namespace bkneser
