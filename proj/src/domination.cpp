#include "bkneser/domination.hpp"

namespace bkneser {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick(const char* what) {
    if (++used_ > limit_) throw GuardExceeded("max_search_nodes", limit_, what);
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

bool cover_search(const Graph& g, const VertexSet& demand, VertexSet& covered, VertexSet& chosen, int depth,
                  Budget& budget) {
  budget.tick("gamma search");
  Vertex open = -1;
  for (Vertex v = demand.first(); v >= 0; v = demand.next(v))
    if (!covered.test(v)) {
      open = v;
      break;
    }
  if (open < 0) return true;
  if (depth == 0) return false;
  const auto& options = g.neighbors(open);
  for (Vertex y = options.first(); y >= 0; y = options.next(y)) {
    if (chosen.test(y)) continue;
    const VertexSet saved = covered;
    chosen.set(y);
    covered |= g.neighbors(y);
    if (cover_search(g, demand, covered, chosen, depth - 1, budget)) return true;
    chosen.reset(y);
    covered = saved;
  }
  return false;
}

bool independent_dominating_search(const Graph& g, VertexSet& dominated, VertexSet& chosen, int depth,
                                   Budget& budget) {
  budget.tick("independent domination search");
  const Vertex open = dominated.complement().first();
  if (open < 0) return true;
  if (depth == 0) return false;
  VertexSet options = g.neighbors(open);
  options.set(open);
  for (Vertex u = options.first(); u >= 0; u = options.next(u)) {
    if (g.neighbors(u).intersects(chosen)) continue;
    const VertexSet saved = dominated;
    chosen.set(u);
    dominated |= g.neighbors(u);
    dominated.set(u);
    if (independent_dominating_search(g, dominated, chosen, depth - 1, budget)) return true;
    chosen.reset(u);
    dominated = saved;
  }
  return false;
}

}  // namespace

DominationResult gamma_of(const Graph& g, const VertexSet& demand, const DominationGuard& guard) {
  for (Vertex v = demand.first(); v >= 0; v = demand.next(v))
    if (g.degree(v) == 0) throw DomainError("vertex " + std::to_string(v) + " has no neighbours and cannot be covered");
  Budget budget(guard.max_nodes);
  for (int depth = 0; depth <= g.order(); ++depth) {
    VertexSet covered(g.order());
    VertexSet chosen(g.order());
    if (cover_search(g, demand, covered, chosen, depth, budget)) return {depth, chosen, budget.used()};
  }
  throw DomainError("gamma search failed to terminate");
}

DominationResult independent_domination_number(const Graph& g, const DominationGuard& guard) {
  Budget budget(guard.max_nodes);
  for (int depth = 0; depth <= g.order(); ++depth) {
    VertexSet dominated(g.order());
    VertexSet chosen(g.order());
    if (independent_dominating_search(g, dominated, chosen, depth, budget)) return {depth, chosen, budget.used()};
  }
  throw DomainError("independent domination search failed to terminate");
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const DominationGuard& guard) {
  std::vector<VertexSet> out;
  const int n = g.order();
  // In the complement, the candidates compatible with v are its non-neighbours.
  std::vector<VertexSet> compatible(n);
  for (Vertex v = 0; v < n; ++v) {
    compatible[v] = g.neighbors(v).complement();
    compatible[v].reset(v);
  }
  auto expand = [&](auto&& self, VertexSet& current, VertexSet candidates, VertexSet excluded) -> void {
    if (candidates.empty()) {
      if (excluded.empty()) {
        if (out.size() >= guard.max_independent_sets)
          throw GuardExceeded("max_independent_sets", guard.max_independent_sets, "maximal independent set enumeration");
        out.push_back(current);
      }
      return;
    }
    // pivot: the vertex of P ∪ X compatible with the most candidates
    Vertex pivot = -1;
    int best = -1;
    for (const VertexSet* pool : {&candidates, &excluded})
      for (Vertex u = pool->first(); u >= 0; u = pool->next(u)) {
        const int c = (candidates & compatible[u]).count();
        if (c > best) best = c, pivot = u;
      }
    VertexSet branch = candidates;
    branch.subtract(compatible[pivot]);
    for (Vertex v = branch.first(); v >= 0; v = branch.next(v)) {
      current.set(v);
      self(self, current, candidates & compatible[v], excluded & compatible[v]);
      current.reset(v);
      candidates.reset(v);
      excluded.set(v);
    }
  };
  VertexSet current(n);
  expand(expand, current, VertexSet::full(n), VertexSet(n));
  return out;
}

TauResult tau_of(const Graph& g, const DominationGuard& guard) {
  VertexSet active(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) active.set(v);
  const Graph core = induced(g, active);
  const auto originals = active.members();
  auto lift = [&](const VertexSet& s) {
    VertexSet out(g.order());
    for (Vertex v = s.first(); v >= 0; v = s.next(v)) out.set(originals[v]);
    return out;
  };
  TauResult best{0, VertexSet(g.order()), VertexSet(g.order())};
  for (const auto& c : maximal_independent_sets(core, guard)) {
    const auto r = gamma_of(core, c, guard);
    if (r.size > best.value) best = {r.size, lift(c), lift(r.witness)};
  }
  return best;
}

}  // namespace bkneser
