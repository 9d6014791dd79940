#pragma once

#include <cstdint>

#include "bkneser/graph.hpp"

namespace bkneser {

struct DominationGuard {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_independent_sets = 1'000'000;
};

struct DominationResult {
  int size = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

/// gamma(C, G): fewest vertices X with C inside the open neighbourhood N(X).
/// Iterative deepening; branches on the neighbours of the first uncovered
/// demand vertex. Throws DomainError if some demand vertex is isolated.
DominationResult gamma_of(const Graph& g, const VertexSet& demand, const DominationGuard& guard = {});

/// i(G): smallest independent dominating set.
DominationResult independent_domination_number(const Graph& g, const DominationGuard& guard = {});

/// Maximal independent sets in lexicographic discovery order (Bron-Kerbosch
/// with pivoting on the complement).
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const DominationGuard& guard = {});

struct TauResult {
  int value = 0;
  VertexSet independent_set;  // an independent C attaining the maximum
  VertexSet cover;            // a minimum X with C inside N(X)
};

/// tau(G) = max gamma(C, G0) over independent C, with G0 the graph without
/// its isolated vertices. Only maximal independent sets are evaluated since
/// gamma is monotone under inclusion.
TauResult tau_of(const Graph& g, const DominationGuard& guard = {});

}  // namespace bkneser
