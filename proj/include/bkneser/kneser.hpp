#pragma once

#include <optional>
#include <vector>

#include "bkneser/graph.hpp"

namespace bkneser {

/// Bipartite Kneser graph H(m, k): k-subsets of [m] on the left, (m-k)-subsets
/// on the right, A ~ B iff A is contained in B. Each side is in colex order;
/// left ids are [0, C(m,k)), right ids are [C(m,k), 2 C(m,k)).
class KneserGraph {
 public:
  static KneserGraph build(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  const Graph& graph() const { return graph_; }
  int side_size() const { return static_cast<int>(left_.size()); }

  const std::vector<SubsetCode>& left() const { return left_; }
  const std::vector<SubsetCode>& right() const { return right_; }
  const SubsetCode& subset(Vertex v) const;
  bool is_left(Vertex v) const { return v < side_size(); }

  Vertex left_id(const SubsetCode& a) const;
  Vertex right_id(const SubsetCode& b) const;
  Edge edge(const SubsetCode& a, const SubsetCode& b) const;

  VertexSet left_side() const;
  VertexSet right_side() const;

 private:
  int m_ = 0;
  int k_ = 0;
  Graph graph_;
  std::vector<SubsetCode> left_;
  std::vector<SubsetCode> right_;
};

/// {A, A ∪ s} for every k-subset A of [m] \ s; requires |s| = m - 2k.
EdgeSet e_s_family(const KneserGraph& h, const SubsetCode& s);

struct MaximalityReport {
  bool maximal = false;
  /// For each non-member edge, a member it fails to be 3-disjoint with.
  std::vector<std::pair<Edge, Edge>> blockers;
  /// First non-member edge compatible with every member, when not maximal.
  std::optional<Edge> extension;
};

/// Checks that no edge outside `family` is 3-disjoint from all members.
MaximalityReport check_maximal_induced_matching(const Graph& g, const EdgeSet& family);

/// One star per left vertex; the stars partition E.
std::vector<EdgeSet> star_cover(const KneserGraph& h);

/// Double stars S_A ∪ S_{A ∪ {t}} over k-subsets A of [m] \ {t}; requires
/// m = 2k + 1. Each edge is kept only in the first double star containing it.
std::vector<EdgeSet> double_star_cover(const KneserGraph& h, int t);

/// Independent dominating set: left vertices missing T = s ∪ {j} and right
/// vertices containing T. Requires m > 2k, |s| = m - 2k, j not in s.
VertexSet dominating_w(const KneserGraph& h, const SubsetCode& s, int j);

struct DemandFamily {
  VertexSet demand;               // right vertices containing q
  std::vector<SubsetCode> cover;  // q ∪ {i} for i in s
};

/// Requires |q| = k - 1, |s| = k + 1 and s ∩ q = ∅.
DemandFamily gamma_demand_family(const KneserGraph& h, const SubsetCode& q, const SubsetCode& s);

/// The smallest (m - 2k)-subset in colex order, {1, ..., m-2k}.
SubsetCode canonical_s(const KneserGraph& h);

}  // namespace bkneser
