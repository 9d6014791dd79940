#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkneser/combinatorics.hpp"

namespace bkneser {

using Vertex = int;

/// Dynamic bitset over the vertices [0, n) of a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n);
  static VertexSet of(int n, std::initializer_list<Vertex> members);
  static VertexSet of(int n, const std::vector<Vertex>& members);

  int universe() const { return n_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int count() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  /// Lowest member, or -1.
  Vertex first() const;
  /// Lowest member greater than v, or -1.
  Vertex next(Vertex v) const;
  std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  /// Removes the members of o.
  VertexSet& subtract(const VertexSet& o);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Side { kLeft, kRight };

struct VertexLabel {
  SubsetCode subset;
  Side side = Side::kLeft;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeSet {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  bool contains(const Edge& e) const;
  /// Endpoints of every edge, as a vertex set over a universe of n.
  VertexSet endpoints(int n) const;
};

/// Simple undirected graph with bitset adjacency rows. Optionally labelled
/// with subsets of a ground set (bipartite Kneser graphs carry labels).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  int degree(Vertex v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  /// All edges, sorted.
  EdgeSet edges() const;

  void add_edge(Vertex u, Vertex v);

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  void set_labels(std::vector<VertexLabel> labels);

  /// Adjacency row as a single word; requires order() <= 64.
  std::uint64_t row_word(Vertex v) const { return adj_[v].words().empty() ? 0 : adj_[v].words()[0]; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<VertexLabel> labels_;
};

Graph complement(const Graph& g);
/// Subgraph induced on w; vertices are renumbered in ascending original order.
Graph induced(const Graph& g, const VertexSet& w);
/// Subgraph formed by the given edges and their endpoints, renumbered ascending.
Graph edge_subgraph(const Graph& g, const EdgeSet& edges);

struct Components {
  int count = 0;
  std::vector<int> component_of;  // component id per vertex, ids in order of first vertex
};

Components components(const Graph& g);

/// Open neighborhood N(x): union of the neighborhoods of members of x.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// Closed neighborhood N[x] = N(x) with x.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
bool is_independent(const Graph& g, const VertexSet& x);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination order when chordal (eliminate front to back).
  std::vector<Vertex> elimination_order;
  /// Induced cycle of length >= 4 when not chordal.
  std::vector<Vertex> chordless_cycle;
};

/// Maximum cardinality search followed by a perfect elimination check.
ChordalityResult is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);
/// Independent checkers for the two witness kinds.
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);
bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Distinct edges e and f of g with disjoint endpoints inducing only e and f.
/// Throws DomainError when either pair is not an edge.
bool three_disjoint(const Graph& g, const Edge& e, const Edge& f);
bool is_induced_matching(const Graph& g, const EdgeSet& m);

struct SearchGuard {
  std::size_t max_edges = 64;
  std::uint64_t max_nodes = 200'000'000;
};

struct InducedMatching {
  int size = 0;
  EdgeSet witness;
  std::uint64_t nodes = 0;
};

/// Exact induced matching number by branch and bound over edges.
InducedMatching induced_matching_number(const Graph& g, const SearchGuard& guard = {});

/// Graphviz rendering; labelled vertices print as set literals.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace bkneser
