#include "bkneser/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bkneser {

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

VertexSet VertexSet::of(int n, const std::vector<Vertex>& members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw DomainError("vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
    s.set(v);
  }
  return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<Vertex> members) {
  return of(n, std::vector<Vertex>(members));
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + __builtin_ctzll(words_[i]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  ++v;
  if (v >= n_) return -1;
  std::size_t i = v >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w) return static_cast<Vertex>(i * 64 + __builtin_ctzll(w));
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(n_).subtract(*this); }

bool EdgeSet::contains(const Edge& e) const {
  const Edge n = Edge::of(e.u, e.v);
  return std::find(edges.begin(), edges.end(), n) != edges.end();
}

VertexSet EdgeSet::endpoints(int n) const {
  VertexSet s(n);
  for (const auto& e : edges) {
    s.set(e.u);
    s.set(e.v);
  }
  return s;
}

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw DomainError("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.edges.push_back({u, v});
  return out;
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
  if (static_cast<int>(labels.size()) != n_) throw DomainError("label count must equal vertex count");
  std::set<std::pair<int, std::uint64_t>> seen;
  for (const auto& l : labels)
    if (!seen.insert({static_cast<int>(l.side), l.subset.mask}).second)
      throw DomainError("duplicate label " + l.subset.to_string() + " within one side");
  labels_ = std::move(labels);
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  if (g.has_labels()) c.set_labels(g.labels());
  return c;
}

Graph induced(const Graph& g, const VertexSet& w) {
  const auto keep = w.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const auto& row = g.neighbors(keep[i]);
    for (Vertex v = row.next(keep[i]); v >= 0; v = row.next(v))
      if (index[v] >= 0) h.add_edge(static_cast<int>(i), index[v]);
  }
  if (g.has_labels()) {
    std::vector<VertexLabel> labels;
    for (Vertex v : keep) labels.push_back(g.labels()[v]);
    h.set_labels(std::move(labels));
  }
  return h;
}

Graph edge_subgraph(const Graph& g, const EdgeSet& edges) {
  const auto keep = edges.endpoints(g.order()).members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(keep.size()));
  for (const auto& e : edges.edges) {
    if (!g.has_edge(e.u, e.v)) throw DomainError("edge is not in the host graph");
    h.add_edge(index[e.u], index[e.v]);
  }
  if (g.has_labels()) {
    std::vector<VertexLabel> labels;
    for (Vertex v : keep) labels.push_back(g.labels()[v]);
    h.set_labels(std::move(labels));
  }
  return h;
}

Components components(const Graph& g) {
  Components out;
  out.component_of.assign(g.order(), -1);
  VertexSet unseen = VertexSet::full(g.order());
  for (Vertex s = unseen.first(); s >= 0; s = unseen.first()) {
    VertexSet frontier(g.order());
    frontier.set(s);
    unseen.reset(s);
    while (!frontier.empty()) {
      VertexSet reached(g.order());
      for (Vertex v = frontier.first(); v >= 0; v = frontier.next(v)) {
        out.component_of[v] = out.count;
        reached |= g.neighbors(v);
      }
      reached &= unseen;
      unseen.subtract(reached);
      frontier = std::move(reached);
    }
    ++out.count;
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.order());
  for (Vertex v = x.first(); v >= 0; v = x.next(v)) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) { return neighborhood(g, x) | x; }

bool is_independent(const Graph& g, const VertexSet& x) {
  for (Vertex v = x.first(); v >= 0; v = x.next(v))
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

bool three_disjoint(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v)) throw DomainError("three_disjoint: argument is not an edge");
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return false;
  return !g.has_edge(e.u, f.u) && !g.has_edge(e.u, f.v) && !g.has_edge(e.v, f.u) && !g.has_edge(e.v, f.v);
}

bool is_induced_matching(const Graph& g, const EdgeSet& m) {
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (!g.has_edge(m.edges[i].u, m.edges[i].v)) return false;
    for (std::size_t j = i + 1; j < m.edges.size(); ++j)
      if (!three_disjoint(g, m.edges[i], m.edges[j])) return false;
  }
  return true;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (g.has_labels()) {
      const auto& l = g.labels()[v];
      os << " [label=\"" << l.subset.to_string() << "\"" << (l.side == Side::kRight ? ", shape=box" : "") << "]";
    }
    os << ";\n";
  }
  for (const auto& e : g.edges().edges) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bkneser
