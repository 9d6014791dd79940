#include "bkneser/kneser.hpp"

#include <algorithm>

namespace bkneser {

namespace {

std::uint64_t full_mask(int m) { return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

void require_subset_size(const KneserGraph& h, const SubsetCode& s, int size, const char* what) {
  if (s.m != h.m()) throw DomainError(std::string(what) + ": ground set mismatch");
  if (s.size() != size)
    throw DomainError(std::string(what) + " must have " + std::to_string(size) + " elements, got " + s.to_string());
}

}  // namespace

KneserGraph KneserGraph::build(int m, int k) {
  if (k < 1) throw DomainError("H(m,k) requires k >= 1");
  if (m < 2 * k) throw DomainError("H(m,k) requires m >= 2k");
  if (m > kMaxGroundSet) throw DomainError("H(m,k) requires m <= 62");
  KneserGraph h;
  h.m_ = m;
  h.k_ = k;
  h.left_ = k_subsets(m, k);
  h.right_ = k_subsets(m, m - k);
  const int side = static_cast<int>(h.left_.size());
  h.graph_ = Graph(2 * side);
  const auto extras = k_subsets(m - k, m - 2 * k);
  for (int a = 0; a < side; ++a) {
    // positions outside A, in increasing order
    std::vector<int> outside;
    for (int e = 0; e < m; ++e)
      if (!((h.left_[a].mask >> e) & 1U)) outside.push_back(e);
    for (const auto& extra : extras) {
      std::uint64_t b = h.left_[a].mask;
      for (std::uint64_t rest = extra.mask; rest != 0; rest &= rest - 1) b |= std::uint64_t{1} << outside[__builtin_ctzll(rest)];
      h.graph_.add_edge(a, side + static_cast<Vertex>(colex_rank_mask(b)));
    }
  }
  std::vector<VertexLabel> labels;
  labels.reserve(2 * side);
  for (const auto& a : h.left_) labels.push_back({a, Side::kLeft});
  for (const auto& b : h.right_) labels.push_back({b, Side::kRight});
  h.graph_.set_labels(std::move(labels));
  return h;
}

const SubsetCode& KneserGraph::subset(Vertex v) const {
  return is_left(v) ? left_.at(v) : right_.at(v - side_size());
}

Vertex KneserGraph::left_id(const SubsetCode& a) const {
  if (a.m != m_ || a.size() != k_) throw DomainError("not a left vertex label: " + a.to_string());
  return static_cast<Vertex>(colex_rank(a));
}

Vertex KneserGraph::right_id(const SubsetCode& b) const {
  if (b.m != m_ || b.size() != m_ - k_) throw DomainError("not a right vertex label: " + b.to_string());
  return side_size() + static_cast<Vertex>(colex_rank(b));
}

Edge KneserGraph::edge(const SubsetCode& a, const SubsetCode& b) const {
  const Vertex u = left_id(a);
  const Vertex v = right_id(b);
  if (!graph_.has_edge(u, v)) throw DomainError(a.to_string() + " is not contained in " + b.to_string());
  return {u, v};
}

VertexSet KneserGraph::left_side() const {
  VertexSet s(graph_.order());
  for (Vertex v = 0; v < side_size(); ++v) s.set(v);
  return s;
}

VertexSet KneserGraph::right_side() const { return left_side().complement(); }

SubsetCode canonical_s(const KneserGraph& h) { return {full_mask(h.m() - 2 * h.k()), h.m()}; }

EdgeSet e_s_family(const KneserGraph& h, const SubsetCode& s) {
  require_subset_size(h, s, h.m() - 2 * h.k(), "S");
  EdgeSet out;
  for (const auto& a : h.left())
    if ((a.mask & s.mask) == 0) out.edges.push_back(h.edge(a, {a.mask | s.mask, h.m()}));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

MaximalityReport check_maximal_induced_matching(const Graph& g, const EdgeSet& family) {
  MaximalityReport report;
  for (const auto& f : g.edges().edges) {
    if (family.contains(f)) continue;
    auto blocker = std::find_if(family.edges.begin(), family.edges.end(),
                                [&](const Edge& e) { return !three_disjoint(g, e, f); });
    if (blocker == family.edges.end()) {
      report.extension = f;
      return report;
    }
    report.blockers.emplace_back(f, *blocker);
  }
  report.maximal = true;
  return report;
}

std::vector<EdgeSet> star_cover(const KneserGraph& h) {
  std::vector<EdgeSet> cover;
  const Graph& g = h.graph();
  for (Vertex a = 0; a < h.side_size(); ++a) {
    EdgeSet star;
    const auto& row = g.neighbors(a);
    for (Vertex b = row.first(); b >= 0; b = row.next(b)) star.edges.push_back({a, b});
    cover.push_back(std::move(star));
  }
  return cover;
}

std::vector<EdgeSet> double_star_cover(const KneserGraph& h, int t) {
  if (h.m() != 2 * h.k() + 1) throw DomainError("double star cover requires m = 2k + 1");
  if (t < 1 || t > h.m()) throw DomainError("t must be an element of [m]");
  const Graph& g = h.graph();
  const std::uint64_t t_bit = std::uint64_t{1} << (t - 1);
  std::vector<bool> taken(g.order() * static_cast<std::size_t>(g.order()), false);
  auto claim = [&](Edge e, EdgeSet& into) {
    const std::size_t slot = static_cast<std::size_t>(e.u) * g.order() + e.v;
    if (taken[slot]) return;
    taken[slot] = true;
    into.edges.push_back(e);
  };
  std::vector<EdgeSet> cover;
  for (const auto& a : h.left()) {
    if (a.mask & t_bit) continue;
    const Vertex av = h.left_id(a);
    const Vertex bv = h.right_id({a.mask | t_bit, h.m()});
    EdgeSet part;
    const auto& arow = g.neighbors(av);
    for (Vertex v = arow.first(); v >= 0; v = arow.next(v)) claim(Edge::of(av, v), part);
    const auto& brow = g.neighbors(bv);
    for (Vertex v = brow.first(); v >= 0; v = brow.next(v)) claim(Edge::of(v, bv), part);
    std::sort(part.edges.begin(), part.edges.end());
    cover.push_back(std::move(part));
  }
  return cover;
}

VertexSet dominating_w(const KneserGraph& h, const SubsetCode& s, int j) {
  if (h.m() == 2 * h.k())
    throw DomainError("dominating_w requires m > 2k; for m = 2k one full side dominates");
  require_subset_size(h, s, h.m() - 2 * h.k(), "S");
  if (j < 1 || j > h.m() || s.contains(j)) throw DomainError("j must be an element of [m] outside S");
  const std::uint64_t t = s.mask | (std::uint64_t{1} << (j - 1));
  VertexSet w(h.graph().order());
  for (Vertex v = 0; v < h.graph().order(); ++v) {
    const std::uint64_t label = h.subset(v).mask;
    if (h.is_left(v) ? (label & t) == 0 : (label & t) == t) w.set(v);
  }
  return w;
}

DemandFamily gamma_demand_family(const KneserGraph& h, const SubsetCode& q, const SubsetCode& s) {
  require_subset_size(h, q, h.k() - 1, "Q");
  require_subset_size(h, s, h.k() + 1, "S");
  if (q.mask & s.mask) throw DomainError("Q and S must be disjoint");
  DemandFamily out{VertexSet(h.graph().order()), {}};
  for (Vertex v = h.side_size(); v < h.graph().order(); ++v)
    if (q.is_subset_of(h.subset(v))) out.demand.set(v);
  for (int i : s.elements()) out.cover.push_back({q.mask | (std::uint64_t{1} << (i - 1)), h.m()});
  return out;
}

}  // namespace bkneser
