#include <doctest.h>

#include <random>

#include "bkneser/hochster.hpp"
#include "bkneser/kneser.hpp"

using namespace bkneser;

namespace {

Graph ladder_rungs(int n) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Independent sets of the n-cycle: trace of [[1,1],[1,0]]^n.
std::uint64_t cycle_independent_sets(int n) {
  std::uint64_t a = 1, b = 1, c = 1, d = 0;
  std::uint64_t ra = 1, rb = 0, rc = 0, rd = 1;
  for (int i = 0; i < n; ++i) {
    const auto na = ra * a + rb * c, nb = ra * b + rb * d, nc = rc * a + rd * c, nd = rc * b + rd * d;
    ra = na, rb = nb, rc = nc, rd = nd;
  }
  return ra + rd;
}

}  // namespace

TEST_CASE("reduced H0 of restrictions") {
  const auto h = KneserGraph::build(5, 2);
  const int n = h.graph().order();
  const auto e = h.graph().edges().edges.front();
  CHECK(reduced_h0(h.graph(), VertexSet::of(n, {e.u, e.v})) == 1);
  CHECK(reduced_h0(h.graph(), h.left_side()) == 0);
  CHECK(reduced_h0(h.graph(), h.right_side()) == 0);

  const Vertex a = h.left_id(SubsetCode::of(5, {1, 2}));
  const Vertex b1 = h.right_id(SubsetCode::of(5, {1, 2, 3}));
  const Vertex b2 = h.right_id(SubsetCode::of(5, {1, 2, 4}));
  CHECK(reduced_h0(h.graph(), VertexSet::of(n, {a, b1, b2})) == 1);
  const Vertex b3 = h.right_id(SubsetCode::of(5, {1, 3, 4}));
  CHECK(reduced_h0(h.graph(), VertexSet::of(n, {a, b1, b3})) == 0);

  CHECK_THROWS_AS(reduced_h0(h.graph(), VertexSet(n)), DomainError);
}

TEST_CASE("linear strand oracle on H(5,2) and H(2,1)") {
  const auto h = KneserGraph::build(5, 2);
  CHECK(linear_strand_oracle(h.graph(), 1) == BigNat(30));
  CHECK(linear_strand_oracle(h.graph(), 2) == BigNat(60));
  CHECK(linear_strand_oracle(h.graph(), 3) == BigNat(20));
  CHECK(linear_strand_oracle(h.graph(), 4) == BigNat(0));

  const auto lr2 = KneserGraph::build(2, 1);
  CHECK(linear_strand_oracle(lr2.graph(), 1) == BigNat(2));
  CHECK(linear_strand_oracle(lr2.graph(), 2) == BigNat(0));
  CHECK(linear_strand_oracle(lr2.graph(), 7) == BigNat(0));
  CHECK_THROWS_AS(linear_strand_oracle(lr2.graph(), 0), DomainError);
  CHECK_THROWS_AS(linear_strand_oracle(h.graph(), 9, OracleGuards{1000}), GuardExceeded);
}

TEST_CASE("linear strand oracle is independent of worker count") {
  const auto g = KneserGraph::build(5, 2).graph();
  for (int i = 1; i <= 5; ++i) {
    const BigNat one = linear_strand_oracle(g, i, {}, 1);
    CHECK(linear_strand_oracle(g, i, {}, 2) == one);
    CHECK(linear_strand_oracle(g, i, {}, 8) == one);
  }
}

TEST_CASE("face enumeration") {
  const auto h = KneserGraph::build(4, 1);
  const auto simplex = enumerate_faces(h.graph(), h.left_side());
  CHECK(simplex.face_count() == 16);
  CHECK(simplex.dimension() == 3);

  const auto e = h.graph().edges().edges.front();
  const auto edge = enumerate_faces(h.graph(), VertexSet::of(8, {e.u, e.v}));
  CHECK(edge.face_count() == 3);
  REQUIRE(edge.strata.size() == 2);
  CHECK(edge.strata[0] == std::vector<std::uint64_t>{0});

  const auto c6 = KneserGraph::build(3, 1);
  CHECK(enumerate_faces(c6.graph(), VertexSet::full(6)).face_count() == cycle_independent_sets(6));
  CHECK(cycle_independent_sets(6) == 18);

  CHECK_THROWS_AS(enumerate_faces(KneserGraph::build(5, 2).graph(), VertexSet::full(20), OracleGuards{1, 100, 1}),
                  GuardExceeded);
}

TEST_CASE("reduced homology of small complexes") {
  ComplexSlice simplex{0b111, {{0}, {1, 2, 4}, {3, 5, 6}, {7}}};
  ComplexSlice two_points{0b11, {{0}, {1, 2}}};
  ComplexSlice triangle_boundary{0b111, {{0}, {1, 2, 4}, {3, 5, 6}}};
  ComplexSlice only_empty_face{0, {{0}}};
  ComplexSlice void_complex{};
  for (int p : {0, 2, 3}) {
    CHECK(reduced_homology_dims(simplex, p) == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(two_points, p) == std::vector<std::int64_t>{0, 1});
    CHECK(reduced_homology_dims(triangle_boundary, p) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(reduced_homology_dims(only_empty_face, p) == std::vector<std::int64_t>{1});
    CHECK(reduced_homology_dims(void_complex, p).empty());
  }
  // independence complex of two disjoint edges is a square
  const auto lr2 = KneserGraph::build(2, 1);
  const auto square = enumerate_faces(lr2.graph(), VertexSet::full(4));
  CHECK(reduced_homology_dims(square, 2) == std::vector<std::int64_t>{0, 0, 1});
  CHECK_THROWS_AS(reduced_homology_dims(square, 4), DomainError);
}

TEST_CASE("matrix rank depends on the field only where it should") {
  const std::vector<std::vector<int>> m{{1, 1}, {1, -1}};
  CHECK(matrix_rank(m, 0) == 2);
  CHECK(matrix_rank(m, 3) == 2);
  CHECK(matrix_rank(m, 2) == 1);
  const std::vector<std::vector<int>> singular{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  CHECK(matrix_rank(singular, 0) == 2);
  CHECK(matrix_rank(singular, 2) == 2);
  CHECK(matrix_rank({{2, 0}, {0, 1}}, 2) == 1);
  CHECK_THROWS_AS(matrix_rank(m, 6), DomainError);
}

TEST_CASE("Euler characteristic matches homology on every slice") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(5 + trial % 6, 0.35, rng);
    const auto slice = enumerate_faces(g, VertexSet::full(g.order()));
    for (int p : {0, 2}) {
      const auto dims = reduced_homology_dims(slice, p);
      std::int64_t faces = 0, homology = 0;
      for (std::size_t s = 1; s < slice.strata.size(); ++s)
        faces += (s % 2 == 1 ? 1 : -1) * static_cast<std::int64_t>(slice.strata[s].size());
      for (std::size_t s = 1; s < dims.size(); ++s) homology += (s % 2 == 1 ? 1 : -1) * dims[s];
      CHECK(faces == homology + 1);
    }
  }
}

TEST_CASE("slices with an isolated vertex are acyclic") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(8, 0.4, rng);
    for (std::uint32_t mask = 1; mask < (1u << g.order()); mask += 7) {
      VertexSet w(g.order());
      for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1u) w.set(v);
      bool cone = false;
      for (Vertex v = w.first(); v >= 0; v = w.next(v)) cone = cone || !g.neighbors(v).intersects(w);
      if (!cone) continue;
      for (auto d : reduced_homology_dims(enumerate_faces(g, w), 2)) CHECK(d == 0);
    }
  }
}

TEST_CASE("full tables of small Kneser graphs") {
  const auto lr2 = full_betti_oracle(KneserGraph::build(2, 1).graph(), 2);
  CHECK(lr2.at(0, 0) == BigNat(1));
  CHECK(lr2.at(1, 2) == BigNat(2));
  CHECK(lr2.at(2, 4) == BigNat(1));
  CHECK(lr2.entries().size() == 3);
  CHECK(pd_of(lr2) == 2);
  CHECK(reg_of(lr2) == 2);

  const auto c6 = full_betti_oracle(KneserGraph::build(3, 1).graph(), 2);
  CHECK(c6.pd() == 4);
  CHECK(c6.reg() == 2);

  const auto lr6 = full_betti_oracle(KneserGraph::build(4, 2).graph(), 2);
  CHECK(lr6.pd() == 6);
  CHECK(lr6.reg() == 6);
  // tensor product of six Koszul complexes on one edge each
  for (int i = 0; i <= 6; ++i) CHECK(lr6.at(i, 2 * i) == binom(6, i));
  CHECK(lr6.entries().size() == 7);

  CHECK_THROWS_AS(full_betti_oracle(KneserGraph::build(5, 2).graph(), 2), GuardExceeded);
}

TEST_CASE("pd and reg of the trivial table") {
  BettiTable t(3, 2);
  t.add(0, 0, BigNat(1));
  CHECK(pd_of(t) == 0);
  CHECK(reg_of(t) == 0);
}

TEST_CASE("characteristic 2 and 0 agree on the small Kneser instances") {
  for (auto [m, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}}) {
    const Graph g = KneserGraph::build(m, k).graph();
    const auto gf2 = full_betti_oracle(g, 2);
    const auto q = full_betti_oracle(g, 0);
    CHECK(gf2.entries() == q.entries());
  }
}

TEST_CASE("oracle invariants on random graphs") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(4 + trial % 6, 0.4, rng);
    const auto table = full_betti_oracle(g, 2);
    CHECK(table.at(0, 0) == BigNat(1));
    CHECK(table.at(1, 2) == BigNat(g.edge_count()));
    for (int i = 1; i < g.order(); ++i) CHECK(table.at(i, i + 1) == linear_strand_oracle(g, i));
    for (const auto& [key, value] : table.entries()) {
      CHECK(key.second <= g.order());
      CHECK(key.second >= key.first);
    }
    CHECK(full_betti_oracle(g, 2, {}, 3) == table);
  }
}

TEST_CASE("Betti table serialisation") {
  const auto t = full_betti_oracle(KneserGraph::build(2, 1).graph(), 2);
  CHECK(BettiTable::from_json(t.to_json()) == t);
  CHECK(t.to_text() ==
        "       0 1 2\n"
        "total: 1 2 1\n"
        "    0: 1 . .\n"
        "    1: . 2 .\n"
        "    2: . . 1\n");
  const auto lr6 = full_betti_oracle(KneserGraph::build(4, 2).graph(), 0);
  const auto back = BettiTable::from_json(lr6.to_json());
  CHECK(back == lr6);
  CHECK(back.field_char() == 0);
}
