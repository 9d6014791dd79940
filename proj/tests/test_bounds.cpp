#include <doctest.h>

#include <random>

#include "bkneser/bounds.hpp"
#include "bkneser/errors.hpp"
#include "bkneser/hochster.hpp"

using namespace bkneser;

namespace {

BigNat n(std::uint64_t v) { return BigNat(v); }

Graph random_graph(int order, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool has_isolated(const Graph& g, const VertexSet& c) {
  for (Vertex v = c.first(); v >= 0; v = c.next(v))
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("reg_power_bounds examples") {
  auto r = reg_power_bounds(5, 2, 1);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(10));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));
  CHECK(r.justification.find("m=2k+1") != std::string::npos);

  r = reg_power_bounds(4, 2, 3);
  REQUIRE(r.exact);
  CHECK(*r.exact == n(10));
  CHECK(r.justification.find("m=2k:") != std::string::npos);

  r = reg_power_bounds(6, 2, 1);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(15));
  CHECK_FALSE(r.exact);

  for (int p = 1; p <= 10; ++p) {
    const auto a = reg_power_bounds(6, 2, p);
    CHECK(a.lower == n(2 * (p - 1) + 6));
    CHECK(a.upper == n(2 * (p - 1) + 15));
  }
  CHECK_THROWS_AS(reg_power_bounds(3, 2, 1), DomainError);
  CHECK_THROWS_AS(reg_power_bounds(5, 2, 0), DomainError);
}

TEST_CASE("reg_bounds examples") {
  auto r = reg_bounds(5, 2);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(7));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));

  r = reg_bounds(3, 1);
  CHECK(r.lower == n(2));
  CHECK(r.upper == n(2));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(2));

  r = reg_bounds(4, 2);
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));

  r = reg_bounds(7, 2);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(14));  // floor(43/3)
  CHECK_FALSE(r.exact);
}

TEST_CASE("pd_bounds examples") {
  auto r = pd_bounds(5, 2);
  CHECK(r.lower == n(14));
  CHECK(r.upper == n(16));
  CHECK_FALSE(r.exact);
  CHECK(r.lower <= n(15));
  CHECK(n(15) <= r.upper);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.front().find("rounded up to 4") != std::string::npos);

  for (int m = 2; m <= 8; ++m) {
    r = pd_bounds(m, 1);
    CHECK(r.lower == n(2 * m - 2));
    CHECK(r.upper == n(2 * m - 2));
    REQUIRE(r.exact);
    CHECK(*r.exact == n(2 * m - 2));
  }

  r = pd_bounds(4, 2);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(6));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));
}

TEST_CASE("bounds hold for large parameters") {
  for (int k = 1; k <= 6; ++k)
    for (int m = 2 * k; m <= 40; m += 3) {
      CHECK_NOTHROW(reg_bounds(m, k).validate());
      CHECK_NOTHROW(pd_bounds(m, k).validate());
      CHECK_NOTHROW(reg_power_bounds(m, k, 7).validate());
    }
}

TEST_CASE("oracle pd and reg fall inside the reported intervals") {
  for (auto [m, k] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}}) {
    const auto h = KneserGraph::build(m, k);
    const auto table = full_betti_oracle(h.graph(), 2);
    const BigNat pd(static_cast<std::uint64_t>(table.pd()));
    const BigNat reg(static_cast<std::uint64_t>(table.reg()));
    const auto pr = pd_bounds(m, k);
    const auto rr = reg_bounds(m, k);
    CHECK(pr.lower <= pd);
    CHECK(pd <= pr.upper);
    CHECK(rr.lower <= reg);
    CHECK(reg <= rr.upper);
    if (pr.exact) CHECK(*pr.exact == pd);
    if (rr.exact) CHECK(*rr.exact == reg);

    // |V| - i(G) <= pd
    const auto idom = independent_domination_number(h.graph());
    CHECK(h.graph().order() - idom.size <= table.pd());
    // pd <= |V| - tau(G)
    const auto tau = tau_of(h.graph());
    CHECK(table.pd() <= h.graph().order() - tau.value);
  }
}

TEST_CASE("certify_induced_matching") {
  auto h = KneserGraph::build(5, 2);
  auto r = certify_induced_matching(5, 2, SubsetCode::of(5, {5}));
  REQUIRE(r.certificates.size() == 2);
  CHECK(r.certificates[0].verified());
  CHECK(r.certificates[0].size() == 6);
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));
  CHECK(r.lower == n(6));

  r = certify_induced_matching(2, 1, SubsetCode::of(2, {}));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(2));

  CertifyOptions quick;
  quick.exhaustive = false;
  r = certify_induced_matching(6, 2, SubsetCode::of(6, {5, 6}), quick);
  CHECK(r.lower == n(6));
  CHECK_FALSE(r.exact);

  // guard-limited search leaves exactness absent and says why
  CertifyOptions tight;
  tight.matching_guard.max_edges = 10;
  r = certify_induced_matching(5, 2, SubsetCode::of(5, {5}), tight);
  CHECK_FALSE(r.exact);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.back().find("max_edges") != std::string::npos);

  const auto json = r.to_json(&h.graph());
  CHECK(json.find("\"exact\": null") != std::string::npos);
  CHECK(json.find("\"L{1,2}\"") != std::string::npos);
}

TEST_CASE("certify_cochordal_cover") {
  auto r = certify_cochordal_cover(5, 2, CoverVariant::kStars);
  CHECK(r.upper == n(10));
  CHECK(r.certificates.front().verified());
  CHECK(r.certificates.front().size() == 10);

  r = certify_cochordal_cover(5, 2, CoverVariant::kDoubleStars);
  CHECK(r.upper == n(6));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));

  r = certify_cochordal_cover(3, 1, CoverVariant::kDoubleStars);
  CHECK(r.upper == n(2));
  CHECK(r.certificates.front().size() == 2);

  CHECK_THROWS_AS(certify_cochordal_cover(6, 2, CoverVariant::kDoubleStars), DomainError);
}

TEST_CASE("certify_domination") {
  auto r = certify_domination(5, 2, SubsetCode::of(5, {1}), 2);
  CHECK(r.certificates.front().verified());
  CHECK(r.certificates.front().size() == 6);
  CHECK(r.upper == n(6));
  REQUIRE(r.exact);
  CHECK(*r.exact <= n(6));
  CHECK(r.lower <= *r.exact);

  r = certify_domination(4, 1, SubsetCode::of(4, {1, 2}), 3);
  CHECK(r.certificates.front().size() == 2);
  REQUIRE(r.exact);
  CHECK(*r.exact == n(2));

  r = certify_domination(4, 2, SubsetCode::of(4, {}), 0);
  CHECK(r.certificates.front().size() == 6);
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));
}

TEST_CASE("certify_gamma and gamma_of") {
  const auto r = certify_gamma(5, 2, SubsetCode::of(5, {1}), SubsetCode::of(5, {2, 3, 4}));
  CHECK(r.certificates.front().verified());
  CHECK(r.upper == n(3));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(3));

  const auto h = KneserGraph::build(5, 2);
  const auto fam = gamma_demand_family(h, SubsetCode::of(5, {1}), SubsetCode::of(5, {2, 3, 4}));
  const auto g = gamma_of(h.graph(), fam.demand);
  CHECK(g.size == 3);
  CHECK(fam.demand.is_subset_of(neighborhood(h.graph(), g.witness)));

  CHECK(gamma_of(h.graph(), VertexSet(h.graph().order())).size == 0);

  const auto h41 = KneserGraph::build(4, 1);
  const auto fam41 = gamma_demand_family(h41, SubsetCode::of(4, {}), SubsetCode::of(4, {1, 2}));
  CHECK(fam41.demand == h41.right_side());
  CHECK(gamma_of(h41.graph(), fam41.demand).size == 2);
}

TEST_CASE("gamma is monotone on nested demands") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(9, 0.35, rng);
    VertexSet small(g.order()), big(g.order());
    std::bernoulli_distribution coin(0.4);
    for (int v = 0; v < g.order(); ++v) {
      if (coin(rng)) big.set(v);
      if (big.test(v) && coin(rng)) small.set(v);
    }
    if (has_isolated(g, big)) continue;
    const auto a = gamma_of(g, small);
    const auto b = gamma_of(g, big);
    CHECK(a.size <= b.size);
    CHECK(small.is_subset_of(neighborhood(g, a.witness)));
    CHECK(static_cast<int>(b.witness.count()) == b.size);
  }
}

TEST_CASE("gamma_of matches subset enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(8, 0.3, rng);
    VertexSet c(g.order());
    std::bernoulli_distribution coin(0.5);
    for (int v = 0; v < g.order(); ++v)
      if (coin(rng) && g.degree(v) > 0) c.set(v);
    int best = g.order() + 1;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
      VertexSet x(g.order());
      for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1u) x.set(v);
      if (c.is_subset_of(neighborhood(g, x))) best = std::min(best, static_cast<int>(x.count()));
    }
    CHECK(gamma_of(g, c).size == best);
  }
}

TEST_CASE("independent domination matches subset enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(9, 0.3, rng);
    int best = g.order() + 1;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
      VertexSet x(g.order());
      for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1u) x.set(v);
      if (is_independent(g, x) && closed_neighborhood(g, x) == VertexSet::full(g.order()))
        best = std::min(best, static_cast<int>(x.count()));
    }
    CHECK(independent_domination_number(g).size == best);
  }
}

TEST_CASE("tau examples") {
  CHECK(tau_of(KneserGraph::build(2, 1).graph()).value == 2);
  Graph edge(2);
  edge.add_edge(0, 1);
  CHECK(tau_of(edge).value == 1);

  // tau(H(5,2)) >= gamma of the independent demand family
  const auto h = KneserGraph::build(5, 2);
  const auto fam = gamma_demand_family(h, SubsetCode::of(5, {1}), SubsetCode::of(5, {2, 3, 4}));
  CHECK(is_independent(h.graph(), fam.demand));
  CHECK(gamma_of(h.graph(), fam.demand).size >= 3);

  for (int m = 2; m <= 4; ++m) {
    const auto t = tau_of(KneserGraph::build(m, 1).graph());
    CHECK(t.value >= 2);
    CHECK(is_independent(KneserGraph::build(m, 1).graph(), t.independent_set));
  }
}

TEST_CASE("tau matches brute force over independent sets") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(8, 0.35, rng);
    VertexSet active(g.order());
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) active.set(v);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
      VertexSet c(g.order());
      for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1u) c.set(v);
      if (!c.is_subset_of(active) || !is_independent(g, c)) continue;
      best = std::max(best, gamma_of(g, c).size);
    }
    CHECK(tau_of(g).value == best);
  }
}

TEST_CASE("certify_regularity sandwich for H(5,2)") {
  const auto r = certify_regularity(5, 2);
  CHECK(r.lower == n(6));
  CHECK(r.upper == n(6));
  REQUIRE(r.exact);
  CHECK(*r.exact == n(6));
  for (const auto& c : r.certificates) CHECK(c.verified());
}

TEST_CASE("report rendering") {
  const auto r = reg_bounds(5, 2);
  const auto json = r.to_json();
  CHECK(json.find("\"invariant\": \"REG\"") != std::string::npos);
  CHECK(json.find("\"lower\": \"6\"") != std::string::npos);
  CHECK(json.find("\"exact\": \"6\"") != std::string::npos);
  CHECK(json.find("\"anchors\"") != std::string::npos);
  CHECK(r.to_text().find("upper: 7") != std::string::npos);

  BoundReport bad;
  bad.lower = n(5);
  bad.upper = n(4);
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
}
