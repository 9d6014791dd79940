#include "bkneser/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bkneser {

namespace {

constexpr const char* kIndLowerAnchor = "reg(R/I^p) >= 2(p-1) + ind(G)";
constexpr const char* kCochordUpperAnchor = "reg(R/I^p) <= 2(p-1) + cochord(G) for bipartite G";
constexpr const char* kFamilyAnchor = "ind(H(m,k)) >= C(2k,k): {A, A u S} over k-subsets A of [m] \\ S";
constexpr const char* kStarAnchor = "cochord(H(m,k)) <= C(m,k): one star per k-subset";
constexpr const char* kDoubleStarAnchor = "cochord(H(2k+1,k)) <= C(2k,k): double stars S_A u S_{A u {t}}";
constexpr const char* kHamiltonAnchor =
    "reg(R/I(G)) <= floor((|V|+1)/3) for G with a Hamiltonian path; H(m,k) is Hamiltonian for m >= 2k+1";
constexpr const char* kCochordAtLeastInd = "cochord(G) >= ind(G)";
constexpr const char* kMatchingHalf = "ind(G) <= |V|/2";
constexpr const char* kPdDominationAnchor = "pd(G) >= |V| - i(G)";
constexpr const char* kWAnchor = "i(H(m,k)) <= C(2k,k): left sets missing T and right sets containing T";
constexpr const char* kPdRatioAnchor = "pd(G) <= 2C(m,k)(1 - 1/(2C(m-k,k))) for a C(m-k,k)-regular bipartite G";
constexpr const char* kPdTauAnchor = "pd(G) <= |V| - tau(G), tau(H(m,k)) >= gamma(D, H(m,k)) = k+1";
constexpr const char* kPdK1Anchor = "pd(H(m,1)) = 2m - 2";
constexpr const char* kDomDegreeAnchor = "i(G) >= gamma(G) >= ceil(|V| / (max degree + 1))";
constexpr const char* kGammaUpperAnchor = "gamma(D, H(m,k)) <= k+1: D is covered by {Q u {i} : i in S}";
constexpr const char* kGammaLowerAnchor = "gamma(D, H(m,k)) >= k+1";
constexpr const char* kExhaustive = "exhaustive search";

void require_kneser(int m, int k) {
  if (k < 1) throw DomainError("H(m,k) requires k >= 1");
  if (m < 2 * k) throw DomainError("H(m,k) requires m >= 2k");
  if (m > kMaxGroundSet) throw DomainError("H(m,k) requires m <= 62");
}

BigNat ceil_div(const BigNat& a, const BigNat& b) {
  const BigNat::Rep q = (a.rep() + b.rep() - 1) / b.rep();
  return BigNat::from_signed(q);
}

BoundReport make_report(Invariant inv, int m, int k) {
  BoundReport r;
  r.invariant = inv;
  r.params = {{"m", std::to_string(m)}, {"k", std::to_string(k)}};
  return r;
}

Certificate family_certificate(const KneserGraph& h, const SubsetCode& s) {
  Certificate c;
  c.kind = CertificateKind::kInducedMatching;
  c.id = "ind-family-S" + s.to_string();
  const EdgeSet family = e_s_family(h, s);
  c.checks.push_back({"size = C(2k,k)", family.size() == binom_u64(2 * h.k(), h.k())});
  c.checks.push_back({"pairwise 3-disjoint", is_induced_matching(h.graph(), family)});
  c.checks.push_back({"maximal", check_maximal_induced_matching(h.graph(), family).maximal});
  c.payload = family;
  return c;
}

Certificate cover_certificate(const KneserGraph& h, CoverVariant variant) {
  Certificate c;
  c.kind = CertificateKind::kCochordalCover;
  std::vector<EdgeSet> cover;
  if (variant == CoverVariant::kStars) {
    c.id = "cochord-stars";
    cover = star_cover(h);
  } else {
    c.id = "cochord-double-stars-t" + std::to_string(h.m());
    cover = double_star_cover(h, h.m());
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    c.checks.push_back({"member " + std::to_string(i) + " co-chordal", is_cochordal(edge_subgraph(h.graph(), cover[i]))});
    seen.insert(cover[i].edges.begin(), cover[i].edges.end());
  }
  const auto all = h.graph().edges().edges;
  c.checks.push_back({"union = E", std::vector<Edge>(seen.begin(), seen.end()) == all});
  c.payload = std::move(cover);
  return c;
}

Certificate search_matching_certificate(const Graph& g, const InducedMatching& im) {
  Certificate c;
  c.kind = CertificateKind::kInducedMatching;
  c.id = "ind-search-witness";
  c.checks.push_back({"pairwise 3-disjoint", is_induced_matching(g, im.witness)});
  c.payload = im.witness;
  return c;
}

void require_verified(const Certificate& c) {
  if (!c.verified()) throw std::logic_error("certificate " + c.id + " failed verification");
}

std::string vertex_literal(const Graph& g, Vertex v) {
  if (!g.has_labels()) return std::to_string(v);
  const auto& l = g.labels()[v];
  return (l.side == Side::kLeft ? "L" : "R") + l.subset.to_string();
}

nlohmann::ordered_json edge_json(const Graph& g, const EdgeSet& edges) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : edges.edges) arr.push_back({vertex_literal(g, e.u), vertex_literal(g, e.v)});
  return arr;
}

nlohmann::ordered_json certificate_json(const Certificate& c, const Graph& host) {
  nlohmann::ordered_json doc;
  doc["id"] = c.id;
  doc["kind"] = to_string(c.kind);
  doc["size"] = c.size();
  doc["verified"] = c.verified();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& ch : c.checks) checks.push_back({{"check", ch.name}, {"passed", ch.passed}});
  doc["checks"] = checks;
  if (const auto* edges = std::get_if<EdgeSet>(&c.payload)) {
    doc["edges"] = edge_json(host, *edges);
  } else if (const auto* cover = std::get_if<std::vector<EdgeSet>>(&c.payload)) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& part : *cover) arr.push_back(edge_json(host, part));
    doc["members"] = arr;
  } else {
    auto arr = nlohmann::ordered_json::array();
    const auto& vs = std::get<VertexSet>(c.payload);
    for (Vertex v = vs.first(); v >= 0; v = vs.next(v)) arr.push_back(vertex_literal(host, v));
    doc["vertices"] = arr;
  }
  return doc;
}

}  // namespace

std::string to_string(Invariant i) {
  switch (i) {
    case Invariant::kRegPower: return "REG_POWER";
    case Invariant::kReg: return "REG";
    case Invariant::kPd: return "PD";
    case Invariant::kCochord: return "COCHORD";
    case Invariant::kInd: return "IND";
    case Invariant::kIndepDom: return "INDEP_DOM";
    case Invariant::kGammaSet: return "GAMMA_SET";
    case Invariant::kTau: return "TAU";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kInducedMatching: return "INDUCED_MATCHING";
    case CertificateKind::kCochordalCover: return "COCHORDAL_COVER";
    case CertificateKind::kDominatingSet: return "DOMINATING_SET";
    case CertificateKind::kGammaWitness: return "GAMMA_WITNESS";
  }
  return "?";
}

bool Certificate::verified() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Certificate::size() const {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, VertexSet>)
          return static_cast<std::size_t>(p.count());
        else
          return p.size();
      },
      payload);
}

std::string Certificate::to_json(const Graph& host) const { return certificate_json(*this, host).dump(2); }

void BoundReport::validate() const {
  if (lower > upper) throw std::logic_error(to_string(invariant) + ": lower bound exceeds upper bound");
  if (exact && (*exact < lower || *exact > upper))
    throw std::logic_error(to_string(invariant) + ": exact value outside the reported interval");
  for (const auto& c : certificates) require_verified(c);
}

std::string BoundReport::to_json(const Graph* host) const {
  nlohmann::ordered_json doc;
  doc["invariant"] = to_string(invariant);
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [name, value] : params) p[name] = value;
  doc["params"] = p;
  doc["lower"] = lower.to_string();
  doc["upper"] = upper.to_string();
  doc["exact"] = exact ? nlohmann::ordered_json(exact->to_string()) : nlohmann::ordered_json(nullptr);
  doc["justification"] = justification;
  auto certs = nlohmann::ordered_json::array();
  for (const auto& c : certificates) {
    if (host)
      certs.push_back(certificate_json(c, *host));
    else
      certs.push_back({{"id", c.id}, {"kind", to_string(c.kind)}, {"size", c.size()}, {"verified", c.verified()}});
  }
  doc["certificates"] = certs;
  auto anchors = nlohmann::ordered_json::array();
  auto sources = nlohmann::ordered_json::array();
  for (const auto& s : this->sources) {
    if (std::find(anchors.begin(), anchors.end(), s.anchor) == anchors.end()) anchors.push_back(s.anchor);
    sources.push_back({{"bound", s.side}, {"value", s.value.to_string()}, {"anchor", s.anchor}, {"certificate", s.certificate}});
  }
  doc["anchors"] = anchors;
  doc["sources"] = sources;
  doc["notes"] = notes;
  return doc.dump(2);
}

std::string BoundReport::to_text(const Graph* host) const {
  std::ostringstream os;
  os << to_string(invariant);
  for (const auto& [name, value] : params) os << ' ' << name << '=' << value;
  os << "\n  lower: " << lower << "\n  upper: " << upper << "\n  exact: " << (exact ? exact->to_string() : "-");
  if (!justification.empty()) os << " (" << justification << ")";
  os << '\n';
  for (const auto& s : sources) {
    os << "  " << s.side << ' ' << s.value << ": " << s.anchor;
    if (!s.certificate.empty()) os << " [" << s.certificate << "]";
    os << '\n';
  }
  for (const auto& c : certificates) {
    os << "  certificate " << c.id << " (" << to_string(c.kind) << ", size " << c.size() << "): "
       << (c.verified() ? "verified" : "FAILED") << '\n';
    for (const auto& ch : c.checks) os << "    [" << (ch.passed ? "ok" : "FAIL") << "] " << ch.name << '\n';
    if (host) {
      if (const auto* vs = std::get_if<VertexSet>(&c.payload)) {
        os << "    vertices:";
        for (Vertex v = vs->first(); v >= 0; v = vs->next(v)) os << ' ' << vertex_literal(*host, v);
        os << '\n';
      } else if (const auto* es = std::get_if<EdgeSet>(&c.payload)) {
        os << "    edges:";
        for (const auto& e : es->edges) os << ' ' << vertex_literal(*host, e.u) << '-' << vertex_literal(*host, e.v);
        os << '\n';
      }
    }
  }
  for (const auto& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

BoundReport reg_power_bounds(int m, int k, int p) {
  require_kneser(m, k);
  if (p < 1) throw DomainError("power p must be >= 1");
  BoundReport r = make_report(Invariant::kRegPower, m, k);
  r.params.emplace_back("p", std::to_string(p));
  const BigNat shift(2 * static_cast<std::uint64_t>(p - 1));
  r.lower = shift + binom(2 * k, k);
  r.upper = shift + binom(m, k);
  r.sources.push_back({"lower", r.lower, kIndLowerAnchor, ""});
  r.sources.push_back({"lower", binom(2 * k, k), kFamilyAnchor, ""});
  r.sources.push_back({"upper", r.upper, kCochordUpperAnchor, ""});
  r.sources.push_back({"upper", binom(m, k), kStarAnchor, ""});
  if (m == 2 * k) {
    r.exact = r.lower;
    r.justification = "m=2k: ladder rung graph, ind = cochord = C(2k,k)";
  } else if (m == 2 * k + 1) {
    r.exact = r.lower;
    r.justification = "m=2k+1: double-star cover gives cochord <= C(2k,k) = ind lower bound";
    r.sources.push_back({"exact", r.lower, kDoubleStarAnchor, ""});
  }
  r.validate();
  return r;
}

BoundReport reg_bounds(int m, int k) {
  require_kneser(m, k);
  BoundReport r = make_report(Invariant::kReg, m, k);
  const BigNat side = binom(m, k);
  r.lower = binom(2 * k, k);
  r.sources.push_back({"lower", r.lower, kFamilyAnchor, ""});
  if (m == 2 * k) {
    r.upper = r.lower;
    r.sources.push_back({"upper", r.upper, kStarAnchor, ""});
  } else {
    const BigNat hamilton = BigNat::from_signed((2 * side.rep() + 1) / 3);
    r.upper = std::min(side, hamilton);
    r.sources.push_back({"upper", side, kStarAnchor, ""});
    r.sources.push_back({"upper", hamilton, kHamiltonAnchor, ""});
  }
  if (m == 2 * k) {
    r.exact = r.lower;
    r.justification = "m=2k: ladder rung graph";
  } else if (m == 2 * k + 1) {
    r.exact = r.lower;
    r.justification = "m=2k+1: double-star cover meets the induced matching bound";
    r.sources.push_back({"exact", r.lower, kDoubleStarAnchor, ""});
  }
  r.validate();
  return r;
}

BoundReport pd_bounds(int m, int k) {
  require_kneser(m, k);
  BoundReport r = make_report(Invariant::kPd, m, k);
  const BigNat side = binom(m, k);
  const BigNat vertices = BigNat(2) * side;
  r.lower = vertices - binom(2 * k, k);
  r.sources.push_back({"lower", r.lower, kPdDominationAnchor, ""});
  r.sources.push_back({"via", binom(2 * k, k), kWAnchor, ""});
  const BigNat ratio = ceil_div(side, binom(m - k, k));
  const BigNat tau_bound(static_cast<std::uint64_t>(k + 1));
  r.upper = vertices - std::max(tau_bound, ratio);
  r.sources.push_back({"upper", vertices - ratio, kPdRatioAnchor, ""});
  r.sources.push_back({"upper", vertices - tau_bound, kPdTauAnchor, ""});
  r.notes.push_back("C(m,k)/C(m-k,k) = " + side.to_string() + "/" + binom(m - k, k).to_string() +
                    " is rounded up to " + ratio.to_string() + " because pd is an integer");
  if (k == 1) {
    r.exact = r.lower;
    r.justification = "k=1";
    r.sources.push_back({"exact", r.lower, kPdK1Anchor, ""});
  } else if (r.lower == r.upper) {
    r.exact = r.lower;
    r.justification = "lower and upper bounds coincide";
  }
  r.validate();
  return r;
}

BoundReport certify_induced_matching(int m, int k, const SubsetCode& s, const CertifyOptions& options) {
  require_kneser(m, k);
  const auto h = KneserGraph::build(m, k);
  BoundReport r = make_report(Invariant::kInd, m, k);
  r.params.emplace_back("s", s.to_string());
  Certificate family = family_certificate(h, s);
  require_verified(family);
  r.lower = BigNat(family.size());
  r.upper = binom(m, k);
  r.sources.push_back({"lower", r.lower, kFamilyAnchor, family.id});
  r.sources.push_back({"upper", r.upper, kMatchingHalf, ""});
  r.certificates.push_back(std::move(family));
  if (options.exhaustive) {
    try {
      const auto im = induced_matching_number(h.graph(), options.matching_guard);
      Certificate witness = search_matching_certificate(h.graph(), im);
      require_verified(witness);
      r.exact = BigNat(static_cast<std::uint64_t>(im.size));
      r.lower = *r.exact;
      r.upper = *r.exact;
      r.justification = kExhaustive;
      r.sources.push_back({"exact", *r.exact, kExhaustive, witness.id});
      r.certificates.push_back(std::move(witness));
    } catch (const GuardExceeded& e) {
      r.notes.push_back(std::string("exhaustive search skipped: ") + e.what());
    }
  }
  r.validate();
  return r;
}

BoundReport certify_cochordal_cover(int m, int k, CoverVariant variant, const CertifyOptions& options) {
  require_kneser(m, k);
  if (variant == CoverVariant::kDoubleStars && m != 2 * k + 1)
    throw DomainError("double-star cover requires m = 2k + 1");
  const auto h = KneserGraph::build(m, k);
  BoundReport r = make_report(Invariant::kCochord, m, k);
  Certificate cover = cover_certificate(h, variant);
  require_verified(cover);
  Certificate family = family_certificate(h, canonical_s(h));
  require_verified(family);
  r.lower = BigNat(family.size());
  r.upper = BigNat(cover.size());
  r.sources.push_back({"lower", r.lower, kCochordAtLeastInd, family.id});
  r.sources.push_back({"upper", r.upper, variant == CoverVariant::kStars ? kStarAnchor : kDoubleStarAnchor, cover.id});
  r.certificates.push_back(std::move(cover));
  r.certificates.push_back(std::move(family));
  if (r.lower == r.upper) {
    r.exact = r.lower;
    r.justification = "cover size meets the induced matching lower bound";
  }
  (void)options;
  r.validate();
  return r;
}

BoundReport certify_domination(int m, int k, const SubsetCode& s, int j, const CertifyOptions& options) {
  require_kneser(m, k);
  const auto h = KneserGraph::build(m, k);
  const Graph& g = h.graph();
  BoundReport r = make_report(Invariant::kIndepDom, m, k);
  Certificate c;
  c.kind = CertificateKind::kDominatingSet;
  VertexSet w;
  if (m == 2 * k) {
    w = h.left_side();
    c.id = "dom-left-side";
  } else {
    w = dominating_w(h, s, j);
    c.id = "dom-W-S" + s.to_string() + "-j" + std::to_string(j);
    r.params.emplace_back("s", s.to_string());
    r.params.emplace_back("j", std::to_string(j));
  }
  c.checks.push_back({"size = C(2k,k)", static_cast<std::uint64_t>(w.count()) == binom_u64(2 * k, k)});
  c.checks.push_back({"independent", is_independent(g, w)});
  c.checks.push_back({"dominating", closed_neighborhood(g, w) == VertexSet::full(g.order())});
  c.payload = w;
  require_verified(c);
  r.upper = BigNat(static_cast<std::uint64_t>(w.count()));
  r.lower = ceil_div(BigNat(static_cast<std::uint64_t>(g.order())), binom(m - k, k) + BigNat(1));
  r.sources.push_back({"lower", r.lower, kDomDegreeAnchor, ""});
  r.sources.push_back({"upper", r.upper, kWAnchor, c.id});
  r.certificates.push_back(std::move(c));
  if (options.exhaustive) {
    try {
      const auto best = independent_domination_number(g, options.domination_guard);
      Certificate witness;
      witness.kind = CertificateKind::kDominatingSet;
      witness.id = "dom-search-witness";
      witness.checks.push_back({"independent", is_independent(g, best.witness)});
      witness.checks.push_back({"dominating", closed_neighborhood(g, best.witness) == VertexSet::full(g.order())});
      witness.payload = best.witness;
      require_verified(witness);
      r.exact = BigNat(static_cast<std::uint64_t>(best.size));
      r.lower = r.upper = *r.exact;
      r.justification = kExhaustive;
      r.sources.push_back({"exact", *r.exact, kExhaustive, witness.id});
      r.certificates.push_back(std::move(witness));
    } catch (const GuardExceeded& e) {
      r.notes.push_back(std::string("exhaustive search skipped: ") + e.what());
    }
  }
  r.validate();
  return r;
}

BoundReport certify_gamma(int m, int k, const SubsetCode& q, const SubsetCode& s, const CertifyOptions& options) {
  require_kneser(m, k);
  const auto h = KneserGraph::build(m, k);
  const Graph& g = h.graph();
  const auto fam = gamma_demand_family(h, q, s);
  BoundReport r = make_report(Invariant::kGammaSet, m, k);
  r.params.emplace_back("q", q.to_string());
  r.params.emplace_back("s", s.to_string());
  Certificate c;
  c.kind = CertificateKind::kGammaWitness;
  c.id = "gamma-E-Q" + q.to_string();
  VertexSet x(g.order());
  for (const auto& e : fam.cover) x.set(h.left_id(e));
  c.checks.push_back({"|E| = k+1", static_cast<int>(fam.cover.size()) == k + 1});
  c.checks.push_back({"D inside N(E)", fam.demand.is_subset_of(neighborhood(g, x))});
  c.payload = x;
  require_verified(c);
  r.upper = BigNat(static_cast<std::uint64_t>(x.count()));
  r.lower = BigNat(static_cast<std::uint64_t>(k + 1));
  r.sources.push_back({"upper", r.upper, kGammaUpperAnchor, c.id});
  r.sources.push_back({"lower", r.lower, kGammaLowerAnchor, ""});
  r.certificates.push_back(std::move(c));
  r.notes.push_back("|D| = " + std::to_string(fam.demand.count()));
  if (options.exhaustive) {
    try {
      const auto best = gamma_of(g, fam.demand, options.domination_guard);
      r.exact = BigNat(static_cast<std::uint64_t>(best.size));
      r.justification = kExhaustive;
      r.sources.push_back({"exact", *r.exact, kExhaustive, ""});
    } catch (const GuardExceeded& e) {
      r.notes.push_back(std::string("exhaustive search skipped: ") + e.what());
    }
  }
  r.validate();
  return r;
}

BoundReport certify_regularity(int m, int k, const CertifyOptions& options) {
  require_kneser(m, k);
  const auto h = KneserGraph::build(m, k);
  BoundReport r = make_report(Invariant::kReg, m, k);

  const auto ind = certify_induced_matching(m, k, canonical_s(h), options);
  r.lower = ind.exact ? *ind.exact : ind.lower;
  r.sources.push_back({"lower", r.lower, "reg(R/I(G)) >= ind(G)", ind.certificates.back().id});
  for (const auto& c : ind.certificates) r.certificates.push_back(c);

  const auto cover = certify_cochordal_cover(m, k, m == 2 * k + 1 ? CoverVariant::kDoubleStars : CoverVariant::kStars,
                                             options);
  r.upper = cover.upper;
  r.sources.push_back({"upper", r.upper, "reg(R/I(G)) <= cochord(G)", cover.certificates.front().id});
  r.certificates.push_back(cover.certificates.front());
  if (m > 2 * k) {
    const BigNat hamilton = BigNat::from_signed((2 * binom(m, k).rep() + 1) / 3);
    r.sources.push_back({"upper", hamilton, kHamiltonAnchor, ""});
    r.upper = std::min(r.upper, hamilton);
  }
  if (r.lower == r.upper) {
    r.exact = r.lower;
    r.justification = "induced matching and co-chordal cover certificates coincide";
  }
  r.validate();
  return r;
}

}  // namespace bkneser
