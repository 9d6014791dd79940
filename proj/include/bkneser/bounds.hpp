#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bkneser/combinatorics.hpp"
#include "bkneser/domination.hpp"
#include "bkneser/graph.hpp"
#include "bkneser/kneser.hpp"

namespace bkneser {

enum class Invariant { kRegPower, kReg, kPd, kCochord, kInd, kIndepDom, kGammaSet, kTau };
enum class CertificateKind { kInducedMatching, kCochordalCover, kDominatingSet, kGammaWitness };
enum class CoverVariant { kStars, kDoubleStars };

std::string to_string(Invariant i);
std::string to_string(CertificateKind k);

struct Check {
  std::string name;
  bool passed = false;
};

/// A structural witness plus the checks it has passed. Payload vertices are
/// ids of the host graph; `labels` renders them when the host is labelled.
struct Certificate {
  CertificateKind kind = CertificateKind::kInducedMatching;
  std::string id;
  std::variant<EdgeSet, std::vector<EdgeSet>, VertexSet> payload;
  std::vector<Check> checks;

  bool verified() const;
  std::size_t size() const;
  std::string to_json(const Graph& host) const;
};

struct BoundSource {
  std::string side;  // "lower", "upper" or "exact"
  BigNat value;
  std::string anchor;
  std::string certificate;  // id, empty when formula-only
};

/// Interval for one invariant with the provenance of each end.
struct BoundReport {
  Invariant invariant = Invariant::kReg;
  std::vector<std::pair<std::string, std::string>> params;
  BigNat lower;
  BigNat upper;
  std::optional<BigNat> exact;
  std::string justification;
  std::vector<BoundSource> sources;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;

  /// Throws std::logic_error unless lower <= exact <= upper and every
  /// attached certificate verified.
  void validate() const;
  std::string to_json(const Graph* host = nullptr) const;
  std::string to_text(const Graph* host = nullptr) const;
};

struct CertifyOptions {
  SearchGuard matching_guard{};
  DominationGuard domination_guard{};
  /// Run the exhaustive searches that can upgrade a bound to an exact value.
  bool exhaustive = true;
};

BoundReport reg_power_bounds(int m, int k, int p);
BoundReport reg_bounds(int m, int k);
BoundReport pd_bounds(int m, int k);

/// E_S induced matching certificate; exact ind when the search completes.
BoundReport certify_induced_matching(int m, int k, const SubsetCode& s, const CertifyOptions& options = {});
BoundReport certify_cochordal_cover(int m, int k, CoverVariant variant, const CertifyOptions& options = {});
/// Independent dominating set certificate; for m = 2k one full side is used
/// and s, j are ignored.
BoundReport certify_domination(int m, int k, const SubsetCode& s, int j, const CertifyOptions& options = {});
/// gamma(D, H) for the demand family of right vertices containing q, with the
/// k + 1 sets q ∪ {i}, i in s, as witness.
BoundReport certify_gamma(int m, int k, const SubsetCode& q, const SubsetCode& s, const CertifyOptions& options = {});

/// reg(R/I) sandwiched between an exact (or certified) induced matching and
/// the best available co-chordal cover or Hamiltonian bound.
BoundReport certify_regularity(int m, int k, const CertifyOptions& options = {});

}  // namespace bkneser
