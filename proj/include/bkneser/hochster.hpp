#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bkneser/combinatorics.hpp"
#include "bkneser/graph.hpp"

namespace bkneser {

/// Enumeration limits for the brute-force Hochster computations. The
/// defaults admit the full Betti table up to about 17 vertices and the linear
/// strand of any 20-vertex graph.
struct OracleGuards {
  std::uint64_t max_subsets = 200'000;
  std::uint64_t max_faces = 1'000'000;
  std::uint64_t max_matrix_cells = 50'000'000;
};

/// Graded Betti numbers beta_{i,j} of R/I, stored sparsely.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int variables, int field_char) : n_(variables), char_(field_char) {}

  int variables() const { return n_; }
  int field_char() const { return char_; }
  const std::map<std::pair<int, int>, BigNat>& entries() const { return entries_; }

  /// Zero when absent.
  BigNat at(int i, int j) const;
  /// Adds to an entry; zero contributions leave the table unchanged.
  void add(int i, int j, const BigNat& value);

  /// Largest i with a nonzero entry.
  int pd() const;
  /// Largest j - i with a nonzero entry.
  int reg() const;

  /// {"char": c, "entries": [{"i":..,"j":..,"value":"<decimal>"}]}
  std::string to_json() const;
  static BettiTable from_json(const std::string& text);
  /// Macaulay2-style triangle: columns i, rows j - i, "." for zero.
  std::string to_text() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  int char_ = 2;
  std::map<std::pair<int, int>, BigNat> entries_;
};

int pd_of(const BettiTable& t);
int reg_of(const BettiTable& t);

/// Independent sets of the induced subgraph on w, by cardinality. Faces are
/// vertex masks of the host graph (host order <= 64), ascending within each
/// stratum. An empty `strata` is the void complex.
struct ComplexSlice {
  std::uint64_t w = 0;
  std::vector<std::vector<std::uint64_t>> strata;

  std::uint64_t face_count() const;
  int dimension() const { return static_cast<int>(strata.size()) - 2; }
};

ComplexSlice enumerate_faces(const Graph& g, const VertexSet& w, const OracleGuards& guards = {});

/// dim H~_d for d = -1 .. dimension(), index 0 holding d = -1. field_char is
/// 0 (rationals, fraction-free elimination) or a prime.
std::vector<std::int64_t> reduced_homology_dims(const ComplexSlice& slice, int field_char,
                                                const OracleGuards& guards = {});

/// Rank of an integer matrix over GF(p) (p prime) or Q (p = 0).
std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, int field_char);

/// dim H~_0 of the independence complex restricted to w: components of the
/// complement of g[w], minus one.
int reduced_h0(const Graph& g, const VertexSet& w);

/// beta_{i,i+1}(R/I(g)) as the sum of reduced_h0 over all (i+1)-subsets.
BigNat linear_strand_oracle(const Graph& g, int i, const OracleGuards& guards = {}, int threads = 1);

/// All beta_{i,j}(R/I(g)) via Hochster's formula over every vertex subset.
BettiTable full_betti_oracle(const Graph& g, int field_char, const OracleGuards& guards = {}, int threads = 1);

}  // namespace bkneser
