#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bkneser/errors.hpp"

namespace bkneser {

// Arbitrary precision non-negative integer. Subtraction is checked.
class BigNat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigNat() = default;
  BigNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError if `v` is negative.
  static BigNat from_signed(const Rep& v);
  /// Parses a non-empty string of decimal digits.
  static BigNat from_string(const std::string& s);

  const Rep& rep() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  /// Throws DomainError if the value does not fit in 64 bits.
  std::uint64_t to_u64() const;
  std::string to_string() const { return value_.str(); }

  BigNat& operator+=(const BigNat& o) {
    value_ += o.value_;
    return *this;
  }
  BigNat& operator*=(const BigNat& o) {
    value_ *= o.value_;
    return *this;
  }
  BigNat& operator-=(const BigNat& o);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend bool operator==(const BigNat& a, const BigNat& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const BigNat& a, const BigNat& b) {
    return a.value_ == b.value_ ? std::strong_ordering::equal
           : a.value_ < b.value_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  }
  friend std::ostream& operator<<(std::ostream& os, const BigNat& v);

 private:
  explicit BigNat(Rep v) : value_(std::move(v)) {}
  Rep value_;
};

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
BigNat binom(std::int64_t n, std::int64_t k);
/// C(n, k) for a big top argument; used for binomials of binomials.
BigNat binom(const BigNat& n, std::int64_t k);
/// 64-bit binomial; throws DomainError on overflow.
std::uint64_t binom_u64(std::int64_t n, std::int64_t k);

inline constexpr int kMaxGroundSet = 62;

/// A subset of [m] = {1..m}; bit i-1 of `mask` is set iff i is a member.
struct SubsetCode {
  std::uint64_t mask = 0;
  int m = 0;

  int size() const { return __builtin_popcountll(mask); }
  bool contains(int element) const { return (mask >> (element - 1)) & 1U; }
  bool is_subset_of(const SubsetCode& o) const { return (mask & ~o.mask) == 0; }
  std::vector<int> elements() const;
  /// Renders as a set literal, e.g. "{1,2}".
  std::string to_string() const;

  static SubsetCode of(int m, std::initializer_list<int> elements);
  static SubsetCode of(int m, const std::vector<int>& elements);

  friend bool operator==(const SubsetCode&, const SubsetCode&) = default;
};

/// All k-subsets of [m] in colexicographic order (equivalently, ascending mask).
std::vector<SubsetCode> k_subsets(int m, int k);
/// Position of `s` among the |s|-subsets of [m] in colex order.
std::uint64_t colex_rank(const SubsetCode& s);
/// Inverse of colex_rank.
SubsetCode colex_unrank(int m, int k, std::uint64_t rank);
/// Raw-mask variants; no ground set bookkeeping.
std::uint64_t colex_rank_mask(std::uint64_t mask);
std::uint64_t colex_unrank_mask(int k, std::uint64_t rank);
/// Next mask with the same popcount (Gosper's hack). Undefined for mask == 0.
inline std::uint64_t next_same_popcount(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

/// Number of q-element families of r-subsets of [m] whose common intersection
/// is exactly a fixed t-set, by inclusion-exclusion.
BigNat n_exact(int m, int q, int r, int t);

struct FamilyEnumerationGuard {
  std::uint64_t max_families = 50'000'000;
};

/// Brute-force count of the same quantity: fixes T = {1..t} and enumerates
/// every q-family of r-subsets of [m].
BigNat n_exact_oracle(int m, int q, int r, int t, const FamilyEnumerationGuard& guard = {});

}  // namespace bkneser
