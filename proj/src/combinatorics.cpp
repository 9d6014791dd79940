#include "bkneser/combinatorics.hpp"

#include <array>
#include <limits>
#include <ostream>
#include <sstream>

namespace bkneser {

namespace {

constexpr int kTableRows = 68;  // C(67, 33) still fits in 64 bits.

using PascalTable = std::array<std::array<std::uint64_t, kTableRows>, kTableRows>;

const PascalTable& pascal() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int n = 0; n < kTableRows; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

BigNat BigNat::from_signed(const Rep& v) {
  if (v < 0) throw DomainError("negative value where a natural number is required: " + v.str());
  return BigNat(v);
}

BigNat BigNat::from_string(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("not a decimal natural number: '" + s + "'");
  return BigNat(Rep(s));
}

std::uint64_t BigNat::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max())
    throw DomainError("value does not fit in 64 bits: " + value_.str());
  return value_.convert_to<std::uint64_t>();
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (o.value_ > value_)
    throw DomainError("natural subtraction underflow: " + value_.str() + " - " + o.value_.str());
  value_ -= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.value_.str(); }

std::uint64_t binom_u64(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kTableRows) return pascal()[n][k];
  return binom(n, k).to_u64();
}

BigNat binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigNat{};
  if (n < kTableRows) return BigNat(pascal()[n][k]);
  return binom(BigNat(static_cast<std::uint64_t>(n)), k);
}

BigNat binom(const BigNat& n, std::int64_t k) {
  if (k < 0) return BigNat{};
  if (BigNat(static_cast<std::uint64_t>(k)) > n) return BigNat{};
  const BigNat::Rep& top = n.rep();
  if (BigNat::Rep(2) * k > top) k = static_cast<std::int64_t>((top - k).convert_to<std::uint64_t>());
  BigNat::Rep acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= top - k + i;
    acc /= i;
  }
  return BigNat::from_signed(acc);
}

std::vector<int> SubsetCode::elements() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) out.push_back(__builtin_ctzll(rest) + 1);
  return out;
}

std::string SubsetCode::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

SubsetCode SubsetCode::of(int m, const std::vector<int>& elements) {
  if (m < 0 || m > kMaxGroundSet) throw DomainError("ground set size out of range: " + std::to_string(m));
  SubsetCode s{0, m};
  for (int e : elements) {
    if (e < 1 || e > m) throw DomainError("element " + std::to_string(e) + " not in [" + std::to_string(m) + "]");
    s.mask |= std::uint64_t{1} << (e - 1);
  }
  return s;
}

SubsetCode SubsetCode::of(int m, std::initializer_list<int> elements) {
  return of(m, std::vector<int>(elements));
}

std::vector<SubsetCode> k_subsets(int m, int k) {
  if (m < 0 || m > kMaxGroundSet) throw DomainError("ground set size out of range: " + std::to_string(m));
  if (k < 0 || k > m) throw DomainError("k_subsets requires 0 <= k <= m");
  std::vector<SubsetCode> out;
  out.reserve(binom_u64(m, k));
  if (k == 0) {
    out.push_back({0, m});
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit; mask = next_same_popcount(mask))
    out.push_back({mask, m});
  return out;
}

std::uint64_t colex_rank_mask(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++i) rank += binom_u64(__builtin_ctzll(rest), i);
  return rank;
}

std::uint64_t colex_unrank_mask(int k, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < 64 && binom_u64(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= binom_u64(c, i);
  }
  return mask;
}

std::uint64_t colex_rank(const SubsetCode& s) { return colex_rank_mask(s.mask); }

SubsetCode colex_unrank(int m, int k, std::uint64_t rank) {
  if (k < 0 || k > m || m > kMaxGroundSet) throw DomainError("colex_unrank requires 0 <= k <= m <= 62");
  if (rank >= binom_u64(m, k)) throw DomainError("colex rank out of range");
  return {colex_unrank_mask(k, rank), m};
}

namespace {

void check_family_params(int m, int q, int r, int t) {
  if (q < 1) throw DomainError("family size q must be >= 1");
  if (t < 0 || t > r) throw DomainError("intersection size t must satisfy 0 <= t <= r");
  if (r > m) throw DomainError("member size r must satisfy r <= m");
}

}  // namespace

BigNat n_exact(int m, int q, int r, int t) {
  check_family_params(m, q, r, t);
  BigNat::Rep acc = 0;
  for (int j = 0; j <= r - t; ++j) {
    const BigNat inner = binom(m - t - j, r - t - j);
    const BigNat term = binom(m - t, j) * binom(inner, q);
    if (j % 2 == 0)
      acc += term.rep();
    else
      acc -= term.rep();
  }
  return BigNat::from_signed(acc);
}

namespace {

struct FamilyCounter {
  const std::vector<SubsetCode>& members;
  std::uint64_t target;
  std::uint64_t count = 0;

  void run(std::size_t start, int remaining, std::uint64_t meet) {
    if (remaining == 0) {
      if (meet == target) ++count;
      return;
    }
    // The running intersection only shrinks; prune once it loses T.
    if ((meet & target) != target) return;
    for (std::size_t i = start; i + remaining <= members.size(); ++i)
      run(i + 1, remaining - 1, meet & members[i].mask);
  }
};

}  // namespace

BigNat n_exact_oracle(int m, int q, int r, int t, const FamilyEnumerationGuard& guard) {
  check_family_params(m, q, r, t);
  const BigNat families = binom(binom(m, r), q);
  if (families > BigNat(guard.max_families))
    throw GuardExceeded("max_families", guard.max_families,
                        "n_exact_oracle would enumerate " + families.to_string() + " families");
  const auto members = k_subsets(m, r);
  FamilyCounter counter{members, (std::uint64_t{1} << t) - 1};
  counter.run(0, q, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  return BigNat(counter.count);
}

}  // namespace bkneser
