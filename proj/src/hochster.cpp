#include "bkneser/hochster.hpp"

#include "bkneser/parallel.hpp"
#include "slice_internal.hpp"

namespace bkneser {

namespace {

std::vector<std::uint64_t> word_rows(const Graph& g) {
  if (g.order() > 64) throw DomainError("Hochster oracles support at most 64 vertices");
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row_word(v);
  return rows;
}

// Components of the complement of g[w], as a count.
int complement_components(const std::vector<std::uint64_t>& rows, std::uint64_t w) {
  int count = 0;
  std::uint64_t unseen = w;
  while (unseen != 0) {
    std::uint64_t frontier = unseen & (~unseen + 1);
    unseen &= ~frontier;
    while (frontier != 0) {
      std::uint64_t reached = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) reached |= ~rows[__builtin_ctzll(rest)];
      reached &= unseen;
      unseen &= ~reached;
      frontier = reached;
    }
    ++count;
  }
  return count;
}

}  // namespace

int reduced_h0(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw DomainError("reduced_h0 requires a nonempty vertex set");
  const auto rows = word_rows(g);
  return complement_components(rows, w.words()[0]) - 1;
}

BigNat linear_strand_oracle(const Graph& g, int i, const OracleGuards& guards, int threads) {
  if (i < 1) throw DomainError("linear strand index must be >= 1");
  const auto rows = word_rows(g);
  const int n = g.order();
  const int size = i + 1;
  if (size > n) return BigNat{};
  const std::uint64_t total = binom_u64(n, size);
  if (total > guards.max_subsets)
    throw GuardExceeded("max_subsets", guards.max_subsets,
                        "linear strand oracle over " + std::to_string(total) + " vertex subsets");
  std::vector<std::uint64_t> partial(std::max(threads, 1), 0);
  for_each_chunk(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    if (begin == end) return;
    std::uint64_t w = colex_unrank_mask(size, begin);
    std::uint64_t sum = 0;
    for (std::uint64_t r = begin; r < end; ++r, w = next_same_popcount(w))
      sum += static_cast<std::uint64_t>(complement_components(rows, w) - 1);
    partial[chunk] = sum;
  });
  BigNat result;
  for (auto p : partial) result += BigNat(p);
  return result;
}

BettiTable full_betti_oracle(const Graph& g, int field_char, const OracleGuards& guards, int threads) {
  const auto rows = word_rows(g);
  const int n = g.order();
  if (n >= 63 || (std::uint64_t{1} << n) > guards.max_subsets)
    throw GuardExceeded("max_subsets", guards.max_subsets,
                        "full Betti table needs all 2^" + std::to_string(n) + " vertex subsets");
  const std::uint64_t total = std::uint64_t{1} << n;
  using Partial = std::map<std::pair<int, int>, std::uint64_t>;
  std::vector<Partial> partial(std::max(threads, 1));
  for_each_chunk(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    Partial& acc = partial[chunk];
    for (std::uint64_t w = begin; w < end; ++w) {
      // A vertex of w with no neighbour in w is a cone point of the slice.
      bool cone = false;
      for (std::uint64_t rest = w; rest != 0 && !cone; rest &= rest - 1) cone = (rows[__builtin_ctzll(rest)] & w) == 0;
      if (cone) continue;
      const auto slice = detail::enumerate_faces(rows, w, guards);
      const auto dims = reduced_homology_dims(slice, field_char, guards);
      const int j = __builtin_popcountll(w);
      for (std::size_t s = 0; s < dims.size(); ++s)
        if (dims[s] != 0) acc[{j - static_cast<int>(s), j}] += static_cast<std::uint64_t>(dims[s]);
    }
  });
  BettiTable table(n, field_char);
  for (const auto& p : partial)
    for (const auto& [key, value] : p) table.add(key.first, key.second, BigNat(value));
  return table;
}

}  // namespace bkneser
