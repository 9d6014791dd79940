#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "bkneser/hochster.hpp"
#include "slice_internal.hpp"

namespace bkneser {

namespace {

using boost::multiprecision::cpp_int;
using BitRow = std::vector<std::uint64_t>;

void require_field(int p) {
  if (p == 0) return;
  bool prime = p >= 2;
  for (int d = 2; prime && static_cast<long long>(d) * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw DomainError("field characteristic must be 0 or a prime, got " + std::to_string(p));
}

std::size_t rank_gf2(std::vector<BitRow> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  for (std::size_t w = 0; w < words; ++w)
    for (int bit = 0; bit < 64; ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t pivot = rank;
      while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r)
        if (rows[r][w] & mask)
          for (std::size_t x = w; x < words; ++x) rows[r][x] ^= rows[rank][x];
      if (++rank == rows.size()) return rank;
    }
  return rank;
}

std::size_t rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inverse = [p](long long a) {
    long long result = 1, e = p - 2;
    for (a %= p; e > 0; e >>= 1, a = a * a % p)
      if (e & 1) result = result * a % p;
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const long long inv = inverse(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const long long factor = rows[r][c] * inv % p;
      for (std::size_t x = c; x < cols; ++x)
        rows[r][x] = static_cast<int>(((rows[r][x] - factor * rows[rank][x]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination: every intermediate is an exact integer.
std::size_t rank_rational(const std::vector<std::vector<int>>& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input.front().size();
  std::vector<std::vector<cpp_int>> a(input.size(), std::vector<cpp_int>(cols));
  for (std::size_t r = 0; r < input.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = input[r][c];
  cpp_int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t x = c + 1; x < cols; ++x) a[r][x] = (a[rank][c] * a[r][x] - a[r][c] * a[rank][x]) / previous;
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t index_of(const std::vector<std::uint64_t>& stratum, std::uint64_t face) {
  return static_cast<std::size_t>(std::lower_bound(stratum.begin(), stratum.end(), face) - stratum.begin());
}

// Rank of the boundary map from faces of cardinality `size` to cardinality size-1.
std::size_t boundary_rank(const ComplexSlice& slice, std::size_t size, int p, const OracleGuards& guards) {
  if (size == 0 || size >= slice.strata.size()) return 0;
  const auto& upper = slice.strata[size];
  const auto& lower = slice.strata[size - 1];
  if (upper.empty() || lower.empty()) return 0;
  const std::uint64_t cells = static_cast<std::uint64_t>(upper.size()) * lower.size();
  if (cells > guards.max_matrix_cells)
    throw GuardExceeded("max_matrix_cells", guards.max_matrix_cells,
                        "boundary matrix with " + std::to_string(cells) + " cells");
  if (p == 2) {
    std::vector<BitRow> rows(upper.size(), BitRow((lower.size() + 63) / 64, 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
      for (std::uint64_t rest = upper[r]; rest != 0; rest &= rest - 1) {
        const std::size_t c = index_of(lower, upper[r] & ~(rest & (~rest + 1)));
        rows[r][c >> 6] |= std::uint64_t{1} << (c & 63);
      }
    return rank_gf2(std::move(rows));
  }
  std::vector<std::vector<int>> rows(upper.size(), std::vector<int>(lower.size(), 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int sign = 1;
    for (std::uint64_t rest = upper[r]; rest != 0; rest &= rest - 1, sign = -sign)
      rows[r][index_of(lower, upper[r] & ~(rest & (~rest + 1)))] = sign;
  }
  return p == 0 ? rank_rational(rows) : rank_mod_p(std::move(rows), p);
}

}  // namespace

std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, int field_char) {
  require_field(field_char);
  if (field_char == 0) return rank_rational(rows);
  return rank_mod_p(rows, field_char);
}

std::uint64_t ComplexSlice::face_count() const {
  std::uint64_t total = 0;
  for (const auto& s : strata) total += s.size();
  return total;
}

namespace detail {

ComplexSlice enumerate_faces(const std::vector<std::uint64_t>& rows, std::uint64_t w, const OracleGuards& guards) {
  ComplexSlice slice;
  slice.w = w;
  std::uint64_t produced = 0;
  // Depth-first over candidate vertices; a face extends only by vertices
  // above its largest member that see none of it.
  auto visit = [&](auto&& self, std::uint64_t face, std::uint64_t candidates) -> void {
    if (++produced > guards.max_faces)
      throw GuardExceeded("max_faces", guards.max_faces, "independence complex slice");
    const auto size = static_cast<std::size_t>(__builtin_popcountll(face));
    if (slice.strata.size() <= size) slice.strata.resize(size + 1);
    slice.strata[size].push_back(face);
    for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      self(self, face | (std::uint64_t{1} << v), (rest & (rest - 1)) & ~rows[v]);
    }
  };
  visit(visit, 0, w);
  for (auto& s : slice.strata) std::sort(s.begin(), s.end());
  return slice;
}

}  // namespace detail

ComplexSlice enumerate_faces(const Graph& g, const VertexSet& w, const OracleGuards& guards) {
  if (g.order() > 64) throw DomainError("face enumeration supports at most 64 vertices");
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row_word(v);
  return detail::enumerate_faces(rows, w.words().empty() ? 0 : w.words()[0], guards);
}

std::vector<std::int64_t> reduced_homology_dims(const ComplexSlice& slice, int field_char, const OracleGuards& guards) {
  require_field(field_char);
  if (slice.strata.empty()) return {};
  const std::size_t levels = slice.strata.size();
  // rank[s] = rank of the boundary from cardinality s to s - 1
  std::vector<std::int64_t> rank(levels + 1, 0);
  for (std::size_t s = 1; s < levels; ++s) rank[s] = static_cast<std::int64_t>(boundary_rank(slice, s, field_char, guards));
  std::vector<std::int64_t> dims(levels);
  for (std::size_t s = 0; s < levels; ++s)
    dims[s] = static_cast<std::int64_t>(slice.strata[s].size()) - rank[s] - rank[s + 1];
  return dims;
}

}  // namespace bkneser
