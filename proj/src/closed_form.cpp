#include "bkneser/closed_form.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace bkneser {

namespace {

void check_params(int m, int k, int i) {
  if (k < 1 || m < 2 * k) throw DomainError("H(m,k) requires k >= 1 and m >= 2k");
  if (m > kMaxGroundSet) throw DomainError("H(m,k) requires m <= 62");
  if (i < 1) throw DomainError("linear strand index must be >= 1");
}

// n_exact(m, s, m - k, t) keyed by (s, t); shared across indices.
class FamilyCounts {
 public:
  FamilyCounts(int m, int k) : m_(m), k_(k) {}

  const BigNat& get(int s, int t) {
    auto [it, inserted] = memo_.try_emplace({s, t});
    if (inserted) it->second = n_exact(m_, s, m_ - k_, t);
    return it->second;
  }

 private:
  int m_;
  int k_;
  std::map<std::pair<int, int>, BigNat> memo_;
};

std::vector<StrandTerm> terms(int m, int k, int i, FamilyCounts& counts) {
  std::vector<StrandTerm> out;
  for (int r = 1; r <= i; ++r) {
    const int s = i + 1 - r;
    for (int t = k; t <= m - k; ++t) {
      const BigNat& family = counts.get(s, t);
      BigNat value;
      if (!family.is_zero()) value = binom(binom(t, k), r) * binom(m, t) * family;
      out.push_back({r, s, t, std::move(value)});
    }
  }
  return out;
}

BigNat sum(const std::vector<StrandTerm>& ts) {
  BigNat total;
  for (const auto& t : ts) total += t.value;
  return total;
}

}  // namespace

std::vector<StrandTerm> betti_linear_terms(int m, int k, int i) {
  check_params(m, k, i);
  FamilyCounts counts(m, k);
  return terms(m, k, i, counts);
}

BigNat betti_linear(int m, int k, int i) { return sum(betti_linear_terms(m, k, i)); }

LinearStrand linear_strand(int m, int k, int i_max) {
  check_params(m, k, std::max(i_max, 1));
  LinearStrand out{m, k, {}, 0};
  FamilyCounts counts(m, k);
  for (int i = 1; i <= i_max; ++i) {
    out.values.push_back(sum(terms(m, k, i, counts)));
    if (!out.values.back().is_zero()) out.support_end = i;
  }
  return out;
}

std::string LinearStrand::to_json() const {
  nlohmann::ordered_json doc;
  doc["m"] = m;
  doc["k"] = k;
  doc["support_end"] = support_end;
  doc["values"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    doc["values"].push_back({{"i", i + 1}, {"beta", values[i].to_string()}});
  return doc.dump(2);
}

std::string LinearStrand::to_csv() const {
  std::ostringstream os;
  os << "i,beta\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << i + 1 << ',' << values[i] << '\n';
  return os.str();
}

}  // namespace bkneser
