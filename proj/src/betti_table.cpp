#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "bkneser/hochster.hpp"

namespace bkneser {

BigNat BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigNat{} : it->second;
}

void BettiTable::add(int i, int j, const BigNat& value) {
  if (value.is_zero()) return;
  if (i < 0 || j < i) throw DomainError("Betti entry (" + std::to_string(i) + "," + std::to_string(j) + ") is out of range");
  entries_[{i, j}] += value;
}

int BettiTable::pd() const {
  int best = 0;
  for (const auto& [key, value] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::reg() const {
  int best = 0;
  for (const auto& [key, value] : entries_) best = std::max(best, key.second - key.first);
  return best;
}

int pd_of(const BettiTable& t) { return t.pd(); }
int reg_of(const BettiTable& t) { return t.reg(); }

std::string BettiTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["char"] = char_;
  doc["variables"] = n_;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries_)
    doc["entries"].push_back({{"i", key.first}, {"j", key.second}, {"value", value.to_string()}});
  return doc.dump(2);
}

BettiTable BettiTable::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  BettiTable t(doc.value("variables", 0), doc.at("char").get<int>());
  for (const auto& e : doc.at("entries"))
    t.add(e.at("i").get<int>(), e.at("j").get<int>(), BigNat::from_string(e.at("value").get<std::string>()));
  return t;
}

std::string BettiTable::to_text() const {
  const int cols = pd() + 1;
  const int rows = reg() + 1;
  std::vector<BigNat> totals(cols);
  std::size_t width = 1;
  for (const auto& [key, value] : entries_) {
    totals[key.first] += value;
    width = std::max(width, value.to_string().size());
  }
  for (const auto& t : totals) width = std::max(width, t.to_string().size());
  const std::size_t label = std::max<std::size_t>(6, std::to_string(rows - 1).size() + 1);
  std::ostringstream os;
  os << std::setw(static_cast<int>(label)) << "";
  for (int i = 0; i < cols; ++i) os << ' ' << std::setw(static_cast<int>(width)) << i;
  os << "\n" << std::setw(static_cast<int>(label)) << "total:";
  for (const auto& t : totals) os << ' ' << std::setw(static_cast<int>(width)) << t.to_string();
  os << "\n";
  for (int d = 0; d < rows; ++d) {
    os << std::setw(static_cast<int>(label)) << (std::to_string(d) + ":");
    for (int i = 0; i < cols; ++i) {
      const BigNat v = at(i, i + d);
      os << ' ' << std::setw(static_cast<int>(width)) << (v.is_zero() ? std::string(".") : v.to_string());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bkneser
