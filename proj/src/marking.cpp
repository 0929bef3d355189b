#include "markgraph/marking.hpp"

#include <algorithm>
#include <stdexcept>

namespace markgraph {

Marking Marking::from_string(std::string values) {
  for (char c : values) {
    if (c < '0' || c > '2') {
      throw std::invalid_argument("marking string '" + values +
                                  "' contains a value outside {0,1,2}");
    }
  }
  Marking m;
  m.values_ = std::move(values);
  return m;
}

std::size_t Marking::count(int v) const {
  return static_cast<std::size_t>(
      std::count(values_.begin(), values_.end(), static_cast<char>('0' + v)));
}

bool is_admissible(const ConflictSystem& cs, const Marking& m) {
  if (m.size() != cs.size()) return false;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!m.is_marked(p)) continue;
    for (std::size_t q : cs.neighbours(p)) {
      if (m.is_marked(q)) return false;
    }
  }
  return true;
}

void require_admissible(const ConflictSystem& cs, const Marking& m) {
  if (m.size() != cs.size()) {
    throw std::invalid_argument("marking '" + m.key() + "' has " +
                                std::to_string(m.size()) +
                                " entries, the system has " +
                                std::to_string(cs.size()));
  }
  if (!is_admissible(cs, m)) {
    throw std::invalid_argument("marking '" + m.key() +
                                "' marks two conflicting elements");
  }
}

bool is_blocked(const ConflictSystem& cs, const Marking& m, std::size_t p) {
  for (std::size_t q : cs.neighbours(p)) {
    if (m.is_marked(q)) return true;
  }
  return false;
}

Bigrade bigrade(const ConflictSystem& cs, const Marking& m,
                std::optional<Sector> sector) {
  Bigrade b;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (sector && cs.element(p).sector != *sector) continue;
    if (m.value(p) == 1) ++b.i;
    if (m.value(p) == 2) ++b.j;
  }
  return b;
}

void Chain::add(const Marking& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Chain::coefficient(const Marking& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Chain Chain::operator-() const {
  Chain out(system_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

}  // namespace markgraph
