#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markgraph/conflict.hpp"

namespace markgraph {

/**
 * Assignment element -> {0,1,2}, stored as its value string ("0102...").
 * The value string doubles as the canonical key, so lexicographic order
 * on markings is lexicographic order on value vectors.
 */
class Marking {
 public:
  Marking() = default;
  /// All-zero marking on n elements.
  explicit Marking(std::size_t n) : values_(n, '0') {}
  /// Throws std::invalid_argument for characters outside '0'..'2'.
  static Marking from_string(std::string values);

  std::size_t size() const { return values_.size(); }
  int value(std::size_t p) const { return values_[p] - '0'; }
  const std::string& key() const { return values_; }

  Marking with_value(std::size_t p, int v) const {
    Marking m = *this;
    m.values_[p] = static_cast<char>('0' + v);
    return m;
  }

  bool is_marked(std::size_t p) const { return values_[p] != '0'; }
  std::size_t count(int v) const;
  std::size_t marked_count() const { return size() - count(0); }

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking&, const Marking&) = default;

 private:
  std::string values_;
};

bool is_admissible(const ConflictSystem& cs, const Marking& m);
/// Throws std::invalid_argument when m is not an admissible marking of cs.
void require_admissible(const ConflictSystem& cs, const Marking& m);

/// True when p conflicts with some marked element of m.
bool is_blocked(const ConflictSystem& cs, const Marking& m, std::size_t p);

struct Bigrade {
  std::size_t i = 0;  // 1-marks
  std::size_t j = 0;  // 2-marks
  friend bool operator==(const Bigrade&, const Bigrade&) = default;
};

/// Bigrade of m, optionally counted inside one sector only.
Bigrade bigrade(const ConflictSystem& cs, const Marking& m,
                std::optional<Sector> sector = {});

/// Formal integer combination of markings; zero coefficients are never
/// stored.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::string system) : system_(std::move(system)) {}

  void add(const Marking& m, std::int64_t coeff);
  std::int64_t coefficient(const Marking& m) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Marking, std::int64_t>& terms() const { return terms_; }
  const std::string& system() const { return system_; }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator-() const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::string system_;
  std::map<Marking, std::int64_t> terms_;
};

}  // namespace markgraph
