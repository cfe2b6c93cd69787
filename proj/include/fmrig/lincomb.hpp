#pragma once

#include "fmrig/nat.hpp"

#include <compare>
#include <map>
#include <utility>

namespace fmrig {

/// Finite ℕ-linear combination of keys: the free commutative monoid on
/// `Key`. Stored coefficients are always positive, keys kept in `Key` order,
/// so two combinations are equal exactly when their maps are equal.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Nat>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;

  static LinComb single(Key key, Nat coeff = 1) {
    LinComb out;
    out.add(std::move(key), coeff);
    return out;
  }

  void add(const Key& key, const Nat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
  }

  void add(Key&& key, const Nat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) it->second += coeff;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) {
    a += b;
    return a;
  }

  LinComb scaled(const Nat& factor) const {
    LinComb out;
    if (factor == 0) return out;
    out.terms_ = terms_;
    if (factor != 1)
      for (auto& [k, c] : out.terms_) c *= factor;
    return out;
  }

  Nat coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Nat{0} : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  friend bool operator==(const LinComb&, const LinComb&) = default;

  // Total order: fewer terms first, then lexicographic on (key, coeff).
  friend std::strong_ordering compare(const LinComb& a, const LinComb& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first < ib->first) return std::strong_ordering::less;
      if (ib->first < ia->first) return std::strong_ordering::greater;
      if (ia->second != ib->second)
        return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  map_type terms_;
};

}  // namespace fmrig
