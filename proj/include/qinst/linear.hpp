#pragma once

// Sparse formal linear combinations over the Laurent ring, keyed by an
// ordered basis type. Zero coefficients are never stored.

#include <functional>
#include <map>
#include <utility>

#include "qinst/coeff.hpp"

namespace qinst {

template <typename Key, typename Compare = std::less<Key>>
class LinComb {
 public:
  using map_type = std::map<Key, Laurent, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& key, Laurent c = Laurent(1)) { add(key, std::move(c)); }

  void add(const Key& key, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds a * b at `key`.
  void add_product(const Key& key, const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, a * b);
      return;
    }
    it->second.add_product(a, b);
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(const LinComb& other, const Laurent& scale = Laurent(1)) {
    if (scale.is_zero()) return;
    const bool unit = scale.is_one();
    for (const auto& [key, c] : other.terms_) {
      if (unit) {
        add(key, c);
      } else {
        add_product(key, c, scale);
      }
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  Laurent coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Laurent{} : it->second;
  }

  LinComb& operator+=(const LinComb& rhs) {
    add(rhs);
    return *this;
  }
  LinComb& operator-=(const LinComb& rhs) {
    add(rhs, Laurent(-1));
    return *this;
  }
  LinComb& operator*=(const Laurent& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else if (!s.is_one()) {
      for (auto& [key, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
  friend LinComb operator*(const Laurent& s, LinComb rhs) { return rhs *= s; }
  friend LinComb operator*(LinComb lhs, const Laurent& s) { return lhs *= s; }
  LinComb operator-() const { return Laurent(-1) * *this; }

  friend bool operator==(const LinComb& lhs, const LinComb& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  map_type terms_;
};

}  // namespace qinst
