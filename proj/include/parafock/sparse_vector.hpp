#pragma once

#include <map>
#include <utility>

#include "parafock/radical.hpp"
#include "parafock/rational.hpp"

namespace parafock {

// Finite linear combination of basis keys. Zero coefficients are never stored.
template <class Key, class Scalar>
class SparseVector {
 public:
  using key_type = Key;
  using scalar_type = Scalar;
  using container = std::map<Key, Scalar>;

  SparseVector() = default;
  SparseVector(const Key& key, Scalar coefficient = Scalar(1)) { add(key, std::move(coefficient)); }  // NOLINT

  void add(const Key& key, const Scalar& coefficient) {
    if (is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  SparseVector& operator*=(const BigRational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= q;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const BigRational& q, SparseVector a) { return a *= q; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  container terms_;
};

}  // namespace parafock
