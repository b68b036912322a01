#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parafock/rational.hpp"

namespace parafock {

// Exact real number sum_i c_i sqrt(d_i) with c_i rational and nonzero, d_i
// squarefree and strictly increasing. The rational part has radicand 1.
//
// Square roots of distinct squarefree integers are linearly independent over
// the rationals, so two values are equal iff their canonical term lists are.
class RadicalScalar {
 public:
  struct Term {
    BigRational coefficient;
    std::int64_t radicand;

    friend bool operator==(const Term&, const Term&) = default;
  };

  RadicalScalar() = default;
  RadicalScalar(const BigRational& q);  // NOLINT: rationals embed implicitly
  RadicalScalar(long n) : RadicalScalar(BigRational(n)) {}  // NOLINT

  // Canonicalizes an arbitrary term list: pulls square factors out of each
  // radicand, merges equal radicands and drops zeros. Radicands must be >= 0.
  static RadicalScalar from_terms(std::vector<Term> terms);

  // c * sqrt(d) for a nonnegative integer d.
  static RadicalScalar sqrt_of(std::int64_t d, const BigRational& c = BigRational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1); }
  // Throws std::domain_error when the value is irrational.
  BigRational to_rational() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& other);
  RadicalScalar& operator-=(const RadicalScalar& other);
  RadicalScalar& operator*=(const RadicalScalar& other);
  RadicalScalar& operator*=(const BigRational& q);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator*(RadicalScalar a, const BigRational& q) { return a *= q; }
  friend RadicalScalar operator*(const BigRational& q, RadicalScalar a) { return a *= q; }
  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

  // 1/x for a single-term x; throws std::domain_error for zero or sums.
  RadicalScalar reciprocal() const;

  double to_double() const;
  // "c1*sqrt(d1) + c2*sqrt(d2)", rational part without sqrt, "0" for zero.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const RadicalScalar& x) { return x.is_zero(); }

RadicalScalar radical_add(const RadicalScalar& x, const RadicalScalar& y);
RadicalScalar radical_mul(const RadicalScalar& x, const RadicalScalar& y);
// Single positive term r with r*r = q. Throws std::domain_error for q < 0.
RadicalScalar sqrt_rational(const BigRational& q);
double radical_to_float(const RadicalScalar& x);

// Splits n > 0 as n = s^2 d with d squarefree. Returns {s, d}.
std::pair<BigInt, BigInt> extract_square(const BigInt& n);

}  // namespace parafock
