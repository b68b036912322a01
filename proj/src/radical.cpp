#include "parafock/radical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace parafock {

namespace {

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("radicand does not fit in 64 bits: " + n.get_str());
  return n.get_si();
}

}  // namespace

std::pair<BigInt, BigInt> extract_square(const BigInt& n) {
  if (n <= 0) throw std::domain_error("extract_square expects a positive integer");
  BigInt rest = n;
  BigInt square(1);
  BigInt squarefree(1);
  for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    int multiplicity = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) square *= p;
    if (multiplicity % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  return {square, squarefree};
}

RadicalScalar::RadicalScalar(const BigRational& q) {
  if (sgn(q) != 0) terms_.push_back({q, 1});
}

RadicalScalar RadicalScalar::from_terms(std::vector<Term> terms) {
  std::map<std::int64_t, BigRational> merged;
  for (auto& t : terms) {
    if (t.radicand < 0) throw std::domain_error("negative radicand");
    if (t.radicand == 0 || sgn(t.coefficient) == 0) continue;
    auto [square, squarefree] = extract_square(BigInt(static_cast<long>(t.radicand)));
    merged[to_int64(squarefree)] += t.coefficient * square;
  }
  RadicalScalar result;
  for (auto& [d, c] : merged) {
    if (sgn(c) != 0) result.terms_.push_back({c, d});
  }
  return result;
}

RadicalScalar RadicalScalar::sqrt_of(std::int64_t d, const BigRational& c) {
  return from_terms({{c, d}});
}

BigRational RadicalScalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + to_string());
  return terms_.empty() ? BigRational(0) : terms_[0].coefficient;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar result = *this;
  for (auto& t : result.terms_) t.coefficient = -t.coefficient;
  return result;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      BigRational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back({c, a->radicand});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& other) { return *this += -other; }

RadicalScalar& RadicalScalar::operator*=(const BigRational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= q;
  }
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& other) {
  if (other.is_rational()) return *this *= other.to_rational();
  if (is_rational()) {
    BigRational q = to_rational();
    *this = other;
    return *this *= q;
  }
  // sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)) with g = gcd(d1, d2); the
  // cofactors are coprime and squarefree, so their product is squarefree.
  std::map<std::int64_t, BigRational> merged;
  for (const auto& x : terms_) {
    for (const auto& y : other.terms_) {
      std::int64_t g = std::gcd(x.radicand, y.radicand);
      std::int64_t a = x.radicand / g;
      std::int64_t b = y.radicand / g;
      std::int64_t d = 0;
      if (__builtin_mul_overflow(a, b, &d)) throw std::overflow_error("radicand product overflows 64 bits");
      merged[d] += x.coefficient * y.coefficient * BigRational(static_cast<long>(g));
    }
  }
  terms_.clear();
  for (auto& [d, c] : merged) {
    if (sgn(c) != 0) terms_.push_back({c, d});
  }
  return *this;
}

RadicalScalar RadicalScalar::reciprocal() const {
  if (terms_.size() != 1) throw std::domain_error("reciprocal needs a single nonzero term, got " + to_string());
  const auto& t = terms_[0];
  // 1 / (c sqrt(d)) = sqrt(d) / (c d)
  BigRational c = 1 / (t.coefficient * BigRational(static_cast<long>(t.radicand)));
  RadicalScalar result;
  result.terms_.push_back({c, t.radicand});
  return result;
}

double RadicalScalar::to_double() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.coefficient.get_d() * std::sqrt(static_cast<double>(t.radicand));
  return sum;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational magnitude = abs(t.coefficient);
    bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.radicand == 1) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += "sqrt(" + std::to_string(t.radicand) + ")";
    }
    first = false;
  }
  return out;
}

RadicalScalar radical_add(const RadicalScalar& x, const RadicalScalar& y) { return x + y; }

RadicalScalar radical_mul(const RadicalScalar& x, const RadicalScalar& y) { return x * y; }

RadicalScalar sqrt_rational(const BigRational& q) {
  if (sgn(q) < 0) throw std::domain_error("square root of negative rational " + q.get_str());
  if (sgn(q) == 0) return {};
  // sqrt(a/b) = sqrt(a b) / b
  BigInt ab = q.get_num() * q.get_den();
  auto [square, squarefree] = extract_square(ab);
  BigRational c(square, q.get_den());
  c.canonicalize();
  return RadicalScalar::sqrt_of(to_int64(squarefree), c);
}

double radical_to_float(const RadicalScalar& x) { return x.to_double(); }

}  // namespace parafock
