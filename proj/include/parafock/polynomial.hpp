#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parafock::characters {

using Exponents = std::vector<int>;

// Integer polynomial in a fixed number of commuting variables. Zero
// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int variables = 0) : variables_(variables) {}
  static Polynomial one(int variables);
  static Polynomial monomial(const Exponents& e, std::int64_t coefficient = 1);

  int variables() const { return variables_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Exponents& e) const;

  void add(const Exponents& e, std::int64_t coefficient);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  // Product with all terms of total degree > max_degree dropped.
  Polynomial multiply(const Polynomial& other, std::optional<int> max_degree = std::nullopt) const;
  Polynomial truncated(int max_degree) const;
  Polynomial homogeneous_part(int degree) const;

  // Sum of coefficients (value at all variables 1).
  std::int64_t evaluate_at_ones() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Terms as "3*x1^2*y1", variables named x1..xm then y1..yn.
  std::string to_string(int m) const;

 private:
  int variables_;
  std::map<Exponents, std::int64_t> terms_;
};

int total_degree(const Exponents& e);

}  // namespace parafock::characters
