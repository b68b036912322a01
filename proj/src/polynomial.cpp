#include "parafock/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace parafock::characters {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::one(int variables) {
  Polynomial p(variables);
  p.add(Exponents(static_cast<std::size_t>(variables), 0), 1);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, std::int64_t coefficient) {
  Polynomial p(static_cast<int>(e.size()));
  p.add(e, coefficient);
  return p;
}

std::int64_t Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add(const Exponents& e, std::int64_t coefficient) {
  if (static_cast<int>(e.size()) != variables_) throw std::invalid_argument("exponent vector has wrong length");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("polynomials in different variable sets");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("polynomials in different variable sets");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

Polynomial Polynomial::multiply(const Polynomial& other, std::optional<int> max_degree) const {
  if (other.variables_ != variables_) throw std::invalid_argument("polynomials in different variable sets");
  Polynomial out(variables_);
  Exponents e(static_cast<std::size_t>(variables_));
  for (const auto& [a, ca] : terms_) {
    const int da = total_degree(a);
    for (const auto& [b, cb] : other.terms_) {
      if (max_degree && da + total_degree(b) > *max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

std::int64_t Polynomial::evaluate_at_ones() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string Polynomial::to_string(int m) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < variables_; ++i) {
      const int power = e[static_cast<std::size_t>(i)];
      if (power == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < m ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - m + 1));
      if (power > 1) mono += "^" + std::to_string(power);
    }
    std::int64_t magnitude = c < 0 ? -c : c;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (mono.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace parafock::characters
