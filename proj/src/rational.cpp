#include "parafock/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace parafock {

BigRational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  BigRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigRational pochhammer(const BigRational& a, unsigned k) {
  BigRational result(1);
  BigRational factor = a;
  for (unsigned i = 0; i < k; ++i) {
    result *= factor;
    factor += 1;
  }
  return result;
}

BigInt factorial(unsigned k) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

}  // namespace parafock
