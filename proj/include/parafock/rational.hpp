#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parafock {

using BigInt = mpz_class;
// GMP keeps mpq_class canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using BigRational = mpq_class;

BigRational make_rational(long numerator, long denominator = 1);

// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text
// or a zero denominator.
BigRational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const BigRational& q);

bool is_integer(const BigRational& q);
inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

// (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
BigRational pochhammer(const BigRational& a, unsigned k);

BigInt factorial(unsigned k);

}  // namespace parafock
