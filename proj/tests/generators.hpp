#pragma once

// Seeded random inputs for property tests. A fixed seed keeps failures
// reproducible; the sweep sizes are chosen to run in well under a second.

#include <cstdint>
#include <random>
#include <vector>

#include "parafock/radical.hpp"

namespace testgen {

class Source {
 public:
  explicit Source(std::uint32_t seed = 20260101u) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  parafock::BigRational rational(long max_num, long max_den) {
    return parafock::make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  parafock::BigRational positive_rational(long max_num, long max_den) {
    return parafock::make_rational(integer(1, max_num), integer(1, max_den));
  }

  // Up to `terms` raw terms with arbitrary (not necessarily squarefree) radicands.
  std::vector<parafock::RadicalScalar::Term> raw_terms(int terms, long max_radicand, long max_coeff) {
    std::vector<parafock::RadicalScalar::Term> out;
    const long count = integer(0, terms);
    for (long i = 0; i < count; ++i) out.push_back({rational(max_coeff, max_coeff), integer(1, max_radicand)});
    return out;
  }

  parafock::RadicalScalar radical(int terms = 3, long max_radicand = 10000, long max_coeff = 1000000) {
    return parafock::RadicalScalar::from_terms(raw_terms(terms, max_radicand, max_coeff));
  }

 private:
  std::mt19937 engine_;
};

}  // namespace testgen
