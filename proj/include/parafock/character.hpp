#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parafock/partition.hpp"
#include "parafock/polynomial.hpp"
#include "parafock/rational.hpp"

namespace parafock::characters {

// Truncated formal character of V-bar(p). Terms are keyed by the offset
// (a_1..a_m | b_1..b_n) from the lowest weight; the prefactor
// x_1^{-p/2}..x_m^{-p/2} y_1^{p/2}..y_n^{p/2} is kept symbolic.
struct WeightSeries {
  int m = 0;
  int n = 0;
  int degree = 0;
  BigRational p;
  std::map<Exponents, std::int64_t> terms;

  std::string prefactor() const;  // "(-p/2,...|p/2,...)" with p substituted
  std::int64_t multiplicity(const Exponents& offset) const;
  Polynomial as_polynomial() const;
  friend bool operator==(const WeightSeries& a, const WeightSeries& b) {
    return a.m == b.m && a.n == b.n && a.degree == b.degree && a.terms == b.terms;
  }
};

// prod(1 + x_i y_j) / (prod(1 - x_i) prod_{i<k}(1 - x_i x_k) prod(1 - y_j) prod_{j<l}(1 - y_j y_l))
// expanded to total degree L.
Polynomial character_product(int m, int n, int degree);

WeightSeries character_series(int m, int n, const BigRational& p, int degree);

// Histogram of weights of the PBW monomials
//   prod (c_i^+)^{k_i} prod_{i<j} ([c_i^+, c_j^+])^{k_ij}
// with k_ij in {0, 1} when exactly one of i, j is a paraboson index.
WeightSeries pbw_multiplicities(int m, int n, const BigRational& p, int degree);

struct IdentityReport {
  std::string identity;
  int m = 0;
  int n = 0;
  int degree = 0;
  bool status = false;
  std::size_t mismatched_terms = 0;
};

// character_product(m, n, L) == sum over hook lambda, |lambda| <= L, of s_lambda(x|y).
IdentityReport king_identity_check(int m, int n, int degree);

// u(m|n) covariant highest weight [mu_1r..mu_mr | mu_{m+1,r}..mu_rr], r = m+n.
struct HighestWeightMN {
  std::vector<int> even;  // m entries
  std::vector<int> odd;   // n entries

  std::vector<int> top_row() const;
  friend auto operator<=>(const HighestWeightMN&, const HighestWeightMN&) = default;
};

std::string to_string(const HighestWeightMN& w);  // "[3|1]", "[2,2|1,0]"

// mu_ir = lambda_i (i <= m), mu_{m+i,r} = max(0, lambda'_i - m) (i <= n).
// Throws std::invalid_argument for non-hook lambda.
HighestWeightMN hw_from_partition(const Partition& lambda, int m, int n);

// Inverse map: lambda = (mu_1r..mu_mr) followed by the conjugate of the odd
// part. Throws std::invalid_argument if the weight is not covariant.
Partition partition_from_hw(const HighestWeightMN& w);

struct BranchingTerm {
  Partition lambda;
  HighestWeightMN highest_weight;
  std::int64_t multiplicity;
  std::int64_t dimension;  // s_lambda(1..1|1..1)
};

struct BranchingReport {
  std::vector<BranchingTerm> terms;  // by |lambda|, then the peeling order
  bool exact = false;                // nothing left after peeling
  bool multiplicity_free = false;
};

// Writes the truncated character as sum c_lambda s_lambda(x|y) by peeling
// off the lexicographically leading monomial x^mu_even y^mu_odd, which is
// the highest weight of a unique hook lambda.
BranchingReport decompose_branching(const WeightSeries& series);

}  // namespace parafock::characters
