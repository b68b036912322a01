#pragma once

#include <string>
#include <vector>

#include "parafock/character.hpp"

namespace parafock::characters {

// Triangular GZ pattern of a covariant u(m|n) module: rows[q - 1] is row q
// (q = 1..r, r = m+n) and holds mu_{1q}..mu_{qq}. rows.back() is the top row.
struct GeneralPattern {
  std::vector<std::vector<int>> rows;
  friend auto operator<=>(const GeneralPattern&, const GeneralPattern&) = default;
};

std::string to_string(const GeneralPattern& pattern);

struct GZEnumeration {
  std::size_t count = 0;
  std::vector<GeneralPattern> patterns;
};

// Conditions on the top row: weakly decreasing except between positions m
// and m+1, nonnegative, and mu_mr >= #{i > m : mu_ir > 0}.
bool is_covariant_highest_weight(const HighestWeightMN& w);

// All patterns below the top row Lambda satisfying:
//  - mu_{i,q+1} - mu_{iq} in {0,1} for i <= m, q >= m
//  - mu_mq >= #{m < i <= q : mu_iq > 0} for q > m
//  - mu_{m,m+1} = 0 forces mu_mm = 0
//  - rows q in (m, r) weakly decrease in positions 1..m
//  - betweenness mu_{i,q+1} >= mu_iq >= mu_{i+1,q+1} for i <= q < m and m < i <= q < r.
// Throws std::invalid_argument when Lambda is not a covariant highest weight.
GZEnumeration enumerate_gz_general(const HighestWeightMN& lambda, int m, int n);

}  // namespace parafock::characters
