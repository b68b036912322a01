#pragma once

#include "parafock/check_report.hpp"
#include "parafock/gram.hpp"

namespace parafock::induced {

// norm_squared_closed(s) == inner_product_oracle(s, s) for every state with
// level <= max_level.
CheckReport check_norms(const BigRational& p, int max_level);

// <c_j^+ a | b> == <a | c_j^- b> for monomials a, b with level <= max_level.
CheckReport check_adjointness(const BigRational& p, int max_level);

// Every signed triple relation as an operator identity on each state of
// level <= max_level.
CheckReport check_triple_relations(const BigRational& p, int max_level);

// [c1-, c1+] acts as p - 2(k + theta), {c2-, c2+} as p + 2(l + theta).
CheckReport check_cartan(const BigRational& p, int max_level);

// Integer p: the closed-form norms are >= 0 for k <= p - theta and vanish at
// k = p - theta + 1, for l <= max_l.
CheckReport check_positivity_boundary(int p, int max_l);

// Integer p: for every weight of level <= max_level the Gram rank equals the
// number of GZ patterns of that weight with mu12 <= p.
CheckReport check_gram_rank_vs_gz(int p, int max_level);

}  // namespace parafock::induced
