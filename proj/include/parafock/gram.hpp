#pragma once

#include <vector>

#include "parafock/exact_linalg.hpp"
#include "parafock/monomial.hpp"

namespace parafock::induced {

struct GramMatrix {
  Weight11 weight;
  std::vector<MonomialState> states;  // theta ascending
  linalg::RationalMatrix entries;     // entries[i][j] = <states[i]|states[j]>
};

// Throws std::invalid_argument when the weight is not (-p/2 + a | p/2 + b)
// with integers a, b >= 0.
GramMatrix gram_matrix(const Weight11& w, const BigRational& p);

struct GramAnalysis {
  GramMatrix gram;
  std::size_t rank = 0;
  // Kernel of the Gram form: integer coefficients, content 1, first nonzero
  // coefficient positive. These vectors span the weight space of M(p).
  std::vector<MonomialVector> null_vectors;
};

GramAnalysis gram_rank_and_null(const Weight11& w, const BigRational& p);

// "2|1,1,0> - |0,0,1>"
std::string to_string(const MonomialVector& v);

}  // namespace parafock::induced
