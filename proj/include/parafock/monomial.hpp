#pragma once

#include <compare>
#include <string>
#include <vector>

#include "parafock/generator.hpp"
#include "parafock/rational.hpp"
#include "parafock/sparse_vector.hpp"

namespace parafock::induced {

// |k,l,theta> = (c1+)^k (c2+)^l ([c1+,c2+])^theta |0>, the PBW basis of the
// induced module for m = n = 1.
struct MonomialState {
  int k = 0;
  int l = 0;
  int theta = 0;

  int level() const { return k + l + 2 * theta; }
  // Offsets of the weight from the lowest weight (-p/2 | p/2).
  int epsilon_offset() const { return k + theta; }
  int delta_offset() const { return l + theta; }
  bool valid() const { return k >= 0 && l >= 0 && (theta == 0 || theta == 1); }

  friend auto operator<=>(const MonomialState&, const MonomialState&) = default;
};

std::string to_string(const MonomialState& s);  // "|k,l,theta>"

using MonomialVector = SparseVector<MonomialState, BigRational>;

// Weight (w1 | w2) = (-p/2 + k + theta | p/2 + l + theta).
struct Weight11 {
  BigRational w1;
  BigRational w2;

  static Weight11 from_offsets(int epsilon_offset, int delta_offset, const BigRational& p);
  friend bool operator==(const Weight11&, const Weight11&) = default;
};

Weight11 weight(const MonomialState& s, const BigRational& p);

// Action of c1+, c2+, c1-, c2- on the monomial basis, extended linearly.
// Requires p > 0; throws std::invalid_argument for other generators.
MonomialVector apply_generator(const Generator& g, const MonomialVector& v, const BigRational& p);

// Closed-form <s|s>:
//   <k,2l,0|k,2l,0>     = k! (p-k+1)_k 2^{2l} l! (p/2)_l
//   <k,2l+1,0|k,2l+1,0> = k! (p-k+1)_k 2^{2l+1} l! (p/2)_{l+1}
//   <k,2l,1|k,2l,1>     = 4 k! (p-k)_{k+1} 2^{2l} l! (p/2+1)_l
//   <k,2l+1,1|k,2l+1,1> = 4 k! (p-k)_{k+1} 2^{2l} l! (p-k+2l+1) (p/2+1)_l
BigRational norm_squared_closed(const MonomialState& s, const BigRational& p);

// <a|v> computed from the vacuum: apply the adjoint word of a, i.e.
// ([c2-,c1-])^theta (c2-)^l (c1-)^k, to v and read off the |0,0,0> coefficient.
BigRational inner_product_oracle(const MonomialState& a, const MonomialVector& v, const BigRational& p);

// States of the given weight offsets ordered by theta ascending.
std::vector<MonomialState> states_of_weight(int epsilon_offset, int delta_offset);

// All states with level <= max_level, ordered by (level, theta, k).
std::vector<MonomialState> states_up_to_level(int max_level);

}  // namespace parafock::induced
