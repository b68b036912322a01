#pragma once

#include "parafock/partition.hpp"
#include "parafock/polynomial.hpp"

namespace parafock::characters {

// Skew Schur polynomial s_{outer/inner}(x_1..x_k) by semistandard tableau
// enumeration. Zero unless inner is contained in outer.
Polynomial skew_schur(const Partition& outer, const Partition& inner, int variables);

inline Polynomial schur(const Partition& lambda, int variables) { return skew_schur(lambda, Partition(), variables); }

// Supersymmetric Schur polynomial s_lambda(x_1..x_m | y_1..y_n) in m + n
// variables (x first), by (m|n) super-semistandard tableaux: letters
// 1 < ... < m < 1' < ... < n'; unprimed letters weakly increase along rows
// and strictly down columns, primed letters strictly along rows and weakly
// down columns. Zero when lambda violates the hook condition.
Polynomial super_schur_tableaux(const Partition& lambda, int m, int n);

// The same function through sum_tau s_{lambda/tau}(x) s_{tau'}(y).
Polynomial super_schur_skew_sum(const Partition& lambda, int m, int n);

// Tableau route, cross-checked against the skew sum; throws std::logic_error
// if the two disagree.
Polynomial super_schur(const Partition& lambda, int m, int n);

}  // namespace parafock::characters
