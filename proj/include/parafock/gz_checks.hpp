#pragma once

#include <string>
#include <vector>

#include "parafock/check_report.hpp"
#include "parafock/gz_action.hpp"

namespace parafock::gz {

// Patterns swept per module: V(p) takes mu12 <= p. V-bar(p) takes
// mu12 <= floor(p) at integer p and mu12 <= floor(p) - 2 otherwise, so that no
// intermediate raise starts above p (those matrix elements are imaginary).
std::vector<GZPattern> module_patterns(const BigRational& p, int max_level, FockModule mode);

// All 64 signed triples on every pattern of the module with level <= max_level.
CheckReport check_triple_relations(const BigRational& p, int max_level, FockModule mode);

// [c1-, c1+] = -2 h1 and {c2-, c2+} = 2 h2 on every pattern, i.e. eigenvalues
// p - 2 mu11 and p + 2 (mu12 + mu22 - mu11).
CheckReport check_cartan(const BigRational& p, int max_level, FockModule mode);

// (mu'|c_j^-|mu) = (mu|c_j^+|mu') for all patterns with level <= max_level.
CheckReport check_adjoint_symmetry(const BigRational& p, int max_level, FockModule mode);

// c1-, c2- annihilate (0,0;0), which has weight (-p/2 | p/2).
CheckReport check_lowest_weight(const BigRational& p);

// No generator maps a mu12 = p pattern to a nonzero mu12 = p+1 coefficient.
// Patterns up to level max_level; p must be a positive integer.
CheckReport check_truncation_closure(int p, int max_level);

// For every (mu12, mu22) with 1 <= mu12 + mu22 <= max_level, the 2x2 CGC block
// coupling {(mu11=mu12, c2+), (mu11=mu12-1, c1+)} to the two targets of inner
// label mu12 is orthogonal: rows and columns orthonormal.
CheckReport check_cgc_orthogonality(int max_level);

// The recurrences from {c2-,c2+} (for G1, G2) and [c1-,c1+] (for G~1, G~2),
// with the closed forms substituted, for all mu12, mu22 <= max_label, together
// with the boundary convention G2(mu12, -1) = G~2(mu12, -1) = 0 at mu22 = 0.
//
// Quadratic recurrences are checked on the rational squares. The bilinear
// ones pair G1(mu12, .) on both sides; for mu12 > p both G1 factors carry
// the same factor i, which cancels, so they are compared on magnitudes |p - mu12|.
CheckReport check_recurrences(const BigRational& p, int max_label);

// p = 1: the Fock space of one fermion F and one boson B (mutually
// anticommuting) against the GZ basis of V(1). Every weight space with
// level <= max_level is one-dimensional on both sides and matrix elements
// of c1 <-> F, c2 <-> B agree in absolute value.
CheckReport p1_oracle_compare(int max_level);

}  // namespace parafock::gz
