#pragma once

#include "parafock/generator.hpp"
#include "parafock/gz_pattern.hpp"

namespace parafock::gz {

// Reduced matrix elements
//   G1 = (mu12+1,mu22 || c2+ || mu12,mu22),  G2 = (mu12,mu22+1 || c2+ || mu12,mu22),
//   G~1, G~2 the same for c1+, with G~i = (-1)^mu22 Gi.
// Closed forms (N = mu12 + mu22):
//   mu22 even: G1 = sqrt(mu12 (N+1) (p-mu12) / N),  G2 = sqrt(N+1)
//   mu22 odd:  G1 = -sqrt(mu12 (p-mu12)),           G2 = -sqrt((mu22+1)(p+mu22+1) / N)
// G1(0,0) is the 0/0 limit along mu22 = 0 and equals sqrt(p), which
// <0|c1- c1+|0> = p forces.
enum class ReducedElement { G1, G2, G1Tilde, G2Tilde };

// The radicand of the closed form; its square root (with the sign below) is
// the matrix element. Exposed so identities can be checked in squared form.
BigRational reduced_me_squared(ReducedElement which, int mu12, int mu22, const BigRational& p);
int reduced_me_sign(ReducedElement which, int mu22);

// Throws std::domain_error when the radicand is negative (mu12 > p), i.e.
// outside the support of V(p), or for negative labels.
RadicalScalar reduced_me(ReducedElement which, int mu12, int mu22, const BigRational& p);

// Induced: the module V-bar(p) spanned by all patterns (matrix elements must
// stay real). Irreducible: the Fock space V(p), patterns with mu12 <= p for
// positive integer p.
enum class FockModule { Induced, Irreducible };

// Action of c1+-, c2+- on the GZ basis.
// Throws std::invalid_argument for a source pattern outside the chosen module
// and std::logic_error if a nonzero coefficient leaves V(p).
GZVector apply_c(const Generator& g, const GZVector& v, const BigRational& p, FockModule mode);

// Same action with no module filtering: every target the formulas produce,
// including mu12 = p+1 ones. Used for truncation-closure checks.
GZVector apply_c_unfiltered(const Generator& g, const GZVector& v, const BigRational& p);

// Eigenvalues of h1, h2: (-p/2 + mu11, p/2 + mu12 + mu22 - mu11).
BigRational h1_eigenvalue(const GZPattern& mu, const BigRational& p);
BigRational h2_eigenvalue(const GZPattern& mu, const BigRational& p);

}  // namespace parafock::gz
