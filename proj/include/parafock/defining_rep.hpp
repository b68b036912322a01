#pragma once

#include <array>
#include <string>
#include <vector>

#include "parafock/generator.hpp"
#include "parafock/super_matrix.hpp"

namespace parafock::defrep {

// The 2(m+n) parastatistics generators of osp(2m+1|2n) as matrices:
//   c_j^+ = sqrt2 (e_{j,2m+1} - e_{2m+1,j+m}),          j <= m
//   c_j^- = sqrt2 (e_{2m+1,j} - e_{j+m,2m+1})
//   c_{m+j}^+ = sqrt2 (e_{2m+1,2m+1+n+j} + e_{2m+1+j,2m+1})
//   c_{m+j}^- = sqrt2 (e_{2m+1,2m+1+j} - e_{2m+1+n+j,2m+1})
struct GeneratorSet {
  int m;
  int n;
  std::vector<SuperMatrix> c_plus;   // index j-1
  std::vector<SuperMatrix> c_minus;  // index j-1

  int count() const { return m + n; }
  int degree(int j) const { return grading(j, m); }
  const SuperMatrix& get(const Generator& g) const;
  GradedMatrix graded(const Generator& g) const { return {get(g), degree(g.index)}; }
};

// Throws std::invalid_argument unless m >= 1 and n >= 1.
GeneratorSet build_generators(int m, int n);

// Cartan element h_i, i = 1..m+n.
SuperMatrix cartan(int m, int n, int i);

struct TripleViolation {
  TripleIndex triple;
  int nonzero_entries;
};

// Every signed triple whose two sides differ. Empty iff the generators
// satisfy the parastatistics relations.
std::vector<TripleViolation> verify_triple_relations(const GeneratorSet& g);

// "(j,k,l,xi,eta,eps): LHS-RHS has N nonzero entries"
std::string to_string(const TripleViolation& v);

// E_jk = 1/2 [[c_j^+, c_k^-]], flattened row-major: E_jk at (j-1)(m+n) + (k-1).
std::vector<GradedMatrix> build_umn_basis(const GeneratorSet& g);

// Checks [[E_ij, E_kl]] = d_jk E_il - (-1)^{deg E_ij deg E_kl} d_li E_kj for
// all index quadruples; returns the failing (i,j,k,l).
std::vector<std::array<int, 4>> verify_gl_relations(const GeneratorSet& g, const std::vector<GradedMatrix>& basis);

// [[h_i, c_j^s]] = s d_ij c_j^s for all i, j, s. Returns failing (i, generator) pairs.
std::vector<std::pair<int, Generator>> verify_weights(const GeneratorSet& g);

// Brackets of the even-subalgebra basis [c_i, c_k] (i,k <= m), c_l (l <= m),
// {c_{m+j}, c_{m+s}} stay inside its span. Returns the number of brackets that
// leave the span, and the dimension of the span through `span_dimension`.
int verify_even_closure(const GeneratorSet& g, int* span_dimension = nullptr);

}  // namespace parafock::defrep
