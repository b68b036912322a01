#pragma once

#include <vector>

#include "parafock/rational.hpp"

namespace parafock::linalg {

using RationalMatrix = std::vector<std::vector<BigRational>>;
using IntegerVector = std::vector<BigInt>;

// Fraction-free (Bareiss) row reduction of an integer matrix. Rows are first
// scaled by the lcm of their denominators, which preserves rank and kernel.
struct Echelon {
  std::vector<std::vector<BigInt>> rows;  // upper echelon form, `rank` leading rows nonzero
  std::vector<std::size_t> pivot_columns;
  std::size_t columns = 0;
  int swap_sign = 1;
};

Echelon bareiss_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

// Throws std::invalid_argument for non-square input.
BigRational determinant(const RationalMatrix& a);

// Basis of {x : a x = 0}, one vector per free column in increasing order.
// Each vector has integer entries with gcd 1 and a positive first nonzero entry.
std::vector<IntegerVector> null_space(const RationalMatrix& a);

// Row space of a rational matrix in reduced echelon form, for repeated
// membership tests against a fixed span.
class RowSpace {
 public:
  explicit RowSpace(const RationalMatrix& rows);

  std::size_t dimension() const { return basis_.size(); }
  // Throws std::invalid_argument when the length differs from the column count.
  bool contains(const std::vector<BigRational>& v) const;

 private:
  std::size_t columns_ = 0;
  RationalMatrix basis_;  // reduced rows, pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace parafock::linalg
