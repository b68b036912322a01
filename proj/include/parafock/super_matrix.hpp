#pragma once

#include <string>
#include <vector>

#include "parafock/generator.hpp"
#include "parafock/radical.hpp"

namespace parafock::defrep {

// Square matrix acting on C^{2m+1|2n}. Rows and columns are numbered
// 1..2m+1+2n; indices 1..2m+1 are even, 2m+2..2m+1+2n odd.
class SuperMatrix {
 public:
  SuperMatrix(int m, int n);

  // e_{ij}
  static SuperMatrix unit(int m, int n, int row, int col);

  int m() const { return m_; }
  int n() const { return n_; }
  int dimension() const { return dim_; }
  int index_parity(int i) const { return i <= 2 * m_ + 1 ? 0 : 1; }

  const RadicalScalar& at(int row, int col) const { return entries_[offset(row, col)]; }
  RadicalScalar& at(int row, int col) { return entries_[offset(row, col)]; }

  int nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  SuperMatrix& operator+=(const SuperMatrix& other);
  SuperMatrix& operator-=(const SuperMatrix& other);
  SuperMatrix& operator*=(const RadicalScalar& s);

  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(SuperMatrix a, const RadicalScalar& s) { return a *= s; }
  friend SuperMatrix operator*(const RadicalScalar& s, SuperMatrix a) { return a *= s; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t offset(int row, int col) const;
  void check_same_shape(const SuperMatrix& other) const;

  int m_;
  int n_;
  int dim_;
  std::vector<RadicalScalar> entries_;
};

// Homogeneous element with a declared parity (0 even, 1 odd).
struct GradedMatrix {
  SuperMatrix matrix;
  int parity;
};

// [[a, b]] = ab - (-1)^{deg a deg b} ba. Throws std::invalid_argument when
// the shapes differ.
GradedMatrix super_bracket(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace parafock::defrep
