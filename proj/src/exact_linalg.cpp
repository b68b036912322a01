#include "parafock/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace parafock::linalg {

namespace {

std::vector<BigInt> integer_row(const std::vector<BigRational>& row, BigInt* scale) {
  BigInt lcm(1);
  for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
  if (scale) *scale = lcm;
  return out;
}

}  // namespace

Echelon bareiss_echelon(const RationalMatrix& a) {
  Echelon e;
  e.columns = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != e.columns) throw std::invalid_argument("ragged matrix");
    e.rows.push_back(integer_row(row, nullptr));
  }
  auto& m = e.rows;
  const std::size_t nrows = m.size();
  BigInt previous(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < e.columns && r < nrows; ++col) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < e.columns; ++j) {
        BigInt v = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    previous = m[r][col];
    e.pivot_columns.push_back(col);
    ++r;
  }
  return e;
}

std::size_t rank(const RationalMatrix& a) { return bareiss_echelon(a).pivot_columns.size(); }

BigRational determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return BigRational(1);
  BigInt scale(1);
  for (const auto& row : a) {
    BigInt s;
    integer_row(row, &s);
    scale *= s;
  }
  Echelon e = bareiss_echelon(a);
  if (e.pivot_columns.size() < n) return BigRational(0);
  // The last Bareiss pivot is the determinant of the row-scaled matrix.
  BigRational det(e.rows[n - 1][n - 1] * e.swap_sign, scale);
  det.canonicalize();
  return det;
}

std::vector<IntegerVector> null_space(const RationalMatrix& a) {
  Echelon e = bareiss_echelon(a);
  const std::size_t cols = e.columns;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> x(cols, BigRational(0));
    x[free] = 1;
    for (std::size_t i = e.pivot_columns.size(); i-- > 0;) {
      const std::size_t pc = e.pivot_columns[i];
      BigRational sum(0);
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(x[j]) != 0) sum += BigRational(e.rows[i][j]) * x[j];
      }
      x[pc] = -sum / BigRational(e.rows[i][pc]);
    }
    BigInt lcm(1);
    for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    IntegerVector v;
    BigInt content(0);
    for (const auto& q : x) {
      v.push_back(q.get_num() * (lcm / q.get_den()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.back().get_mpz_t());
    }
    int sign = 1;
    for (const auto& c : v) {
      if (c != 0) {
        sign = sgn(c);
        break;
      }
    }
    for (auto& c : v) c = c / content * sign;
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpace::RowSpace(const RationalMatrix& rows) : columns_(rows.empty() ? 0 : rows.front().size()) {
  for (auto row : rows) {
    if (row.size() != columns_) throw std::invalid_argument("ragged matrix");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const BigRational factor = row[pivots_[i]];
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) row[c] -= factor * basis_[i][c];
    }
    std::size_t pivot = 0;
    while (pivot < columns_ && sgn(row[pivot]) == 0) ++pivot;
    if (pivot == columns_) continue;
    const BigRational lead = row[pivot];
    for (auto& x : row) x /= lead;
    // Keep earlier rows reduced in the new pivot column.
    for (auto& b : basis_) {
      const BigRational factor = b[pivot];
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) b[c] -= factor * row[c];
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }
}

bool RowSpace::contains(const std::vector<BigRational>& v) const {
  if (v.size() != columns_) throw std::invalid_argument("vector length does not match the row space");
  std::vector<BigRational> rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const BigRational factor = rest[pivots_[i]];
    if (sgn(factor) == 0) continue;
    for (std::size_t c = 0; c < columns_; ++c) rest[c] -= factor * basis_[i][c];
  }
  return std::all_of(rest.begin(), rest.end(), [](const BigRational& x) { return sgn(x) == 0; });
}

}  // namespace parafock::linalg
