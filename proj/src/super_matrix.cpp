#include "parafock/super_matrix.hpp"

#include <stdexcept>

namespace parafock::defrep {

SuperMatrix::SuperMatrix(int m, int n) : m_(m), n_(n), dim_(2 * m + 1 + 2 * n) {
  if (m < 0 || n < 0) throw std::invalid_argument("SuperMatrix: negative block size");
  entries_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));
}

SuperMatrix SuperMatrix::unit(int m, int n, int row, int col) {
  SuperMatrix e(m, n);
  e.at(row, col) = RadicalScalar(1);
  return e;
}

std::size_t SuperMatrix::offset(int row, int col) const {
  if (row < 1 || row > dim_ || col < 1 || col > dim_)
    throw std::out_of_range("SuperMatrix index (" + std::to_string(row) + "," + std::to_string(col) + ")");
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col - 1);
}

void SuperMatrix::check_same_shape(const SuperMatrix& other) const {
  if (m_ != other.m_ || n_ != other.n_) throw std::invalid_argument("SuperMatrix dimension mismatch");
}

int SuperMatrix::nonzero_count() const {
  int count = 0;
  for (const auto& e : entries_) count += e.is_zero() ? 0 : 1;
  return count;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!other.entries_[i].is_zero()) entries_[i] += other.entries_[i];
  }
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!other.entries_[i].is_zero()) entries_[i] -= other.entries_[i];
  }
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const RadicalScalar& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= s;
  }
  return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  a.check_same_shape(b);
  SuperMatrix c(a.m_, a.n_);
  const int d = a.dim_;
  for (int i = 1; i <= d; ++i) {
    for (int k = 1; k <= d; ++k) {
      const auto& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= d; ++j) {
        const auto& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

std::string SuperMatrix::to_string() const {
  std::string out;
  for (int i = 1; i <= dim_; ++i) {
    for (int j = 1; j <= dim_; ++j) {
      if (j > 1) out += '\t';
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

GradedMatrix super_bracket(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.matrix.m() != b.matrix.m() || a.matrix.n() != b.matrix.n())
    throw std::invalid_argument("super_bracket: dimension mismatch");
  SuperMatrix ab = a.matrix * b.matrix;
  SuperMatrix ba = b.matrix * a.matrix;
  if (a.parity * b.parity % 2 == 1) return {ab + ba, (a.parity + b.parity) % 2};
  return {ab - ba, (a.parity + b.parity) % 2};
}

}  // namespace parafock::defrep
