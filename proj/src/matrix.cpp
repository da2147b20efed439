#include "tdframe/matrix.hpp"

#include <string>

#include "tdframe/error.hpp"

namespace tdframe {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& e : m.entries_) e = 1;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot add " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " and " + std::to_string(other.rows_) + "x" +
                            std::to_string(other.cols_));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("cannot subtract " + std::to_string(other.rows_) + "x" +
                            std::to_string(other.cols_) + " from " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_exact() && x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(l, j);
        if (y.is_exact() && y.is_zero()) continue;
        c(i, j) += x * y;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (!square()) throw DimensionMismatch("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Scalar> Matrix::row_sums() const {
  std::vector<Scalar> sums(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

long Matrix::radicand() const {
  long d = 0;
  for (const auto& e : entries_) {
    if (e.radicand() == 0) continue;
    if (d != 0 && d != e.radicand()) {
      throw IncompatibleField("matrix mixes sqrt(" + std::to_string(d) + ") and sqrt(" +
                              std::to_string(e.radicand()) + ")");
    }
    d = e.radicand();
  }
  return d;
}

bool Matrix::has_float_entries() const {
  for (const auto& e : entries_)
    if (!e.is_exact()) return true;
  return false;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

}  // namespace tdframe
