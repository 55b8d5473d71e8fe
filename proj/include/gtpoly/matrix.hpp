#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtpoly/error.hpp"
#include "gtpoly/ring.hpp"

namespace gtpoly {

/// Dense row-major matrix over a supported ring.
template <SupportedRing R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = QuadInt<R>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw invalid_input("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value_type(1);
    return m;
  }

  static Matrix from_columns(std::size_t rows, std::span<const std::vector<value_type>> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw invalid_input("column length does not match ambient rank");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<value_type> column(std::size_t j) const {
    std::vector<value_type> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<value_type> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= cols_) throw std::out_of_range("column index out of range");
      for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    }
    return m;
  }

  /// Columns of *this followed by columns of other.
  Matrix hconcat(const Matrix& other) const {
    if (other.rows_ != rows_ && other.cols_ != 0 && cols_ != 0) throw invalid_input("hconcat row mismatch");
    std::size_t r = cols_ ? rows_ : other.rows_;
    Matrix m(r, cols_ + other.cols_);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const value_type& f) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(src, j).is_zero()) (*this)(dst, j) += f * (*this)(src, j);
    }
  }
  // col[dst] += f * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const value_type& f) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, src).is_zero()) (*this)(i, dst) += f * (*this)(i, src);
    }
  }
  void scale_row(std::size_t i, const value_type& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= f;
  }
  void scale_col(std::size_t j, const value_type& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) *= f;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw invalid_input("matrix product dimension mismatch");
    Matrix m(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) m(i, j) += x(i, k) * y(k, j);
      }
    return m;
  }

  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw invalid_input("matrix-vector dimension mismatch");
    std::vector<value_type> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Determinant by fraction-free (Bareiss) elimination; exact divisions in R.
template <SupportedRing R>
QuadInt<R> determinant(Matrix<R> m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return QuadInt<R>(1);
  QuadInt<R> sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return QuadInt<R>(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divexact(QuadInt<R>(m(i, j) * m(k, k) - m(i, k) * m(k, j)), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace gtpoly
