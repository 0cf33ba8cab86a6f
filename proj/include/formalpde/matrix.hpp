#pragma once

#include "formalpde/param_scalar.hpp"
#include "formalpde/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace formalpde {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  F* row_data(std::size_t r) { return data_.data() + r * cols_; }
  const F* row_data(std::size_t r) const { return data_.data() + r * cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // Appends a row; `values` must have cols() entries (or the matrix is empty).
  void append_row(const std::vector<F>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!formalpde::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (formalpde::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!formalpde::is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> matrix;                 // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of row i
};

// Gauss-Jordan over a field. Pivot: leftmost column, then lowest row index.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult<F> out;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    F inv = F(1) / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (is_zero(m(r, j))) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (std::size_t j : support) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

// Fraction-free elimination followed by normalization.
RrefResult<ParamScalar> rref(const Matrix<ParamScalar>& m);

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

// Columns form a basis of the right null space. One basis vector per free
// column (in increasing column order), equal to 1 there and 0 at the other
// free columns.
template <class F>
Matrix<F> kernel_from_rref(const RrefResult<F>& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> k(cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = F(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const F& x = rr.matrix(i, free_cols[f]);
      if (!is_zero(x)) k(rr.pivots[i], f) = -x;
    }
  }
  return k;
}

template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  return kernel_from_rref(rref(m), m.cols());
}

// Symbolic rank witness for a matrix over Q(χ): a nonzero minor of the
// denominator-cleared matrix on the listed rows and columns.
struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Polynomial minor;  // the last fraction-free pivot; nonzero iff rank > 0
};

RankCertificate certified_rank(const Matrix<ParamScalar>& m);

// Multiplies each row by a common denominator so that all entries are polynomials.
Matrix<Polynomial> clear_denominators(const Matrix<ParamScalar>& m);

// Rank after substituting χ = point. Fast candidate only; never a proof.
std::size_t rank_at(const Matrix<ParamScalar>& m, const std::vector<Rational>& point);

// Fraction-free determinant of a square polynomial matrix.
Polynomial determinant(const Matrix<Polynomial>& m);

}  // namespace formalpde
