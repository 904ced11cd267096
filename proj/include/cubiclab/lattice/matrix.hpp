#ifndef CUBICLAB_LATTICE_MATRIX_HPP
#define CUBICLAB_LATTICE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubiclab::lattice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw std::invalid_argument("IntMatrix: ragged initializer");
      }
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Row-style Hermite normal form: the nonzero rows of the result span the same
/// lattice as the rows of `m`, pivots are positive and entries above a pivot
/// lie in [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end until a single nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      // floor division so the reduced entry lands in [0, pivot)
      Integer q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  return out;
}

/// Basis (as rows) of the integer kernel {u : A u = 0}. The basis is
/// unimodular-complete, so the kernel it spans is saturated.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t k = a.rows();
  // Rows (a_i^T | e_i); HNF on the left block isolates kernel rows.
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    aug(i, k + i) = 1;
  }
  IntMatrix h = hermite_normal_form(aug);
  std::vector<std::vector<Integer>> kernel;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero_left = true;
    for (std::size_t j = 0; j < k; ++j) zero_left = zero_left && h(i, j) == 0;
    if (!zero_left) continue;
    std::vector<Integer> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = h(i, k + j);
    kernel.push_back(std::move(v));
  }
  IntMatrix out(kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = kernel[i][j];
  return out;
}

inline Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline Integer floor_of(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return f;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

}  // namespace cubiclab::lattice

#endif  // CUBICLAB_LATTICE_MATRIX_HPP
