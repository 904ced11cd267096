#ifndef CUBICLAB_LATTICE_GRAM_HPP
#define CUBICLAB_LATTICE_GRAM_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cubiclab/lattice/matrix.hpp"

namespace cubiclab::lattice {

/// Integer coordinates of a lattice vector in the basis of some GramMatrix.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords) {
    for (long long c : coords) coords_.emplace_back(c);
  }
  static LatticeVector zero(std::size_t n) { return LatticeVector(std::vector<Integer>(n)); }
  static LatticeVector unit(std::size_t n, std::size_t i) {
    auto v = zero(n);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  /// Sign representative: first nonzero coordinate positive.
  LatticeVector canonical_sign() const {
    for (const auto& c : coords_) {
      if (c > 0) return *this;
      if (c < 0) return -*this;
    }
    return *this;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  std::vector<Integer> coords_;
};

/// Symmetric integer matrix of pairwise intersection numbers.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(IntMatrix m) : m_(std::move(m)) { validate(); }
  GramMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : m_(rows) {
    validate();
  }

  std::size_t rank() const { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GramMatrix& g) {
    os << '[';
    for (std::size_t i = 0; i < g.rank(); ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < g.rank(); ++j) os << (j ? "," : "") << g(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void validate() const {
    if (m_.rows() == 0 || m_.rows() != m_.cols())
      throw std::invalid_argument("GramMatrix: must be square with rank >= 1");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i + 1; j < m_.cols(); ++j)
        if (m_(i, j) != m_(j, i))
          throw std::invalid_argument("GramMatrix: not symmetric");
  }

  IntMatrix m_;
};

inline Integer determinant(const GramMatrix& g) { return determinant(g.matrix()); }

inline Integer inner_product(const GramMatrix& g, const LatticeVector& u,
                             const LatticeVector& v) {
  if (u.size() != g.rank() || v.size() != g.rank())
    throw std::invalid_argument("inner_product: rank mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < g.rank(); ++j) s += u[i] * g(i, j) * v[j];
  }
  return s;
}

/// v^T G v.
inline Integer vector_norm(const GramMatrix& g, const LatticeVector& v) {
  return inner_product(g, v, v);
}

/// Sylvester: every leading principal minor positive.
inline bool is_positive_definite(const GramMatrix& g) {
  for (std::size_t k = 1; k <= g.rank(); ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

inline bool is_even(const GramMatrix& g) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g(i, i) % 2 != 0) return false;
  return true;
}

/// Restriction of G to the sublattice spanned by `basis`: B^T G B.
inline GramMatrix restrict_to(const GramMatrix& g, const std::vector<LatticeVector>& basis) {
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m(i, j) = inner_product(g, basis[i], basis[j]);
  return GramMatrix(std::move(m));
}

struct Complement {
  std::vector<LatticeVector> basis;
  GramMatrix gram;
};

/// Saturated sublattice {u : u.v = 0} with its Gram matrix.
///
/// The basis is put in Hermite form with the coordinate carrying the smallest
/// nonzero coefficient of G v moved last, so a unit coefficient yields the
/// basis e_j - (w_j / w_k) e_k.
inline Complement orthogonal_complement(const GramMatrix& g, const LatticeVector& v) {
  const std::size_t n = g.rank();
  if (v.size() != n) throw std::invalid_argument("orthogonal_complement: rank mismatch");
  if (v.is_zero()) throw std::invalid_argument("orthogonal_complement: zero vector");
  if (gcd_of(v.coords()) != 1)
    throw std::invalid_argument("orthogonal_complement: vector is not primitive");
  if (n == 1) throw std::invalid_argument("orthogonal_complement: rank-1 lattice");

  std::vector<Integer> w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += g(i, j) * v[j];

  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    if (pivot == n || abs(w[i]) < abs(w[pivot])) pivot = i;
  }
  if (pivot == n) throw std::invalid_argument("orthogonal_complement: degenerate form");

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) order.push_back(i);
  order.push_back(pivot);

  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = w[order[j]];
  IntMatrix kernel = hermite_normal_form(integer_kernel(row));

  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    LatticeVector u = LatticeVector::zero(n);
    for (std::size_t j = 0; j < n; ++j) u[order[j]] = kernel(i, j);
    basis.push_back(std::move(u));
  }
  GramMatrix gram = restrict_to(g, basis);
  return {std::move(basis), std::move(gram)};
}

}  // namespace cubiclab::lattice

#endif  // CUBICLAB_LATTICE_GRAM_HPP
