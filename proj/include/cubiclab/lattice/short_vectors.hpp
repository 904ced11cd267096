#ifndef CUBICLAB_LATTICE_SHORT_VECTORS_HPP
#define CUBICLAB_LATTICE_SHORT_VECTORS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubiclab/lattice/gram.hpp"

namespace cubiclab::lattice {

namespace detail {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, all in exact rationals.
struct QuadraticDecomposition {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> mu;
};

inline QuadraticDecomposition decompose(const GramMatrix& g) {
  const std::size_t n = g.rank();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(g(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw std::domain_error("short_vectors: form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  QuadraticDecomposition out;
  out.d.resize(n);
  out.mu.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = q[i][i];
    for (std::size_t j = i + 1; j < n; ++j) out.mu[i][j] = q[i][j];
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const QuadraticDecomposition& dec, Integer target, bool exact)
      : dec_(dec), n_(dec.d.size()), target_(std::move(target)), exact_(exact), x_(n_) {}

  std::vector<std::vector<Integer>> run() {
    descend(n_, Rational(target_));
    return std::move(found_);
  }

 private:
  void descend(std::size_t level, const Rational& budget) {
    if (level == 0) {
      if (!exact_ || budget == 0) found_.push_back(x_);
      return;
    }
    const std::size_t i = level - 1;
    Rational centre = 0;
    for (std::size_t j = i + 1; j < n_; ++j) centre += dec_.mu[i][j] * x_[j];
    const Rational radius_sq = budget / dec_.d[i];
    // Over-approximate the interval with an integer square root, then filter.
    const Integer slack = isqrt(floor_of(radius_sq)) + 1;
    const Integer lo = floor_of(-centre) - slack;
    const Integer hi = ceil_of(-centre) + slack;
    for (Integer v = lo; v <= hi; ++v) {
      const Rational shifted = Rational(v) + centre;
      const Rational used = dec_.d[i] * shifted * shifted;
      if (used > budget) continue;
      x_[i] = v;
      descend(i, budget - used);
    }
    x_[i] = 0;
  }

  const QuadraticDecomposition& dec_;
  std::size_t n_;
  Integer target_;
  bool exact_;
  std::vector<Integer> x_;
  std::vector<std::vector<Integer>> found_;
};

}  // namespace detail

/// All nonzero v with v^T G v == target_norm, one per +-pair (first nonzero
/// coordinate positive), in lexicographic order.
///
/// Fincke-Pohst enumeration with every bound kept in exact rationals, so an
/// empty result is a proof that no such vector exists.
inline std::vector<LatticeVector> short_vectors(const GramMatrix& g, const Integer& target_norm) {
  if (target_norm <= 0) throw std::invalid_argument("short_vectors: target norm must be positive");
  if (!is_positive_definite(g))
    throw std::domain_error("short_vectors: form is not positive definite");
  auto dec = detail::decompose(g);
  auto raw = detail::Enumerator(dec, target_norm, true).run();
  std::vector<LatticeVector> out;
  for (auto& coords : raw) {
    LatticeVector v(std::move(coords));
    if (v.is_zero() || v.canonical_sign() != v) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LatticeVector> short_vectors(const GramMatrix& g, long long target_norm) {
  return short_vectors(g, Integer(target_norm));
}

/// A norm-2 vector if one exists; absence is exhaustive.
inline std::optional<LatticeVector> has_short_root(const GramMatrix& g) {
  auto roots = short_vectors(g, 2);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace cubiclab::lattice

#endif  // CUBICLAB_LATTICE_SHORT_VECTORS_HPP
