#ifndef CUBICLAB_POLY_LINALG_HPP
#define CUBICLAB_POLY_LINALG_HPP

#include <cstdint>
#include <vector>

#include "cubiclab/poly/poly.hpp"

// Dense linear algebra over Z/p for the small systems that come up when
// placing planes and listing rational points.

namespace cubiclab::poly {

using Vec = std::vector<std::uint32_t>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(std::vector<Vec>& rows, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto m = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank_of(std::vector<Vec> rows, const PrimeField& f) { return row_reduce(rows, f).size(); }

/// Basis of {x : rows x = 0}.
inline std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t cols, const PrimeField& f) {
  const auto pivots = row_reduce(rows, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Coefficient vector of a linear form; throws if f is not linear
/// homogeneous.
inline Vec linear_coefficients(const Poly& p) {
  Vec v(p.ring()->nvars(), 0);
  for (const auto& t : p.terms()) {
    if (t.mono.deg != 1) throw std::invalid_argument("linear_coefficients: not a linear form");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (t.mono.exp[i]) v[i] = t.coef;
  }
  return v;
}

inline Poly linear_form(const RingPtr& ring, const Vec& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) terms.push_back({Monomial::variable(i), coeffs[i]});
  return Poly(ring, std::move(terms));
}

/// Linear forms cutting out the span of the given points.
inline std::vector<Poly> linear_forms_through(const RingPtr& ring, const std::vector<Vec>& points) {
  std::vector<Poly> out;
  for (const auto& v : nullspace(points, ring->nvars(), ring->field())) out.push_back(linear_form(ring, v));
  return out;
}

/// All points of the projective space spanned by the basis vectors, one
/// representative each.
inline std::vector<Vec> projective_points(const std::vector<Vec>& basis, const PrimeField& f) {
  std::vector<Vec> out;
  const std::size_t k = basis.size();
  if (k == 0) return out;
  const std::uint32_t p = f.characteristic();
  const std::size_t n = basis.front().size();
  // Coefficient vectors whose first nonzero entry is 1.
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t free = k - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec c(k, 0);
      c[lead] = 1;
      std::uint64_t rest = code;
      for (std::size_t i = lead + 1; i < k; ++i) {
        c[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      Vec pt(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        if (c[i])
          for (std::size_t j = 0; j < n; ++j) pt[j] = f.add(pt[j], f.mul(c[i], basis[i][j]));
      out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace cubiclab::poly

#endif  // CUBICLAB_POLY_LINALG_HPP
