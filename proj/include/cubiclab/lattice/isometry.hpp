#ifndef CUBICLAB_LATTICE_ISOMETRY_HPP
#define CUBICLAB_LATTICE_ISOMETRY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubiclab/lattice/short_vectors.hpp"

namespace cubiclab::lattice {

/// T with T^T G1 T == G2 and det T = +-1; columns of T are the images of the
/// basis of G2 inside the lattice of G1.
struct IsometryWitness {
  IntMatrix matrix;

  bool certifies(const GramMatrix& g1, const GramMatrix& g2) const {
    if (matrix.rows() != g1.rank() || matrix.cols() != g2.rank()) return false;
    const Integer det = determinant(matrix);
    if (det != 1 && det != -1) return false;
    return matrix.transpose() * g1.matrix() * matrix == g2.matrix();
  }
};

inline constexpr std::size_t kMaxIsometryRank = 4;

namespace detail {

class IsometrySearch {
 public:
  IsometrySearch(const GramMatrix& g1, const GramMatrix& g2) : g1_(g1), g2_(g2) {
    const std::size_t n = g2.rank();
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : short_vectors(g1, g2(i, i))) {
        candidates_[i].push_back(v);
        candidates_[i].push_back(-v);
      }
    }
    chosen_.resize(n);
  }

  std::optional<IsometryWitness> run() {
    if (!extend(0)) return std::nullopt;
    const std::size_t n = g2_.rank();
    IntMatrix t(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) t(i, j) = chosen_[j][i];
    return IsometryWitness{std::move(t)};
  }

 private:
  bool extend(std::size_t col) {
    if (col == g2_.rank()) {
      IntMatrix t(col, col);
      for (std::size_t j = 0; j < col; ++j)
        for (std::size_t i = 0; i < col; ++i) t(i, j) = chosen_[j][i];
      const Integer det = determinant(t);
      return det == 1 || det == -1;
    }
    for (const auto& v : candidates_[col]) {
      bool ok = true;
      for (std::size_t k = 0; k < col && ok; ++k)
        ok = inner_product(g1_, chosen_[k], v) == g2_(k, col);
      if (!ok) continue;
      chosen_[col] = v;
      if (extend(col + 1)) return true;
    }
    return false;
  }

  const GramMatrix& g1_;
  const GramMatrix& g2_;
  std::vector<std::vector<LatticeVector>> candidates_;
  std::vector<LatticeVector> chosen_;
};

}  // namespace detail

/// Brute-force isometry test for positive definite lattices of rank <= 4.
/// Every assignment of norm-matched vectors is tried, so nullopt is a proof
/// that the lattices are not isometric.
inline std::optional<IsometryWitness> are_isometric(const GramMatrix& g1, const GramMatrix& g2) {
  if (g1.rank() != g2.rank()) return std::nullopt;
  if (g1.rank() > kMaxIsometryRank)
    throw std::invalid_argument("are_isometric: rank exceeds brute-force bound");
  if (!is_positive_definite(g1) || !is_positive_definite(g2))
    throw std::domain_error("are_isometric: forms must be positive definite");
  if (determinant(g1) != determinant(g2)) return std::nullopt;
  return detail::IsometrySearch(g1, g2).run();
}

}  // namespace cubiclab::lattice

#endif  // CUBICLAB_LATTICE_ISOMETRY_HPP
