#ifndef CUBICLAB_CLASSIFY_FAMILIES_HPP
#define CUBICLAB_CLASSIFY_FAMILIES_HPP

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cubiclab/lattice/gram.hpp"

namespace cubiclab::classify {

using lattice::GramMatrix;
using lattice::Integer;

// Rank-3 lattices spanned by h^2, a plane P and a surface S (cubic scroll) or
// V (Veronese). h^2.h^2 = P.P = 3, h^2.P = 1; the free parameter is P.S or P.V.
enum class Family { scroll, veronese };

struct FamilyData {
  long long h2_surface;  // surface degree
  long long surface_self;
  std::string_view tag;  // CLI name
  char symbol;
};

inline const FamilyData& family_data(Family f) {
  static const FamilyData scroll{3, 7, "m12", 'M'};
  static const FamilyData veronese{4, 12, "m20", 'N'};
  return f == Family::scroll ? scroll : veronese;
}

inline std::optional<Family> parse_family(std::string_view tag) {
  if (tag == "m12" || tag == "M" || tag == "scroll") return Family::scroll;
  if (tag == "m20" || tag == "N" || tag == "veronese") return Family::veronese;
  return std::nullopt;
}

inline GramMatrix family_gram(Family f, long long param) {
  const auto& d = family_data(f);
  return GramMatrix{{3, 1, d.h2_surface}, {1, 3, param}, {d.h2_surface, param, d.surface_self}};
}

/// det of family_gram expanded by hand: -3p^2 + 2 h2s p + (8 ss - 3 h2s^2).
/// Gives -3e^2+6e+29 for the scroll and -3g^2+8g+48 for the Veronese.
inline Integer closed_form_determinant(Family f, long long param) {
  const auto& d = family_data(f);
  const Integer p = param;
  return -3 * p * p + 2 * d.h2_surface * p + (8 * d.surface_self - 3 * d.h2_surface * d.h2_surface);
}

/// Integers with positive family determinant, ascending. The determinant is a
/// downward parabola with vertex at h2s/3, so a window of +-32 is ample.
inline std::vector<long long> admissible_params(Family f) {
  std::vector<long long> out;
  for (long long p = -32; p <= 32; ++p)
    if (closed_form_determinant(f, p) > 0) out.push_back(p);
  return out;
}

inline bool is_admissible(Family f, long long param) {
  return closed_form_determinant(f, param) > 0;
}

/// Scroll lattice in the basis (h^2, P, S - h^2), tau = P.S - 1.
/// Determinant 32 - 3 tau^2.
inline GramMatrix alternate_scroll_gram(long long tau) {
  return GramMatrix{{3, 1, 0}, {1, 3, tau}, {0, tau, 4}};
}

}  // namespace cubiclab::classify

#endif  // CUBICLAB_CLASSIFY_FAMILIES_HPP
