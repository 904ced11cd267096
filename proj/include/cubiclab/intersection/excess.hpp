#ifndef CUBICLAB_INTERSECTION_EXCESS_HPP
#define CUBICLAB_INTERSECTION_EXCESS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Closed-form intersection numbers for pairs of surfaces in a cubic fourfold
// and for their generic projections to P^4. Inputs are raw numerical
// invariants of the common curve, never geometric objects.

namespace cubiclab::intersection {

struct PlaneCurveInvariants {
  long long genus;
  long long canonical_pairing;  // K_P . C
};

/// Genus and K_P.C of a smooth plane curve of degree d.
inline PlaneCurveInvariants plane_curve_invariants(long long d) {
  if (d <= 0) throw std::invalid_argument("plane_curve_invariants: degree must be positive");
  return {(d - 1) * (d - 2) / 2, -3 * d};
}

/// S.P for a smooth surface S meeting a plane P in a smooth curve C of
/// degree d and genus g: K_S.C + 2 - 2g, which equals K_S.C - d(d-3).
inline long long excess_surface_plane(long long ksc, long long d, long long g) {
  if (d < 0 || g < 0) throw std::invalid_argument("excess_surface_plane: negative invariant");
  if (-d * (d - 3) != 2 - 2 * g)
    throw std::invalid_argument("excess_surface_plane: (d, g) is not a plane curve");
  return ksc + 2 - 2 * g;
}

/// Ambient contribution c_1(T_Y)|_C to the multiplicity formula.
/// The cubic fourfold has -K = 3h; after projecting from a general point the
/// two surfaces sit in P^4 where -K = 5h.
enum class AmbientPreset { cubic_fourfold, projected_p4 };

inline long long ambient_term(AmbientPreset preset, long long d) {
  switch (preset) {
    case AmbientPreset::cubic_fourfold: return 3 * d;
    case AmbientPreset::projected_p4: return 5 * d;
  }
  throw std::invalid_argument("ambient_term: unknown preset");
}

/// Accepts "cubic-fourfold", "projected-p4" and the two aliases used for the
/// scroll/plane and Veronese/plane projections.
inline std::optional<AmbientPreset> parse_preset(std::string_view name) {
  if (name == "cubic-fourfold") return AmbientPreset::cubic_fourfold;
  if (name == "projected-p4" || name == "scroll-projection" || name == "veronese-projection")
    return AmbientPreset::projected_p4;
  return std::nullopt;
}

inline std::string_view preset_name(AmbientPreset p) {
  return p == AmbientPreset::cubic_fourfold ? "cubic-fourfold" : "projected-p4";
}

/// mult_C(S1, S2) = A + K_{S1}.C + K_{S2}.C + 2 - 2g with A the ambient term.
inline long long mult_along_curve(AmbientPreset preset, long long d, long long g, long long k1c,
                                  long long k2c) {
  if (d < 0 || g < 0) throw std::invalid_argument("mult_along_curve: negative invariant");
  return ambient_term(preset, d) + k1c + k2c + 2 - 2 * g;
}

enum class SecantClass { oadp, defective, other };

inline std::string_view secant_class_name(SecantClass c) {
  switch (c) {
    case SecantClass::oadp: return "OADP";
    case SecantClass::defective: return "defective";
    case SecantClass::other: return "other";
  }
  return "other";
}

struct SecantCount {
  long long count;
  SecantClass kind;
};

/// Secant lines through a general point of P^5 to S1 u S2: deg1*deg2 minus
/// the intersection already accounted for by S1 n S2.
inline SecantCount secant_count(long long deg1, long long deg2, long long accounted) {
  if (deg1 < 1 || deg2 < 1) throw std::invalid_argument("secant_count: degrees must be >= 1");
  if (accounted < 0) throw std::invalid_argument("secant_count: negative accounted intersection");
  const long long n = deg1 * deg2 - accounted;
  if (n < 0) throw std::invalid_argument("secant_count: inconsistent input (negative count)");
  return {n, n == 1 ? SecantClass::oadp : (n == 0 ? SecantClass::defective : SecantClass::other)};
}

struct ScrollLineCase {
  long long excess;  // S.P
  long long mult;    // mult_L after projection to P^4
  SecantClass status;
  std::string flat_limit;
};

/// Cubic scroll S and plane P meeting along a line L with L^2 = l_self on S.
/// K_S.L = -2 - L^2; a ruling (L^2 = 0) gives an OADP union, the directrix
/// (L^2 = -1) a secant defective one.
inline ScrollLineCase scroll_line_case(long long l_self) {
  if (l_self != 0 && l_self != -1)
    throw std::invalid_argument("scroll_line_case: self-intersection must be 0 or -1");
  const long long ksl = -2 - l_self;
  const auto line = plane_curve_invariants(1);
  const long long excess = excess_surface_plane(ksl, 1, line.genus);
  const long long mult =
      mult_along_curve(AmbientPreset::projected_p4, 1, line.genus, ksl, line.canonical_pairing);
  const auto secants = secant_count(3, 1, mult);
  return {excess, mult, secants.kind,
          l_self == 0 ? "quartic scroll limit" : "Veronese limit"};
}

}  // namespace cubiclab::intersection

#endif  // CUBICLAB_INTERSECTION_EXCESS_HPP
