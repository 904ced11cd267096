#ifndef CUBICLAB_GEOMETRY_CONSTRUCT_HPP
#define CUBICLAB_GEOMETRY_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclab/classify/families.hpp"
#include "cubiclab/geometry/examples.hpp"
#include "cubiclab/lattice/short_vectors.hpp"

namespace cubiclab::geometry {

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::map<std::string, int> failures)
      : std::runtime_error(what + describe(failures)), failures_(std::move(failures)) {}

  /// Failing check -> number of draws that failed it.
  const std::map<std::string, int>& failures() const { return failures_; }

 private:
  static std::string describe(const std::map<std::string, int>& f) {
    if (f.empty()) return " (no draws)";
    std::string out = " (";
    bool first = true;
    for (const auto& [k, v] : f) {
      if (!first) out += ", ";
      out += k + ": " + std::to_string(v);
      first = false;
    }
    return out + ")";
  }

  std::map<std::string, int> failures_;
};

enum class PlaneKind { generic, points, ruling, directrix, conic };

struct PlaneConstraint {
  PlaneKind kind = PlaneKind::generic;
  unsigned k = 0;  // points only, 1..3

  static PlaneConstraint generic() { return {PlaneKind::generic, 0}; }
  static PlaneConstraint through_points(unsigned k) { return {PlaneKind::points, k}; }
  static PlaneConstraint ruling() { return {PlaneKind::ruling, 0}; }
  static PlaneConstraint directrix() { return {PlaneKind::directrix, 0}; }
  static PlaneConstraint conic() { return {PlaneKind::conic, 0}; }

  ProfileSpec expected() const {
    switch (kind) {
      case PlaneKind::generic: return *ProfileSpec::parse("empty");
      case PlaneKind::points: return *ProfileSpec::parse("points:" + std::to_string(k));
      case PlaneKind::ruling: return *ProfileSpec::parse("ruling-line");
      case PlaneKind::directrix: return *ProfileSpec::parse("directrix-line");
      case PlaneKind::conic: return *ProfileSpec::parse("conic");
    }
    return {};
  }
};

namespace detail {

inline Vec random_vec(const RingPtr& ring, std::mt19937_64& rng) {
  Vec v(ring->nvars());
  for (auto& c : v) c = draw(rng, ring->field().characteristic());
  return v;
}

/// Surface points the plane must contain. For points(k) on a scroll sitting
/// in a hyperplane, the points are taken inside it and the remaining span is
/// filled with generic points of P^5.
inline std::vector<Vec> required_points(const PlaneConstraint& c, const SurfaceRecipe& recipe, const RingPtr& ring,
                                        std::mt19937_64& rng) {
  switch (c.kind) {
    case PlaneKind::generic: return {};
    case PlaneKind::points: {
      if (c.k < 1 || c.k > 3) throw std::invalid_argument("place_plane: points(k) needs 1 <= k <= 3");
      std::vector<Vec> pts;
      for (unsigned i = 0; i < c.k; ++i) pts.push_back(sample_point(recipe, ring, rng));
      return pts;
    }
    case PlaneKind::ruling: return ruling_points(recipe, ring, rng);
    case PlaneKind::directrix: return directrix_points(recipe);
    case PlaneKind::conic: return conic_points(recipe, ring, rng);
  }
  return {};
}

}  // namespace detail

/// A plane meeting the surface as requested. Each draw fixes the required
/// surface points, tops the span up to rank 3 with random points of P^5, and is
/// kept only if the computed profile is the requested one.
inline Ideal place_plane(const PlaneConstraint& c, const SurfaceRecipe& recipe, const RingPtr& ring,
                         std::mt19937_64& rng, int budget = 50) {
  const Ideal surface = build_surface(recipe, ring);
  const ProfileSpec want = c.expected();
  std::map<std::string, int> failures;
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Vec> pts = detail::required_points(c, recipe, ring, rng);
    if (poly::rank_of(pts, ring->field()) != pts.size()) {
      ++failures["coincident-points"];
      continue;
    }
    while (pts.size() < 3) {
      pts.push_back(detail::random_vec(ring, rng));
      if (poly::rank_of(pts, ring->field()) != pts.size()) pts.pop_back();
    }
    Ideal plane(ring);
    for (auto& l : poly::linear_forms_through(ring, pts)) plane.add(std::move(l));
    if (intersection_profile(plane, surface, recipe).matches(want)) return plane;
    ++failures["plane-profile"];
  }
  throw BudgetExhausted("place_plane: no plane with profile " + want.to_string(), failures);
}

// --- cubics through a surface and a plane ------------------------------------------

enum class Variant { standard, line };

/// How a (family, param) pair is realized: which surface, which plane.
struct Realization {
  SurfaceRecipe recipe;
  PlaneConstraint plane;
  std::vector<std::string> notes;
};

/// (N, -2) and (N, 4) have no Veronese-plus-plane picture we can draw
/// directly; both are read off a scroll and a plane. For the scroll lattice
/// with P.S = eta, a class V with V.h^2 = 4, V^2 = 12 is
/// 3h^2 - 2P - S (eta = -1, V.P = -2) or S + P (eta = 1, V.P = 4).
inline std::optional<Realization> cross_family_realization(classify::Family f, long long param) {
  if (f != classify::Family::veronese) return std::nullopt;
  if (param == -2)
    return Realization{SurfaceRecipe::cubic_scroll(), PlaneConstraint::conic(),
                       {"realized on the scroll family: conic plane, eta = -1", "V = 3h^2 - 2P - S, V.P = -2"}};
  if (param == 4)
    return Realization{SurfaceRecipe::cubic_scroll(), PlaneConstraint::directrix(),
                       {"realized on the scroll family: directrix plane, eta = 1", "V = S + P, V.P = 4"}};
  return std::nullopt;
}

inline Realization realization(classify::Family f, long long param, Variant variant = Variant::standard) {
  if (auto r = cross_family_realization(f, param)) return *r;
  const bool scroll = f == classify::Family::scroll;
  const SurfaceRecipe recipe = scroll ? SurfaceRecipe::cubic_scroll() : SurfaceRecipe::veronese();
  if (variant == Variant::line) {
    if (scroll && param == 0) return {recipe, PlaneConstraint::ruling(), {"ruling-line variant"}};
    if (scroll && param == 1) return {recipe, PlaneConstraint::directrix(), {"directrix-line variant"}};
    throw std::invalid_argument("construct: line variant only for scroll params 0 and 1");
  }
  if (param == -1) return {recipe, PlaneConstraint::conic(), {}};
  if (param == 0) return {recipe, PlaneConstraint::generic(), {}};
  if (param >= 1 && param <= 3) return {recipe, PlaneConstraint::through_points(static_cast<unsigned>(param)), {}};
  throw std::invalid_argument("construct: no construction for " + std::string(1, classify::family_data(f).symbol) +
                              std::to_string(param));
}

/// A smooth cubic through a freshly placed plane and the family's surface.
/// Cubics are drawn from (I_S n I_P)_3 until one is smooth; the record is
/// re-verified before it is returned. Deterministic in the seed.
inline ExampleRecord construct_component_example(classify::Family f, long long param, std::uint64_t seed,
                                                 int budget = 50, Variant variant = Variant::standard) {
  if (!classify::is_admissible(f, param)) throw std::invalid_argument("construct: parameter not admissible");
  if (lattice::has_short_root(classify::family_gram(f, param)))
    throw std::invalid_argument("construct: the component is empty");
  const Realization how = realization(f, param, variant);
  const RingPtr ring = poly::Ring::indexed("x", 6);
  std::mt19937_64 rng(seed);

  ExampleRecord rec(ring);
  rec.label = std::string(classify::family_data(f).tag) + "." + std::to_string(param) + ".seed" + std::to_string(seed);
  rec.family = f;
  rec.expected_param = param;
  rec.recipe = how.recipe;
  rec.expected = how.plane.expected();
  rec.notes = how.notes;

  std::map<std::string, int> failures;
  for (int attempt = 0; attempt < budget; ++attempt) {
    try {
      rec.plane = place_plane(how.plane, how.recipe, ring, rng, 1);
    } catch (const BudgetExhausted& e) {
      for (const auto& [k, v] : e.failures()) failures[k] += v;
      continue;
    }
    const Ideal both = poly::intersect(build_surface(how.recipe, ring), rec.plane);
    rec.cubic = poly::random_form_in_ideal(both, 3, rng);
    if (rec.cubic.is_zero()) {
      ++failures["zero-cubic"];
      continue;
    }
    const auto rep = verify_example(rec);
    if (rep.passed() && rep.surface_used == how.recipe.tag()) return rec;
    if (!rep.smooth) ++failures["singular"];
    else if (!rep.contains_plane || !rep.contains_surface) ++failures["containment"];
    else ++failures["profile"];
  }
  throw BudgetExhausted("construct: " + rec.label, failures);
}

}  // namespace cubiclab::geometry

#endif  // CUBICLAB_GEOMETRY_CONSTRUCT_HPP
