#ifndef CUBICLAB_GEOMETRY_EXAMPLES_HPP
#define CUBICLAB_GEOMETRY_EXAMPLES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclab/classify/families.hpp"
#include "cubiclab/geometry/profile.hpp"

namespace cubiclab::geometry {

/// A cubic fourfold containing a plane and a surface, with the expected shape
/// of their intersection.
struct ExampleRecord {
  std::string label;
  std::uint32_t field_char = 31;
  classify::Family family = classify::Family::scroll;
  long long expected_param = 0;
  Ideal plane;
  std::optional<SurfaceRecipe> recipe;  // set when the surface is given by tag
  std::optional<Ideal> surface;         // set when given by generators
  Poly cubic;
  ProfileSpec expected;
  std::vector<std::string> notes;

  ExampleRecord(RingPtr ring) : plane(ring), cubic(ring) {}
  ExampleRecord() : ExampleRecord(poly::Ring::indexed("x", 6)) {}

  const RingPtr& ring() const { return plane.ring(); }
};

struct VerificationReport {
  std::string label;
  bool smooth = false;
  bool contains_plane = false;
  bool contains_surface = false;
  bool profile_matches = false;
  std::string surface_used;  // recipe tag, or "explicit"
  std::vector<std::string> recipes_tried;
  IntersectionProfile profile;

  bool passed() const { return smooth && contains_plane && contains_surface && profile_matches; }
};

/// Smoothness, both containments, and the intersection shape. When the bound
/// recipe does not contain the cubic, the other recipes are tried in turn and
/// the one that works is reported.
inline VerificationReport verify_example(const ExampleRecord& rec) {
  VerificationReport rep;
  rep.label = rec.label;
  const RingPtr& ring = rec.ring();
  if (rec.plane.gens().size() != 3 || poly::rank_of([&] {
        std::vector<Vec> rows;
        for (const auto& l : rec.plane.gens()) rows.push_back(poly::linear_coefficients(l));
        return rows;
      }(), ring->field()) != 3)
    throw std::invalid_argument("verify_example: plane must be three independent linear forms");
  if (rec.cubic.is_zero() || !rec.cubic.is_homogeneous() || rec.cubic.degree() != 3)
    throw std::invalid_argument("verify_example: cubic must be a nonzero form of degree 3");

  rep.smooth = poly::is_projectively_smooth(rec.cubic);
  rep.contains_plane = poly::ideal_member(rec.cubic, rec.plane);

  std::optional<Ideal> surface;
  std::optional<SurfaceRecipe> used;
  if (rec.surface) {
    rep.surface_used = "explicit";
    rep.recipes_tried.push_back("explicit");
    surface = rec.surface;
    rep.contains_surface = poly::ideal_member(rec.cubic, *surface);
  } else {
    std::vector<SurfaceRecipe> order;
    if (rec.recipe) order.push_back(*rec.recipe);
    for (const auto& r : all_recipes())
      if (!rec.recipe || !(r == *rec.recipe)) order.push_back(r);
    for (const auto& r : order) {
      rep.recipes_tried.push_back(r.tag());
      Ideal s = build_surface(r, ring);
      if (poly::ideal_member(rec.cubic, s)) {
        rep.contains_surface = true;
        surface = std::move(s);
        used = r;
        break;
      }
    }
    if (!surface && rec.recipe) {
      used = rec.recipe;
      surface = build_surface(*rec.recipe, ring);
    }
    rep.surface_used = rep.contains_surface ? used->tag() : "none";
  }
  if (surface) {
    rep.profile = intersection_profile(rec.plane, *surface, used);
    rep.profile_matches = rep.profile.matches(rec.expected);
  }
  return rep;
}

}  // namespace cubiclab::geometry

#endif  // CUBICLAB_GEOMETRY_EXAMPLES_HPP
