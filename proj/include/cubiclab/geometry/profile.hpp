#ifndef CUBICLAB_GEOMETRY_PROFILE_HPP
#define CUBICLAB_GEOMETRY_PROFILE_HPP

#include <optional>
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cubiclab/geometry/surfaces.hpp"

namespace cubiclab::geometry {

enum class Shape { empty, points, line, conic, other };
enum class LineKind { ruling, directrix };

/// Expected shape of P n S, as written in the example files:
/// "empty", "points:k", "line", "ruling-line", "directrix-line", "conic",
/// "other:dim:degree".
struct ProfileSpec {
  Shape shape = Shape::empty;
  long long k = 0;  // points count
  std::optional<LineKind> line_kind;
  int dim = -1;
  long long degree = 0;

  static std::optional<ProfileSpec> parse(const std::string& s) {
    ProfileSpec p;
    if (s == "empty") return p;
    if (s == "line") return ProfileSpec{Shape::line, 0, std::nullopt, 1, 1};
    if (s == "ruling-line") return ProfileSpec{Shape::line, 0, LineKind::ruling, 1, 1};
    if (s == "directrix-line") return ProfileSpec{Shape::line, 0, LineKind::directrix, 1, 1};
    if (s == "conic") return ProfileSpec{Shape::conic, 0, std::nullopt, 1, 2};
    try {
      if (s.rfind("points:", 0) == 0) {
        const long long k = std::stoll(s.substr(7));
        if (k < 1) return std::nullopt;
        return ProfileSpec{Shape::points, k, std::nullopt, 0, k};
      }
      if (s.rfind("other:", 0) == 0) {
        const auto colon = s.find(':', 6);
        if (colon == std::string::npos) return std::nullopt;
        return ProfileSpec{Shape::other, 0, std::nullopt, std::stoi(s.substr(6, colon - 6)),
                           std::stoll(s.substr(colon + 1))};
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return std::nullopt;
  }

  std::string to_string() const {
    switch (shape) {
      case Shape::empty: return "empty";
      case Shape::points: return "points:" + std::to_string(k);
      case Shape::line:
        if (!line_kind) return "line";
        return *line_kind == LineKind::ruling ? "ruling-line" : "directrix-line";
      case Shape::conic: return "conic";
      case Shape::other: return "other:" + std::to_string(dim) + ":" + std::to_string(degree);
    }
    return "";
  }
};

struct IntersectionProfile {
  ProfileSpec spec;        // computed shape; line_kind set when it could be decided
  int dim = -1;
  long long degree = 0;
  long long rational_points = 0;  // F_p-points of P n S (plane assumed)
  std::string reducedness;        // "rational-points", "degree-only" or ""

  /// An expected "line" accepts either kind; everything else must agree.
  bool matches(const ProfileSpec& expected) const {
    if (expected.shape != spec.shape) return false;
    switch (expected.shape) {
      case Shape::empty: case Shape::conic: return true;
      case Shape::points: return expected.k == spec.k;
      case Shape::line: return !expected.line_kind || expected.line_kind == spec.line_kind;
      case Shape::other: return expected.dim == dim && expected.degree == degree;
    }
    return false;
  }
};

namespace detail {

inline bool vanishes(const std::vector<Poly>& gens, const Vec& pt) {
  for (const auto& g : gens)
    if (g.evaluate(pt) != 0) return false;
  return true;
}

/// F_p-points of V(gens) inside the linear space cut by the linear forms
/// among `linear`.
inline std::vector<Vec> rational_points_in(const std::vector<Poly>& linear, const std::vector<Poly>& gens,
                                           const RingPtr& ring) {
  std::vector<Vec> rows;
  for (const auto& l : linear) rows.push_back(poly::linear_coefficients(l));
  const auto basis = poly::nullspace(rows, ring->nvars(), ring->field());
  std::vector<Vec> out;
  for (auto& pt : poly::projective_points(basis, ring->field()))
    if (vanishes(gens, pt)) out.push_back(std::move(pt));
  return out;
}

inline std::vector<Poly> linear_members(const poly::GroebnerBasis& gb) {
  std::vector<Poly> out;
  for (const auto& g : gb.basis())
    if (g.degree() == 1 && g.is_homogeneous()) out.push_back(g);
  return out;
}

}  // namespace detail

/// Shape of V(P + S) from the dimension and degree of P + S. Points are
/// counted over F_p inside the linear span; a line on a scroll is a ruling
/// when the P^1 coordinate is constant along it.
/// Lower-dimensional components do not show up in the shape.
inline IntersectionProfile intersection_profile(const Ideal& plane, const Ideal& surface,
                                                const std::optional<SurfaceRecipe>& recipe = std::nullopt) {
  if (!poly::same_ring(plane.ring(), surface.ring())) throw std::invalid_argument("intersection_profile: ring mismatch");
  const RingPtr& ring = plane.ring();
  const auto gb = poly::groebner(plane + surface);
  const auto dd = poly::dimension_degree(gb);
  IntersectionProfile prof;
  prof.dim = dd.dimension;
  prof.degree = dd.degree;
  const auto linear = detail::linear_members(gb);
  std::vector<Poly> all = gb.basis();
  if (dd.dimension == -1) {
    prof.spec = {Shape::empty, 0, std::nullopt, -1, 0};
  } else if (dd.dimension == 0) {
    prof.spec = {Shape::points, dd.degree, std::nullopt, 0, dd.degree};
  } else if (dd.dimension == 1 && dd.degree == 1) {
    prof.spec = {Shape::line, 0, std::nullopt, 1, 1};
  } else if (dd.dimension == 1 && dd.degree == 2) {
    prof.spec = {Shape::conic, 0, std::nullopt, 1, 2};
  } else {
    prof.spec = {Shape::other, 0, std::nullopt, dd.dimension, dd.degree};
  }
  if (dd.dimension >= 0 && dd.dimension <= 1 && !linear.empty()) {
    const auto pts = detail::rational_points_in(linear, all, ring);
    prof.rational_points = static_cast<long long>(pts.size());
    if (dd.dimension == 0)
      prof.reducedness = prof.rational_points == dd.degree ? "rational-points" : "degree-only";
    if (prof.spec.shape == Shape::line && recipe) {
      // A ruling puts all p+1 points of the line over one P^1 coordinate; the
      // directrix maps bijectively. Stray isolated points do not change that.
      std::map<std::pair<std::uint32_t, std::uint32_t>, long long> fibre;
      bool decided = true;
      for (const auto& pt : pts) {
        const auto c = ruling_coordinate(*recipe, ring, pt);
        if (!c) {
          decided = false;
          break;
        }
        ++fibre[*c];
      }
      long long biggest = 0;
      for (const auto& [c, n] : fibre) biggest = std::max(biggest, n);
      if (decided && !pts.empty())
        prof.spec.line_kind = biggest > ring->field().characteristic() ? LineKind::ruling : LineKind::directrix;
    }
  }
  return prof;
}

}  // namespace cubiclab::geometry

#endif  // CUBICLAB_GEOMETRY_PROFILE_HPP
