#ifndef CUBICLAB_GEOMETRY_SURFACES_HPP
#define CUBICLAB_GEOMETRY_SURFACES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclab/poly/ideal_ops.hpp"
#include "cubiclab/poly/linalg.hpp"

// Rational surfaces in P^5 = Proj k[x_0..x_5] given by a parametrization and
// a determinantal description:
//   veronese      conics of P^2, 2x2 minors of the symmetric 3x3 catalecticant
//   scroll(a,b)   S(a,b) in P^{a+b+1}, padded with zero coordinates
//   cubic-scroll  P^2 blown up at [0:0:1]: (t0^2, t0t1, t1^2, t0t2, t1t2, 0)
//   segre-scroll  Segre P^1 x P^2 cut by x_0 = x_4

namespace cubiclab::geometry {

using poly::Ideal;
using poly::Poly;
using poly::PolyMatrix;
using poly::RingPtr;
using poly::Vec;

enum class RecipeKind { veronese, scroll, cubic_scroll, segre_scroll };

struct SurfaceRecipe {
  RecipeKind kind = RecipeKind::veronese;
  unsigned a = 1, b = 2;  // scroll(a,b) only

  static SurfaceRecipe veronese() { return {RecipeKind::veronese, 0, 0}; }
  static SurfaceRecipe scroll(unsigned a, unsigned b) {
    if (a < 1 || a > b || a + b + 2 > 6) throw std::invalid_argument("scroll(a,b): need 1 <= a <= b, a+b <= 4");
    return {RecipeKind::scroll, a, b};
  }
  static SurfaceRecipe cubic_scroll() { return {RecipeKind::cubic_scroll, 1, 2}; }
  static SurfaceRecipe segre_scroll() { return {RecipeKind::segre_scroll, 1, 2}; }

  static std::optional<SurfaceRecipe> parse(const std::string& tag) {
    if (tag == "veronese") return veronese();
    if (tag == "cubic-scroll") return cubic_scroll();
    if (tag == "segre-scroll") return segre_scroll();
    static const std::regex re(R"(scroll\((\d),(\d)\))");
    std::smatch m;
    if (std::regex_match(tag, m, re)) {
      const unsigned a = static_cast<unsigned>(std::stoi(m[1])), b = static_cast<unsigned>(std::stoi(m[2]));
      if (a >= 1 && a <= b && a + b + 2 <= 6) return scroll(a, b);
    }
    return std::nullopt;
  }

  std::string tag() const {
    switch (kind) {
      case RecipeKind::veronese: return "veronese";
      case RecipeKind::scroll: return "scroll(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case RecipeKind::cubic_scroll: return "cubic-scroll";
      case RecipeKind::segre_scroll: return "segre-scroll";
    }
    return "";
  }

  long long expected_degree() const { return kind == RecipeKind::veronese ? 4 : (kind == RecipeKind::scroll ? a + b : 3); }

  bool is_scroll() const { return kind != RecipeKind::veronese; }

  friend bool operator==(const SurfaceRecipe&, const SurfaceRecipe&) = default;

  /// Determinantal matrix whose 2x2 minors cut the surface (with linear_part).
  PolyMatrix matrix(const RingPtr& r) const {
    auto x = [&r](std::size_t i) { return Poly::variable(r, i); };
    switch (kind) {
      case RecipeKind::veronese: return {{x(0), x(1), x(2)}, {x(1), x(3), x(4)}, {x(2), x(4), x(5)}};
      case RecipeKind::cubic_scroll: return {{x(0), x(1), x(3)}, {x(1), x(2), x(4)}};
      case RecipeKind::segre_scroll: return {{x(0), x(1), x(2)}, {x(3), x(4), x(5)}};
      case RecipeKind::scroll: {
        PolyMatrix m(2);
        for (unsigned j = 0; j < a; ++j) {
          m[0].push_back(x(j));
          m[1].push_back(x(j + 1));
        }
        for (unsigned j = a + 1; j < a + b + 1; ++j) {
          m[0].push_back(x(j));
          m[1].push_back(x(j + 1));
        }
        return m;
      }
    }
    return {};
  }

  std::vector<Poly> linear_part(const RingPtr& r) const {
    std::vector<Poly> out;
    switch (kind) {
      case RecipeKind::veronese: break;
      case RecipeKind::cubic_scroll: out.push_back(Poly::variable(r, 5)); break;
      case RecipeKind::segre_scroll: out.push_back(Poly::variable(r, 0) - Poly::variable(r, 4)); break;
      case RecipeKind::scroll:
        for (std::size_t i = a + b + 2; i < 6; ++i) out.push_back(Poly::variable(r, i));
        break;
    }
    return out;
  }

  /// The parametrizing map into P^5 (for segre-scroll, of P^1 x P^2; the
  /// hyperplane is added separately).
  poly::RingMap parametrization(const RingPtr& p5) const {
    const auto& field = p5->field();
    if (kind == RecipeKind::segre_scroll) {
      auto src = std::make_shared<const poly::Ring>(std::vector<std::string>{"u", "v", "t_0", "t_1", "t_2"},
                                                    poly::MonomialOrder::grevlex(), field);
      auto v = [&src](std::size_t i) { return Poly::variable(src, i); };
      return poly::RingMap(p5, src, {v(2) * v(0), v(3) * v(0), v(4) * v(0), v(2) * v(1), v(3) * v(1), v(4) * v(1)});
    }
    auto p2 = std::make_shared<const poly::Ring>(std::vector<std::string>{"t_0", "t_1", "t_2"},
                                                 poly::MonomialOrder::grevlex(), field);
    auto t = [&p2](std::size_t i) { return Poly::variable(p2, i); };
    auto pw = [&](std::size_t i, unsigned e) {
      Poly r = Poly::constant(p2, 1);
      for (unsigned k = 0; k < e; ++k) r *= t(i);
      return r;
    };
    std::vector<Poly> img;
    switch (kind) {
      case RecipeKind::veronese:
        img = {t(0) * t(0), t(0) * t(1), t(0) * t(2), t(1) * t(1), t(1) * t(2), t(2) * t(2)};
        break;
      case RecipeKind::cubic_scroll:
        img = {t(0) * t(0), t(0) * t(1), t(1) * t(1), t(2) * t(0), t(1) * t(2), Poly(p2)};
        break;
      case RecipeKind::scroll:
        for (unsigned j = 0; j <= a; ++j) img.push_back(pw(0, b - a + 1) * pw(0, a - j) * pw(1, j));
        for (unsigned j = 0; j <= b; ++j) img.push_back(t(2) * pw(0, b - j) * pw(1, j));
        while (img.size() < 6) img.push_back(Poly(p2));
        break;
      case RecipeKind::segre_scroll: break;
    }
    return poly::RingMap(p5, p2, std::move(img));
  }
};

inline std::vector<SurfaceRecipe> all_recipes() {
  return {SurfaceRecipe::veronese(), SurfaceRecipe::scroll(1, 2), SurfaceRecipe::cubic_scroll(),
          SurfaceRecipe::segre_scroll()};
}

/// Minors plus linear part, checked to be a surface of the documented degree.
/// Results are cached per (recipe, ring).
inline Ideal build_surface(const SurfaceRecipe& recipe, const RingPtr& ring) {
  static std::mutex mu;
  static std::vector<std::pair<std::pair<SurfaceRecipe, RingPtr>, Ideal>> cache;
  {
    std::lock_guard lock(mu);
    for (const auto& [key, ideal] : cache)
      if (key.first == recipe && poly::same_ring(key.second, ring)) return ideal;
  }
  Ideal ideal = poly::minors_ideal(recipe.matrix(ring), 2);
  for (auto& l : recipe.linear_part(ring)) ideal.add(std::move(l));
  const auto dd = poly::dimension_degree(ideal);
  if (dd.dimension != 2 || dd.degree != recipe.expected_degree())
    throw std::logic_error("build_surface: " + recipe.tag() + " is not a surface of degree " +
                           std::to_string(recipe.expected_degree()));
  std::lock_guard lock(mu);
  cache.push_back({{recipe, ring}, ideal});
  return ideal;
}

/// The same surface as the kernel of its parametrization.
inline Ideal surface_kernel(const SurfaceRecipe& recipe, const RingPtr& ring) {
  Ideal k = poly::ring_map_kernel(recipe.parametrization(ring));
  for (auto& l : recipe.linear_part(ring))
    if (recipe.kind == RecipeKind::segre_scroll) k.add(std::move(l));
  return k;
}

// --- points and curves on the surfaces ---------------------------------------------

namespace detail {

inline std::uint32_t draw(std::mt19937_64& rng, std::uint32_t p) { return static_cast<std::uint32_t>(rng() % p); }

inline bool is_zero_vec(const Vec& v) {
  for (auto c : v)
    if (c) return false;
  return true;
}

inline Vec image_of(const poly::RingMap& phi, const Vec& params) {
  Vec out;
  for (const auto& f : phi.images) out.push_back(f.evaluate(params));
  return out;
}

}  // namespace detail

/// A random F_p-point of the surface, from a random parameter value.
inline Vec sample_point(const SurfaceRecipe& recipe, const RingPtr& ring, std::mt19937_64& rng) {
  const auto phi = recipe.parametrization(ring);
  const auto p = ring->field().characteristic();
  const auto& f = ring->field();
  for (;;) {
    Vec params(phi.target->nvars());
    if (recipe.kind == RecipeKind::segre_scroll) {
      // [u:v] x [v s : u s : r] satisfies t0 u = t1 v
      const auto u = detail::draw(rng, p), v = detail::draw(rng, p);
      const auto s = detail::draw(rng, p), r = detail::draw(rng, p);
      params = {u, v, f.mul(v, s), f.mul(u, s), r};
    } else {
      for (auto& c : params) c = detail::draw(rng, p);
    }
    Vec pt = detail::image_of(phi, params);
    if (!detail::is_zero_vec(pt)) return pt;
  }
}

/// Three points spanning the plane of a conic on the surface.
inline std::vector<Vec> conic_points(const SurfaceRecipe& recipe, const RingPtr& ring, std::mt19937_64& rng) {
  if (recipe.kind != RecipeKind::veronese && recipe.kind != RecipeKind::cubic_scroll)
    throw std::invalid_argument("conic_points: no conic construction for " + recipe.tag());
  const auto phi = recipe.parametrization(ring);
  const auto& f = ring->field();
  const auto p = f.characteristic();
  for (;;) {
    Vec a(3), b(3);
    for (auto& c : a) c = detail::draw(rng, p);
    for (auto& c : b) c = detail::draw(rng, p);
    // a line of P^2; for the cubic scroll it must miss the base point [0:0:1]
    if (poly::rank_of({a, b}, f) < 2) continue;
    if (recipe.kind == RecipeKind::cubic_scroll && poly::rank_of({a, b, {0, 0, 1}}, f) < 3) continue;
    Vec c(3);
    for (int i = 0; i < 3; ++i) c[i] = f.add(a[i], b[i]);
    std::vector<Vec> pts{detail::image_of(phi, a), detail::image_of(phi, b), detail::image_of(phi, c)};
    if (poly::rank_of(pts, f) == 3) return pts;
  }
}

/// Two points spanning a line of the ruling.
inline std::vector<Vec> ruling_points(const SurfaceRecipe& recipe, const RingPtr& ring, std::mt19937_64& rng) {
  const auto& f = ring->field();
  const auto p = f.characteristic();
  for (;;) {
    const auto u = detail::draw(rng, p), v = detail::draw(rng, p);
    if (u == 0 && v == 0) continue;
    switch (recipe.kind) {
      case RecipeKind::cubic_scroll:
        return {{f.mul(u, u), f.mul(u, v), f.mul(v, v), 0, 0, 0}, {0, 0, 0, u, v, 0}};
      case RecipeKind::segre_scroll:
        return {{f.mul(v, u), f.mul(u, u), 0, f.mul(v, v), f.mul(u, v), 0}, {0, 0, u, 0, 0, v}};
      case RecipeKind::scroll:
        if (recipe.a == 1 && recipe.b == 2) return {{u, v, 0, 0, 0, 0}, {0, 0, f.mul(u, u), f.mul(u, v), f.mul(v, v), 0}};
        [[fallthrough]];
      default: throw std::invalid_argument("ruling_points: no ruling construction for " + recipe.tag());
    }
  }
}

/// Two points spanning the directrix (the (-1)-line).
inline std::vector<Vec> directrix_points(const SurfaceRecipe& recipe) {
  switch (recipe.kind) {
    case RecipeKind::cubic_scroll: return {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}};
    case RecipeKind::segre_scroll: return {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};
    case RecipeKind::scroll:
      if (recipe.a == 1 && recipe.b == 2) return {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}};
      [[fallthrough]];
    default: throw std::invalid_argument("directrix_points: no directrix for " + recipe.tag());
  }
}

/// The P^1 coordinate [c0 : c1] of a point on a 2-row scroll, read from the
/// first nonzero column of the rank-1 matrix; nullopt off the scroll shape.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> ruling_coordinate(const SurfaceRecipe& recipe,
                                                                                const RingPtr& ring,
                                                                                const Vec& point) {
  if (!recipe.is_scroll()) return std::nullopt;
  const auto m = recipe.matrix(ring);
  const auto& f = ring->field();
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    const auto top = m[0][c].evaluate(point), bottom = m[1][c].evaluate(point);
    if (top == 0 && bottom == 0) continue;
    if (top != 0) return std::make_pair(1u, f.mul(bottom, f.inv(top)));
    return std::make_pair(0u, 1u);
  }
  return std::nullopt;
}

}  // namespace cubiclab::geometry

#endif  // CUBICLAB_GEOMETRY_SURFACES_HPP
