#include "gtest/gtest.h"

#include "cubiclab/intersection/excess.hpp"

namespace cubiclab::intersection {
namespace {

TEST(ExcessSurfacePlane, ConicCases) {
  // Veronese or scroll meeting a plane in a conic: K.C = -3.
  EXPECT_EQ(excess_surface_plane(-3, 2, 0), -1);
  EXPECT_EQ(excess_surface_plane(0, 0, 1), 0);
  EXPECT_THROW(excess_surface_plane(-3, 2, 1), std::invalid_argument);
}

TEST(ExcessSurfacePlane, TwoPrintedFormsAgree) {
  for (long long d = 1; d <= 10; ++d) {
    const auto inv = plane_curve_invariants(d);
    EXPECT_EQ(-d * (d - 3), 2 - 2 * inv.genus) << "d=" << d;
    for (long long ksc = -12; ksc <= 12; ++ksc)
      EXPECT_EQ(excess_surface_plane(ksc, d, inv.genus), ksc - d * (d - 3));
  }
}

TEST(PlaneCurveInvariants, SmallDegrees) {
  EXPECT_EQ(plane_curve_invariants(1).genus, 0);
  EXPECT_EQ(plane_curve_invariants(1).canonical_pairing, -3);
  EXPECT_EQ(plane_curve_invariants(2).canonical_pairing, -6);
  EXPECT_EQ(plane_curve_invariants(3).genus, 1);
  EXPECT_EQ(plane_curve_invariants(3).canonical_pairing, -9);
  EXPECT_THROW(plane_curve_invariants(0), std::invalid_argument);
}

TEST(MultAlongCurve, ProjectionCases) {
  EXPECT_EQ(mult_along_curve(AmbientPreset::projected_p4, 1, 0, -2, -3), 2);  // ruling
  EXPECT_EQ(mult_along_curve(AmbientPreset::projected_p4, 1, 0, -1, -3), 3);  // directrix
  EXPECT_EQ(mult_along_curve(AmbientPreset::projected_p4, 2, 0, -3, -6), 3);  // Veronese conic
  // 3d + K1.C + K2.C + 2 - 2g inside the cubic fourfold
  EXPECT_EQ(mult_along_curve(AmbientPreset::cubic_fourfold, 2, 0, -3, -6), -1);
}

TEST(MultAlongCurve, PresetNames) {
  EXPECT_EQ(parse_preset("cubic-fourfold"), AmbientPreset::cubic_fourfold);
  EXPECT_EQ(parse_preset("veronese-projection"), AmbientPreset::projected_p4);
  EXPECT_EQ(parse_preset("scroll-projection"), AmbientPreset::projected_p4);
  EXPECT_FALSE(parse_preset("quintic").has_value());
}

TEST(ScrollLineCase, Dichotomy) {
  auto ruling = scroll_line_case(0);
  EXPECT_EQ(ruling.excess, 0);
  EXPECT_EQ(ruling.mult, 2);
  EXPECT_EQ(ruling.status, SecantClass::oadp);
  EXPECT_EQ(ruling.flat_limit, "quartic scroll limit");

  auto directrix = scroll_line_case(-1);
  EXPECT_EQ(directrix.excess, 1);
  EXPECT_EQ(directrix.mult, 3);
  EXPECT_EQ(directrix.status, SecantClass::defective);
  EXPECT_EQ(directrix.flat_limit, "Veronese limit");

  EXPECT_THROW(scroll_line_case(1), std::invalid_argument);
}

TEST(ScrollLineCase, AgreesWithExcessFormula) {
  for (long long l : {-1LL, 0LL}) {
    EXPECT_EQ(excess_surface_plane(-2 - l, 1, 0), -l);
    EXPECT_EQ(scroll_line_case(l).mult, mult_along_curve(AmbientPreset::projected_p4, 1, 0, -2 - l, -3));
  }
}

TEST(SecantCount, Cases) {
  EXPECT_EQ(secant_count(3, 1, 2).count, 1);
  EXPECT_EQ(secant_count(3, 1, 2).kind, SecantClass::oadp);
  EXPECT_EQ(secant_count(4, 1, 3).count, 1);
  EXPECT_EQ(secant_count(3, 1, 3).kind, SecantClass::defective);
  EXPECT_EQ(secant_count(4, 1, 0).kind, SecantClass::other);
  EXPECT_THROW(secant_count(3, 1, 4), std::invalid_argument);
  EXPECT_THROW(secant_count(3, 1, -1), std::invalid_argument);
}

TEST(SecantCount, Conservation) {
  for (long long d1 = 1; d1 <= 5; ++d1)
    for (long long d2 = 1; d2 <= 5; ++d2)
      for (long long a = 0; a <= d1 * d2; ++a) EXPECT_EQ(secant_count(d1, d2, a).count + a, d1 * d2);
}

}  // namespace
}  // namespace cubiclab::intersection
