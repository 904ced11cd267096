#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "cubiclab/io/poly_text.hpp"
#include "cubiclab/poly/ideal_ops.hpp"

namespace cubiclab::poly {
namespace {

using io::parse_poly;
using io::to_string;

const RingPtr P5 = Ring::indexed("x", 6);
const RingPtr P2 = Ring::indexed("t", 3);

Poly px(const std::string& s) { return parse_poly(s, P5); }

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  Ideal out(r);
  for (const auto& g : gens) out.add(parse_poly(g, r));
  return out;
}

Ideal veronese_minors() {
  PolyMatrix m{{px("x_0"), px("x_1"), px("x_2")}, {px("x_1"), px("x_3"), px("x_4")},
               {px("x_2"), px("x_4"), px("x_5")}};
  return minors_ideal(m, 2);
}

Ideal segre_minors() {
  PolyMatrix m{{px("x_0"), px("x_1"), px("x_2")}, {px("x_3"), px("x_4"), px("x_5")}};
  return minors_ideal(m, 2);
}

Ideal scroll_minors() {
  // S(1,2) in V(x_5)
  PolyMatrix m{{px("x_0"), px("x_2"), px("x_3")}, {px("x_1"), px("x_3"), px("x_4")}};
  Ideal i = minors_ideal(m, 2);
  i.add(px("x_5"));
  return i;
}

const char* kCubicA11 =
    "-6x_0x_1^2-x_1^3+6x_0^2x_2+x_0x_1x_2+8x_1^2x_2-8x_0x_2^2+15x_0x_1x_3-2x_1^2x_3+12x_0x_2x_3-2x_1x_2x_3-"
    "8x_2^2x_3-10x_1x_3^2-6x_2x_3^2-15x_0^2x_4-10x_0x_1x_4-9x_1^2x_4+11x_0x_2x_4+8x_1x_2x_4+10x_0x_3x_4-"
    "15x_1x_3x_4-13x_2x_3x_4-10x_0x_4^2+13x_1x_4^2-9x_0^2x_5-12x_0x_1x_5+8x_1^2x_5+15x_0x_2x_5-9x_1x_2x_5-"
    "7x_2^2x_5-14x_0x_3x_5+5x_1x_3x_5-4x_2x_3x_5-13x_0x_4x_5-11x_1x_4x_5+9x_2x_4x_5+8x_0x_5^2+2x_1x_5^2-"
    "13x_2x_5^2";

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, unsigned max_deg) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(r->nvars(), 0);
    unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned s = 0; s < d; ++s) ++e[rng() % r->nvars()];
    t.push_back({Monomial::from_exponents(e), static_cast<std::uint32_t>(rng() % 31)});
  }
  return Poly(r, std::move(t));
}

std::vector<std::uint32_t> random_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(n);
  for (auto& v : p) v = static_cast<std::uint32_t>(rng() % 31);
  return p;
}

// --- field and arithmetic ----------------------------------------------------------

TEST(PrimeField, InversesMod31) {
  PrimeField f(31);
  for (std::uint32_t a = 1; a < 31; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << a;
  EXPECT_EQ(f.mul(16, 2), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_THROW(PrimeField(33), std::invalid_argument);
}

TEST(PolyArith, SmallIdentities) {
  EXPECT_EQ((px("x_0+x_1") * px("x_0-x_1")), px("x_0^2-x_1^2"));
  EXPECT_EQ(px("x_0^2").evaluate({5, 0, 0, 0, 0, 0}), 25u);
  EXPECT_EQ(px("x_0^3").derivative(0), px("3x_0^2"));
  EXPECT_TRUE((px("x_0") - px("x_0")).is_zero());
  EXPECT_THROW(px("x_0") + parse_poly("t_0", P2), std::invalid_argument);
}

TEST(PolyArith, EvaluationIsARingMap) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly f = random_poly(P5, rng, 6, 3), g = random_poly(P5, rng, 6, 3);
    const auto pt = random_point(6, rng);
    PrimeField F(31);
    EXPECT_EQ((f * g).evaluate(pt), F.mul(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f + g).evaluate(pt), F.add(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f - g).evaluate(pt), F.sub(f.evaluate(pt), g.evaluate(pt)));
  }
}

TEST(PolyArith, TermsDescendInGrevlex) {
  const Poly c = px(kCubicA11);
  for (std::size_t i = 1; i < c.size(); ++i)
    EXPECT_GT(P5->compare(c.terms()[i - 1].mono, c.terms()[i].mono), 0);
}

TEST(MonomialOrder, Examples) {
  const auto lex = Ring::indexed("x", 3, MonomialOrder::lex());
  const auto grevlex = Ring::indexed("x", 3);
  const auto block = Ring::indexed("x", 3, MonomialOrder::elimination(1));
  const auto a = Monomial::from_exponents({1, 0, 0}), b = Monomial::from_exponents({0, 2, 0});
  EXPECT_GT(lex->compare(a, b), 0);
  EXPECT_LT(grevlex->compare(a, b), 0);
  EXPECT_GT(block->compare(a, b), 0);
  // grevlex: x_0 x_2 < x_1^2
  EXPECT_LT(grevlex->compare(Monomial::from_exponents({1, 0, 1}), Monomial::from_exponents({0, 2, 0})), 0);
}

// --- Groebner bases ----------------------------------------------------------

TEST(Groebner, Trivial) {
  const auto gb = groebner(ideal_of(P5, {"x_0", "x_0+x_1"}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.basis()[0], px("x_1"));
  EXPECT_EQ(gb.basis()[1], px("x_0"));
  EXPECT_TRUE(groebner(ideal_of(P5, {"1"})).is_unit());
  EXPECT_TRUE(groebner(ideal_of(P5, {"x_0^2+1", "x_0"})).is_unit());
}

TEST(Groebner, VeroneseMinors) {
  const Ideal v = veronese_minors();
  EXPECT_EQ(v.gens().size(), 6u);
  const auto gb = groebner(v);
  EXPECT_EQ(gb.size(), 6u);
  for (const auto& g : gb.basis()) EXPECT_EQ(g.degree(), 2);
  EXPECT_TRUE(verify_groebner(gb));
  EXPECT_TRUE(is_reduced(gb));
  EXPECT_TRUE(same_ideal(v, gb.ideal()));
  EXPECT_TRUE(ideal_member(px("x_0x_3-x_1^2"), gb));
}

TEST(Groebner, RandomIdealsSatisfyPostcondition) {
  std::mt19937_64 rng(5);
  const auto r = Ring::indexed("x", 4);
  for (int trial = 0; trial < 40; ++trial) {
    Ideal i(r);
    for (int k = 0; k < 3; ++k) i.add(random_poly(r, rng, 4, 3));
    const auto gb = groebner(i);
    EXPECT_TRUE(verify_groebner(gb));
    EXPECT_TRUE(is_reduced(gb));
    for (const auto& g : i.gens()) EXPECT_TRUE(ideal_member(g, gb));
  }
}

TEST(Groebner, PairSelectionDoesNotChangeReducedBasis) {
  const Ideal i = veronese_minors() + ideal_of(P5, {"x_0+x_5", "x_2-3x_4"});
  const auto ref = groebner(i);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto alt = groebner(i, {PairSelection::random, seed});
    ASSERT_EQ(alt.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(alt.basis()[k], ref.basis()[k]);
  }
}

TEST(NormalForm, ModuloIdealIsStable) {
  std::mt19937_64 rng(9);
  const auto gb = groebner(veronese_minors());
  for (int trial = 0; trial < 50; ++trial) {
    const Poly r = normal_form(random_poly(P5, rng, 8, 3), gb);
    const Poly f = random_poly(P5, rng, 4, 2);
    const Poly g = gb.basis()[rng() % gb.size()] * random_poly(P5, rng, 3, 1);
    EXPECT_EQ(normal_form(f * g + r, gb), r);
  }
}

TEST(NormalForm, RandomCubicIsNotInVeronese) {
  std::mt19937_64 rng(3);
  const auto gb = groebner(veronese_minors());
  const Poly f = random_form(P5, 3, rng);
  const Poly rem = normal_form(f, gb);
  EXPECT_FALSE(rem.is_zero());
  // f - rem is in the ideal
  EXPECT_TRUE(normal_form(f - rem, gb).is_zero());
}

// --- kernels and elimination --------------------------------------------------

TEST(Kernel, VeroneseEqualsMinors) {
  std::vector<Poly> img;
  for (const char* s : {"t_0^2", "t_0t_1", "t_0t_2", "t_1^2", "t_1t_2", "t_2^2"}) img.push_back(parse_poly(s, P2));
  const Ideal k = ring_map_kernel(RingMap(P5, P2, img));
  EXPECT_TRUE(same_ideal(k, veronese_minors()));
}

TEST(Kernel, SegreEqualsMinors) {
  const auto ring = std::make_shared<const Ring>(std::vector<std::string>{"a_0", "a_1", "b_0", "b_1", "b_2"});
  std::vector<Poly> img;
  for (const char* s : {"a_0b_0", "a_0b_1", "a_0b_2", "a_1b_0", "a_1b_1", "a_1b_2"})
    img.push_back(parse_poly(s, ring));
  const Ideal k = ring_map_kernel(RingMap(P5, ring, img));
  EXPECT_TRUE(same_ideal(k, segre_minors()));
}

TEST(Kernel, ScrollEqualsMinors) {
  std::vector<Poly> img;
  for (const char* s : {"t_0^3", "t_0^2t_1", "t_0^2t_2", "t_0t_1t_2", "t_1^2t_2", "0"}) img.push_back(parse_poly(s, P2));
  const Ideal k = ring_map_kernel(RingMap(P5, P2, img));
  EXPECT_TRUE(same_ideal(k, scroll_minors()));
}

TEST(Elimination, Toy) {
  const auto r = Ring::indexed("x", 3);
  const Ideal i = ideal_of(r, {"x_0-x_1^2", "x_2-x_1^3"});
  const Ideal e = elimination_ideal(i, {0, 2});
  const auto r2 = e.ring();
  ASSERT_EQ(r2->nvars(), 2u);
  EXPECT_TRUE(same_ideal(e, Ideal(r2, {parse_poly("x_0^3-x_2^2", r2)})));
}

TEST(Intersection, PlaneAndSurface) {
  const Ideal plane = ideal_of(P5, {"x_3", "x_4", "x_5"});
  const Ideal v = veronese_minors();
  const Ideal both = intersect(plane, v);
  const auto gb = groebner(both);
  for (const auto& g : gb.basis()) {
    EXPECT_TRUE(ideal_member(g, plane));
    EXPECT_TRUE(ideal_member(g, v));
  }
  // x_3 * (a Veronese minor) is in both; x_3 alone is not.
  EXPECT_TRUE(ideal_member(px("x_3") * v.gens()[0], gb));
  EXPECT_FALSE(ideal_member(px("x_3"), gb));
}

TEST(Minors, Sizes) {
  PolyMatrix m{{px("x_0"), px("x_1")}, {px("x_2"), px("x_3")}};
  EXPECT_EQ(minors_ideal(m, 1).gens().size(), 4u);
  EXPECT_EQ(minors_ideal(m, 2).gens().size(), 1u);
  EXPECT_THROW(minors_ideal(m, 3), std::invalid_argument);
  PolyMatrix scroll{{px("x_0"), px("x_2"), px("x_3")}, {px("x_1"), px("x_3"), px("x_4")}};
  EXPECT_EQ(minors_ideal(scroll, 2).gens().size(), 3u);
}

// --- dimension and degree ----------------------------------------------------------

TEST(DimensionDegree, Surfaces) {
  const auto v = dimension_degree(veronese_minors());
  EXPECT_EQ(v.dimension, 2);
  EXPECT_EQ(v.degree, 4);
  const auto s = dimension_degree(scroll_minors());
  EXPECT_EQ(s.dimension, 2);
  EXPECT_EQ(s.degree, 3);
  Ideal segre_scroll = segre_minors();
  segre_scroll.add(px("x_0-x_4"));
  const auto ss = dimension_degree(segre_scroll);
  EXPECT_EQ(ss.dimension, 2);
  EXPECT_EQ(ss.degree, 3);
  EXPECT_EQ(dimension_degree(ideal_of(P5, {"x_0", "x_1", "x_2", "x_3", "x_4", "x_5"})).dimension, -1);
  EXPECT_EQ(dimension_degree(ideal_of(P5, {"1"})).dimension, -1);
  EXPECT_EQ(dimension_degree(Ideal(P5)).dimension, 5);
  const auto points = dimension_degree(ideal_of(P5, {"x_2", "x_3", "x_4", "x_5", "x_0^2x_1-x_0x_1^2"}));
  EXPECT_EQ(points.dimension, 0);
  EXPECT_EQ(points.degree, 3);
}

TEST(DimensionDegree, IndependentSetsAgreeWithHilbert) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Ideal i(P5);
    const int ngens = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < ngens; ++k) i.add(random_form(P5, 1 + static_cast<unsigned>(rng() % 2), rng));
    const auto gb = groebner(i);
    EXPECT_EQ(krull_dimension(gb), dimension_degree(gb).dimension);
  }
}

TEST(DimensionDegree, VeroneseHilbertFunction) {
  // Standard monomials of degree d count dim (R/I)_d = C(2d+2, 2).
  const auto gb = groebner(veronese_minors());
  const auto lms = gb.leading_monomials();
  for (unsigned d = 1; d <= 5; ++d) {
    int standard = 0;
    for (const auto& m : monomials_of_degree(6, d)) {
      bool hit = false;
      for (const auto& l : lms) hit = hit || l.divides(m);
      standard += !hit;
    }
    EXPECT_EQ(standard, static_cast<int>((2 * d + 2) * (2 * d + 1) / 2));
  }
}

TEST(DimensionDegree, InvariantUnderPairOrder) {
  const std::vector<Ideal> ideals = {
      veronese_minors(), scroll_minors(), veronese_minors() + ideal_of(P5, {"x_3", "x_4", "x_5"}),
      scroll_minors() + ideal_of(P5, {"x_0", "x_1", "x_2"})};
  for (const auto& i : ideals) {
    const auto ref = dimension_degree(i);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto gb = groebner(i, {PairSelection::random, seed});
      const auto dd = dimension_degree(gb);
      EXPECT_EQ(dd.dimension, ref.dimension);
      EXPECT_EQ(dd.degree, ref.degree);
    }
  }
}

// --- smoothness and random forms ----------------------------------------------------

TEST(Smoothness, Examples) {
  EXPECT_TRUE(is_projectively_smooth(px("x_0^3+x_1^3+x_2^3+x_3^3+x_4^3+x_5^3")));
  EXPECT_FALSE(is_projectively_smooth(px("x_0^3")));
  EXPECT_TRUE(is_projectively_smooth(px(kCubicA11)));
  EXPECT_THROW(is_projectively_smooth(px("x_0^3+x_1")), std::invalid_argument);
}

TEST(Smoothness, AppendixCubicIsFast) {
  const auto start = std::chrono::steady_clock::now();
  EXPECT_TRUE(is_projectively_smooth(px(kCubicA11)));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  EXPECT_LT(ms.count(), 2000);
}

TEST(RandomForms, InIdealAndDeterministic) {
  const Ideal v = veronese_minors();
  const auto gb = groebner(v);
  std::mt19937_64 a(42), b(42);
  const Poly f = random_form_in_ideal(v, 3, a);
  EXPECT_EQ(f, random_form_in_ideal(v, 3, b));
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_TRUE(ideal_member(f, gb));
  EXPECT_THROW(random_form_in_ideal(v, 1, a), std::invalid_argument);
}

TEST(RandomForms, PlaneThroughAPoint) {
  // ideal of the point [1:2:3:4:5:6]
  const Ideal pt = ideal_of(P5, {"2x_0-x_1", "3x_0-x_2", "4x_0-x_3", "5x_0-x_4", "6x_0-x_5"});
  std::mt19937_64 rng(1);
  Ideal plane(P5);
  for (int k = 0; k < 3; ++k) plane.add(random_form_in_ideal(pt, 1, rng));
  for (const auto& l : plane.gens()) EXPECT_EQ(l.evaluate({1, 2, 3, 4, 5, 6}), 0u);
  EXPECT_EQ(dimension_degree(plane).dimension, 2);
}

}  // namespace
}  // namespace cubiclab::poly
