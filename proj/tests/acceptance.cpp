// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cubiclab/classify/classifier.hpp"
#include "cubiclab/geometry/construct.hpp"
#include "cubiclab/intersection/excess.hpp"
#include "cubiclab/io/example_file.hpp"

namespace {

using namespace cubiclab;
using classify::Family;
using lattice::GramMatrix;
using lattice::LatticeVector;

// Pinned limits.
constexpr double kClassifySeconds = 1.0;
constexpr double kAppendixSeconds = 60.0;
constexpr int kRandomGrams = 100;
constexpr int kConstructSeeds = 20;
constexpr int kConstructBudget = 50;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      details_.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { details_.push_back(s); }

  bool finish(int number) const {
    std::cout << "C" << number << " " << (ok_ ? "PASS" : "FAIL") << "  " << title_ << "\n";
    for (const auto& d : details_) std::cout << "     " << d << "\n";
    return ok_;
  }

 private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

std::vector<long long> range(long long a, long long b) {
  std::vector<long long> out;
  for (long long i = a; i <= b; ++i) out.push_back(i);
  return out;
}

bool has_root(const std::vector<LatticeVector>& roots, const LatticeVector& v) {
  return std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return r == v || r == -v; });
}

std::string show(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + '}';
}

// --- 1, 2: classification -------------------------------------------------------

struct FamilyExpectation {
  Family family;
  std::vector<long long> admissible;
  std::vector<std::pair<long long, LatticeVector>> empty;
  std::vector<long long> determinants;  // nonempty params, ascending
};

void check_family(Criterion& c, const FamilyExpectation& e, std::vector<classify::ComponentReport>& reports) {
  const auto t0 = Clock::now();
  reports = classify::classify_all(e.family);
  const double secs = seconds_since(t0);
  std::ostringstream timing;
  timing << "classify_all took " << secs << " s (limit " << kClassifySeconds << " s)";
  c.note(timing.str());
  c.check(secs < kClassifySeconds, "runtime");

  c.check(classify::admissible_params(e.family) == e.admissible, "admissible range " + show(e.admissible));
  std::vector<long long> empty_got, empty_want, dets;
  for (const auto& [p, root] : e.empty) empty_want.push_back(p);
  for (const auto& r : reports) {
    if (!r.nonempty) {
      empty_got.push_back(r.param);
      continue;
    }
    dets.push_back(static_cast<long long>(r.determinant));
    c.check(r.irreducible == true, "irreducible at " + std::to_string(r.param));
  }
  c.check(empty_got == empty_want, "empty exactly at " + show(empty_want) + ", got " + show(empty_got));
  for (const auto& [p, root] : e.empty) {
    const auto g = classify::family_gram(e.family, p);
    const auto it = std::find_if(reports.begin(), reports.end(), [p = p](const auto& r) { return r.param == p; });
    c.check(it != reports.end() && has_root(it->roots, root), "witness at " + std::to_string(p));
    c.check(lattice::vector_norm(g, root) == 2, "witness norm recomputed at " + std::to_string(p));
  }
  c.check(dets == e.determinants, "discriminants " + show(e.determinants) + ", got " + show(dets));
  c.note("discriminants " + show(dets) + ", empty at " + show(empty_got));
}

bool criterion_1() {
  Criterion c("classify m12: admissible, empty loci, discriminants, irreducibility, merges");
  std::vector<classify::ComponentReport> reports;
  check_family(c,
               {Family::scroll, range(-2, 4), {{-2, LatticeVector{-2, 1, 1}}, {4, LatticeVector{0, -1, 1}}},
                {20, 29, 32, 29, 20}},
               reports);
  const auto groups = classify::merge_isometric(Family::scroll);
  const std::vector<std::vector<long long>> want{{-1, 3}, {0, 2}, {1}};
  c.check(groups == want, "merged components {-1,3} {0,2} {1}");
  for (const auto& g : groups)
    if (g.size() == 2) {
      const auto w = lattice::are_isometric(classify::family_gram(Family::scroll, g[0]),
                                            classify::family_gram(Family::scroll, g[1]));
      c.check(w && w->certifies(classify::family_gram(Family::scroll, g[0]), classify::family_gram(Family::scroll, g[1])),
              "isometry witness for " + show(g));
    }
  c.note("components: " + std::to_string(groups.size()));
  return c.finish(1);
}

bool criterion_2() {
  Criterion c("classify m20: admissible, empty locus, discriminants, irreducibility, certificates");
  std::vector<classify::ComponentReport> reports;
  check_family(c, {Family::veronese, range(-2, 5), {{5, LatticeVector{1, 1, -1}}}, {20, 37, 48, 53, 52, 45, 32}},
               reports);
  std::vector<long long> with_certs;
  for (const auto& r : reports) {
    if (r.rationality.empty()) continue;
    with_certs.push_back(r.param);
    auto find = [&](classify::CertificateKind k) {
      for (const auto& cert : r.rationality)
        if (cert.kind == k) return std::optional<long long>(cert.value);
      return std::optional<long long>();
    };
    const auto odd = find(classify::CertificateKind::odd_multisection);
    const auto oadp = find(classify::CertificateKind::reducible_oadp);
    if (r.param == -1) c.check(odd == 5, "odd multisection 5 at -1");
    if (r.param == 1) c.check(odd == 3, "odd multisection 3 at 1");
    if (r.param == 3) c.check(oadp == 1, "secant count 1 at 3");
  }
  c.check(with_certs == std::vector<long long>{-1, 1, 3}, "certificates exactly at {-1,1,3}, got " + show(with_certs));
  c.note("certificates at " + show(with_certs));
  return c.finish(2);
}

// --- 3: glue logs ------------------------------------------------------------------

bool criterion_3() {
  Criterion c("overlattice case logs");
  using Case = std::tuple<long long, long long, long long, long long, long long, long long>;
  struct Log {
    Family f;
    long long p;
    std::set<Case> cases;
  };
  const std::vector<Log> logs = {
      {Family::scroll, -1, {{2, 1, 0, 3, 0, 4}, {2, 0, 1, 2, 1, 2}}},
      {Family::scroll, 1, {{2, 1, 0, 3, 1, 4}, {2, 0, 1, 2, 2, 3}}},
      {Family::scroll, 3, {}},  // two cases, both killed by (-1,-1,1); checked below
      {Family::veronese, -2, {{2, 0, 0, 2, -1, 3}, {2, 1, 1, 4, 1, 6}}},
      {Family::veronese, 0, {{2, 0, 0, 2, 0, 3}, {2, 1, 1, 4, 2, 7}}},
      {Family::veronese, 2, {{2, 0, 0, 2, 1, 3}, {2, 1, 1, 4, 3, 8}}},
      {Family::veronese, 3, {{3, 0, 2, 2, 3, 4}}},
      {Family::veronese, 4, {{2, 0, 0, 2, 2, 3}, {2, 1, 1, 4, 4, 9}}},
  };
  for (const auto& l : logs) {
    const std::string name = std::string(1, classify::family_data(l.f).symbol) + "_" + std::to_string(l.p);
    const auto got = classify::glue_candidates(l.f, l.p);
    std::set<Case> cases;
    for (const auto& g : got) {
      cases.insert({g.n, g.xp, g.yp, static_cast<long long>(g.a), static_cast<long long>(g.b),
                    static_cast<long long>(g.c)});
      c.check(g.reverify(), name + " verdict re-verifies");
      c.check(g.verdict != classify::GlueVerdict::viable, name + " no viable overlattice");
    }
    if (l.f == Family::scroll && l.p == 3) {
      c.check(got.size() == 2, name + " two cases");
      for (const auto& g : got)
        c.check(g.verdict == classify::GlueVerdict::rejected_short_root &&
                    lattice::vector_norm(g.gram, LatticeVector{-1, -1, 1}) == 2,
                name + " rejected by (-1,-1,1)");
    } else {
      c.check(cases == l.cases, name + " case list");
    }
    if (l.f == Family::scroll && l.p == 1) {
      for (const auto& g : got) {
        c.check(g.n != 4, "M_1 has no integral n=4 case");
        if (g.xp == 1) {
          c.check(g.verdict == classify::GlueVerdict::rejected_not_even && g.complement &&
                      g.complement->gram == GramMatrix{{24, 24}, {24, 25}},
                  "M_1 (2,1,0) rejected-not-even, complement [[24,24],[24,25]]");
        } else {
          c.check(g.verdict == classify::GlueVerdict::rejected_short_root &&
                      has_root(lattice::short_vectors(g.gram, 2), LatticeVector{-1, 0, 1}),
                  "M_1 (2,0,1) rejected-short-root (-1,0,1)");
        }
      }
    }
    if (l.f == Family::veronese && l.p == 4)
      for (const auto& g : got)
        if (g.xp == 1) c.check(g.verdict == classify::GlueVerdict::rejected_not_even, "N_4 (2,1,1) rejected-not-even");
    // index identity det(B) n^2 = det(family)
    const auto det = lattice::determinant(classify::family_gram(l.f, l.p));
    for (const auto& g : got) c.check(lattice::determinant(g.gram) * g.n * g.n == det, name + " index identity");
  }
  c.note("8 logs compared");
  return c.finish(3);
}

// --- 4: excess ---------------------------------------------------------------------

bool criterion_4() {
  using namespace intersection;
  Criterion c("excess intersection cases");
  // conic: K.C = -3 on the Veronese (line class) and on the scroll (C^2 = 1)
  c.check(excess_surface_plane(-3, 2, 0) == -1, "conic -> -1");
  const auto ruling = scroll_line_case(0);
  c.check(ruling.excess == 0 && ruling.mult == 2 && ruling.status == SecantClass::oadp, "ruling -> 0, mult 2, OADP");
  const auto sc = secant_count(3, 1, 2);
  c.check(sc.count == 1 && sc.kind == SecantClass::oadp, "ruling secant 3*1-2 = 1");
  const auto dir = scroll_line_case(-1);
  c.check(dir.excess == 1 && dir.mult == 3 && dir.status == SecantClass::defective, "directrix -> 1, mult 3, defective");
  const long long vmult = mult_along_curve(AmbientPreset::projected_p4, 2, 0, -3, -6);
  const auto vsc = secant_count(4, 1, vmult);
  c.check(vmult == 3 && vsc.count == 1 && vsc.kind == SecantClass::oadp, "Veronese u plane conic: mult 3, secant 1");
  for (long long d = 1; d <= 10; ++d) {
    const auto inv = plane_curve_invariants(d);
    for (long long k = -40; k <= 10; ++k)
      c.check(excess_surface_plane(k, d, inv.genus) == k - d * (d - 3), "two forms agree at d=" + std::to_string(d));
  }
  c.note("ruling mult " + std::to_string(ruling.mult) + ", directrix mult " + std::to_string(dir.mult) +
         ", Veronese conic mult " + std::to_string(vmult));
  return c.finish(4);
}

// --- 5: appendix --------------------------------------------------------------------

bool criterion_5(std::vector<geometry::ExampleRecord>& recs) {
  Criterion c("appendix golden suite (14 records)");
  const auto t0 = Clock::now();
  for (const auto& p : io::example_files(CUBICLAB_DATA_DIR "/appendix")) recs.push_back(io::load_example(p));
  c.check(recs.size() == 14, "14 records");
  int passed = 0;
  for (const auto& r : recs) {
    const auto rep = geometry::verify_example(r);
    passed += rep.passed();
    c.check(rep.passed(), r.label + " (profile " + rep.profile.spec.to_string() + ")");
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << passed << "/" << recs.size() << " pass in " << secs << " s (limit " << kAppendixSeconds << " s)";
  c.note(os.str());
  c.check(secs < kAppendixSeconds, "runtime");
  return c.finish(5);
}

// --- 6: property suites ------------------------------------------------------------

using Small = std::vector<std::vector<std::int64_t>>;

std::int64_t det3(const Small& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// |x_i| <= sqrt(N (G^-1)_ii) = sqrt(N adj_ii / det)
std::set<std::vector<std::int64_t>> box_search(const Small& g, std::int64_t target) {
  const std::int64_t det = det3(g);
  std::int64_t bound[3];
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    const std::int64_t adj = g[a][a] * g[b][b] - g[a][b] * g[b][a];
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) * det <= target * adj) ++r;
    bound[i] = r;
  }
  std::set<std::vector<std::int64_t>> out;
  for (std::int64_t x = -bound[0]; x <= bound[0]; ++x)
    for (std::int64_t y = -bound[1]; y <= bound[1]; ++y)
      for (std::int64_t z = -bound[2]; z <= bound[2]; ++z) {
        const std::int64_t v[3] = {x, y, z};
        std::int64_t q = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) q += v[i] * g[i][j] * v[j];
        const std::int64_t lead = x ? x : (y ? y : z);
        if (q == target && lead > 0) out.insert({x, y, z});
      }
  return out;
}

bool criterion_6(const std::vector<geometry::ExampleRecord>& recs) {
  Criterion c("property suites");
  const poly::RingPtr p5 = poly::Ring::indexed("x", 6);

  // Groebner: S-pairs reduce to zero on every basis computed below
  int bases = 0;
  auto check_gb = [&](const poly::Ideal& i, const std::string& what) {
    const auto gb = poly::groebner(i);
    ++bases;
    c.check(poly::verify_groebner(gb) && poly::is_reduced(gb), "Groebner postcondition: " + what);
  };
  for (const auto& r : geometry::all_recipes()) check_gb(geometry::build_surface(r, p5), r.tag());
  for (const auto& rec : recs) {
    const auto s = geometry::build_surface(*rec.recipe, rec.ring());
    check_gb(rec.plane + s, rec.label + " P+S");
    check_gb(poly::intersect(rec.plane, s), rec.label + " P n S");
    poly::Ideal jac(rec.ring());
    for (std::size_t i = 0; i < 6; ++i) jac.add(rec.cubic.derivative(i));
    check_gb(jac, rec.label + " Jacobian");
  }
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30; ++t) {
    poly::Ideal i(p5);
    for (int k = 0; k < 3; ++k) i.add(poly::random_form(p5, 1 + static_cast<unsigned>(rng() % 2), rng));
    check_gb(i, "random ideal " + std::to_string(t));
  }
  c.note(std::to_string(bases) + " Groebner bases, all S-pairs reduce to 0");

  // kernels equal minors
  for (const auto& r : {geometry::SurfaceRecipe::veronese(), geometry::SurfaceRecipe::segre_scroll()})
    c.check(poly::same_ideal(geometry::surface_kernel(r, p5), geometry::build_surface(r, p5)), "kernel = minors: " + r.tag());
  {
    auto src = std::make_shared<const poly::Ring>(std::vector<std::string>{"u", "v", "t_0", "t_1", "t_2"});
    auto v = [&](std::size_t i) { return poly::Poly::variable(src, i); };
    const poly::RingMap segre(p5, src, {v(2) * v(0), v(3) * v(0), v(4) * v(0), v(2) * v(1), v(3) * v(1), v(4) * v(1)});
    auto x = [&](std::size_t i) { return poly::Poly::variable(p5, i); };
    const auto minors = poly::minors_ideal(poly::PolyMatrix{{x(0), x(1), x(2)}, {x(3), x(4), x(5)}}, 2);
    c.check(poly::same_ideal(poly::ring_map_kernel(segre), minors), "kernel = minors: Segre P1 x P2");
  }
  c.note("kernel = minors for Veronese, Segre P1 x P2, Segre hyperplane section");

  // short vectors vs box search
  std::uniform_int_distribution<int> off(-4, 4), diag(1, 9), norm(1, 6);
  int grams = 0;
  while (grams < kRandomGrams) {
    Small m(3, std::vector<std::int64_t>(3));
    for (int i = 0; i < 3; ++i) {
      m[i][i] = diag(rng);
      for (int j = i + 1; j < 3; ++j) m[i][j] = m[j][i] = off(rng);
    }
    if (!(m[0][0] > 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0 && det3(m) > 0)) continue;
    ++grams;
    lattice::IntMatrix im(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) im(i, j) = m[i][j];
    const GramMatrix g(im);
    const int target = norm(rng);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& v : lattice::short_vectors(g, target))
      got.insert({static_cast<std::int64_t>(v[0]), static_cast<std::int64_t>(v[1]), static_cast<std::int64_t>(v[2])});
    c.check(got == box_search(m, target), "short vectors = box search, matrix " + std::to_string(grams));

    // isometry witness against a random unimodular change of basis
    std::uniform_int_distribution<int> e(-2, 2);
    const lattice::IntMatrix u =
        lattice::IntMatrix{{1, e(rng), e(rng)}, {0, 1, e(rng)}, {0, 0, 1}} * lattice::IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    const GramMatrix h(u.transpose() * im * u);
    const auto w = lattice::are_isometric(g, h);
    c.check(w && w->certifies(g, h), "isometry witness T^T G1 T = G2, matrix " + std::to_string(grams));
  }
  c.note(std::to_string(grams) + " random rank-3 forms: enumeration = box search, isometry witnesses certify");

  // construction self-verification
  const auto t0 = Clock::now();
  int built = 0, pairs = 0;
  for (Family f : {Family::scroll, Family::veronese}) {
    for (long long p : classify::admissible_params(f)) {
      if (lattice::has_short_root(classify::family_gram(f, p))) continue;
      ++pairs;
      for (int seed = 1; seed <= kConstructSeeds; ++seed) {
        const std::string name = std::string(classify::family_data(f).tag) + " param " + std::to_string(p) +
                                 " seed " + std::to_string(seed);
        try {
          const auto rec = geometry::construct_component_example(f, p, static_cast<std::uint64_t>(seed), kConstructBudget);
          const bool ok = geometry::verify_example(rec).passed();
          c.check(ok, "self-verification " + name);
          built += ok;
        } catch (const std::exception& e) {
          c.check(false, name + ": " + e.what());
        }
      }
    }
  }
  std::ostringstream os;
  os << built << "/" << pairs * kConstructSeeds << " constructions self-verify (" << pairs << " nonempty pairs x "
     << kConstructSeeds << " seeds, budget " << kConstructBudget << ", " << seconds_since(t0) << " s)";
  c.note(os.str());
  return c.finish(6);
}

// --- 7: annotations -----------------------------------------------------------------

bool criterion_7() {
  Criterion c("not reproducible at desk scale: recorded as annotations, not tested");
  const auto notes = classify::classification_annotations();
  c.check(notes.size() >= 2, "annotations attached to classification output");
  for (const auto& n : notes) c.note("annotation: " + n);
  c.note("annotation: the F_31 examples are not lifted to characteristic 0");
  return c.finish(7);
}

}  // namespace

int main() {
  std::vector<geometry::ExampleRecord> recs;
  int failed = 0;
  failed += !criterion_1();
  failed += !criterion_2();
  failed += !criterion_3();
  failed += !criterion_4();
  failed += !criterion_5(recs);
  failed += !criterion_6(recs);
  failed += !criterion_7();
  std::cout << (7 - failed) << "/7 criteria pass\n";
  return failed;
}
