#ifndef CUBICLAB_POLY_IDEAL_OPS_HPP
#define CUBICLAB_POLY_IDEAL_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclab/poly/groebner.hpp"

namespace cubiclab::poly {

// --- elimination and kernels -------------------------------------------------

/// Generators of I n k[keep]. The result lives in a ring on the kept
/// variables (same names, same relative order, grevlex).
inline Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& keep) {
  const Ring& r = *ideal.ring();
  std::vector<bool> kept(r.nvars(), false);
  for (auto k : keep) kept.at(k) = true;
  std::vector<std::string> names;
  std::vector<std::size_t> to_block(r.nvars());
  std::size_t nelim = 0;
  for (std::size_t i = 0; i < r.nvars(); ++i)
    if (!kept[i]) {
      to_block[i] = names.size();
      names.push_back(r.name(i));
      ++nelim;
    }
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < r.nvars(); ++i)
    if (kept[i]) {
      to_block[i] = names.size();
      names.push_back(r.name(i));
      kept_names.push_back(r.name(i));
    }
  auto block = std::make_shared<const Ring>(names, MonomialOrder::elimination(nelim), r.field());
  auto out_ring = std::make_shared<const Ring>(kept_names, MonomialOrder::grevlex(), r.field());

  Ideal moved(block);
  for (const auto& g : ideal.gens()) moved.add(g.remap(block, to_block));
  const auto gb = groebner(moved);

  std::vector<std::size_t> back(block->nvars(), block->nvars());  // eliminated vars map nowhere
  for (std::size_t i = 0; i < kept_names.size(); ++i) back[nelim + i] = i;
  Ideal out(out_ring);
  for (const auto& g : gb.basis()) {
    bool free_of_elim = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < nelim && free_of_elim; ++i)
        if (t.mono.exp[i]) free_of_elim = false;
    if (!free_of_elim) continue;
    out.add(g.remap(out_ring, back));
  }
  return out;
}

/// phi: k[source] -> k[target], x_i -> images[i].
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Poly> images;

  RingMap(RingPtr src, RingPtr tgt, std::vector<Poly> imgs)
      : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != source->nvars()) throw std::invalid_argument("RingMap: one image per source variable");
    for (const auto& p : images)
      if (!same_ring(p.ring(), target)) throw std::invalid_argument("RingMap: image outside the target ring");
  }

  Poly operator()(const Poly& f) const { return f.substitute(images); }
};

/// ker(phi) by eliminating the target variables from (x_i - phi(x_i)).
/// The result is in the source ring.
inline Ideal ring_map_kernel(const RingMap& phi) {
  const Ring& s = *phi.source;
  const Ring& t = *phi.target;
  if (s.nvars() + t.nvars() > kMaxVars) throw std::invalid_argument("ring_map_kernel: too many variables");
  std::vector<std::string> names = t.names();
  for (const auto& n : s.names()) {
    if (t.index_of(n)) throw std::invalid_argument("ring_map_kernel: source and target share a variable name");
    names.push_back(n);
  }
  auto joined = std::make_shared<const Ring>(names, MonomialOrder::elimination(t.nvars()), s.field());
  std::vector<std::size_t> tmap(t.nvars());
  for (std::size_t i = 0; i < t.nvars(); ++i) tmap[i] = i;
  Ideal graph(joined);
  for (std::size_t i = 0; i < s.nvars(); ++i)
    graph.add(Poly::variable(joined, t.nvars() + i) - phi.images[i].remap(joined, tmap));
  const auto gb = groebner(graph);

  std::vector<std::size_t> back(joined->nvars(), 0);
  for (std::size_t i = 0; i < s.nvars(); ++i) back[t.nvars() + i] = i;
  Ideal out(phi.source);
  for (const auto& g : gb.basis()) {
    bool pure = true;
    for (const auto& term : g.terms())
      for (std::size_t i = 0; i < t.nvars() && pure; ++i)
        if (term.mono.exp[i]) pure = false;
    if (pure) out.add(g.remap(phi.source, back));
  }
  return out;
}

/// I n J = (s I + (1 - s) J) n k[x].
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("intersect: ring mismatch");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const Ring& r = *a.ring();
  std::string s = "s";
  while (r.index_of(s)) s += "_";
  std::vector<std::string> names{s};
  for (const auto& n : r.names()) names.push_back(n);
  auto ext = std::make_shared<const Ring>(names, MonomialOrder::elimination(1), r.field());
  std::vector<std::size_t> shift(r.nvars());
  for (std::size_t i = 0; i < r.nvars(); ++i) shift[i] = i + 1;
  const Poly sv = Poly::variable(ext, 0);
  const Poly one_minus = Poly::constant(ext, 1) - sv;
  Ideal joint(ext);
  for (const auto& g : a.gens()) joint.add(sv * g.remap(ext, shift));
  for (const auto& g : b.gens()) joint.add(one_minus * g.remap(ext, shift));
  const auto gb = groebner(joint);

  std::vector<std::size_t> back(ext->nvars(), 0);
  for (std::size_t i = 0; i < r.nvars(); ++i) back[i + 1] = i;
  Ideal out(a.ring());
  for (const auto& g : gb.basis()) {
    bool free_of_s = true;
    for (const auto& t : g.terms())
      if (t.mono.exp[0]) free_of_s = false;
    if (free_of_s) out.add(g.remap(a.ring(), back));
  }
  return out;
}

// --- determinantal ideals ----------------------------------------------------

using PolyMatrix = std::vector<std::vector<Poly>>;

namespace detail {

inline Poly det_of(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][c] * det_of(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                   std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

}  // namespace detail

/// All k x k minors, zeros dropped and duplicates up to scalar removed.
inline Ideal minors_ideal(const PolyMatrix& m, std::size_t k) {
  if (m.empty() || m.front().empty()) throw std::invalid_argument("minors_ideal: empty matrix");
  const std::size_t rows = m.size(), cols = m.front().size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("minors_ideal: ragged matrix");
  if (k == 0 || k > std::min(rows, cols)) throw std::invalid_argument("minors_ideal: minor size out of range");
  std::vector<std::vector<std::size_t>> rsel, csel;
  std::vector<std::size_t> cur;
  detail::choose(rows, k, rsel, cur);
  detail::choose(cols, k, csel, cur);
  const RingPtr ring = m[0][0].ring();
  Ideal out(ring);
  std::vector<Poly> seen;
  for (const auto& rs : rsel) {
    for (const auto& cs : csel) {
      PolyMatrix sub;
      for (auto i : rs) {
        std::vector<Poly> row;
        for (auto j : cs) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      Poly d = detail::det_of(sub);
      if (d.is_zero()) continue;
      const Poly key = d.monic();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      out.add(std::move(d));
    }
  }
  return out;
}

// --- dimension and degree -----------------------------------------------------

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

using Series = std::vector<long long>;  // coefficients of t^0, t^1, ...

inline void add_into(Series& a, const Series& b, long long sign, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n of k[x] / (gens).
inline Series hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // A generator with two or more variables supplies the pivot variable.
  for (const auto& g : gens) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (g.exp[i]) {
        ++support;
        var = i;
      }
    if (support < 2) continue;
    // N(I) = N(I + (x)) + t N(I : x)
    const Monomial x = Monomial::variable(var);
    std::vector<Monomial> plus{x}, colon;
    for (const auto& h : gens) {
      if (!h.exp[var]) plus.push_back(h);
      colon.push_back(h.exp[var] ? h / x : h);
    }
    Series out = hilbert_numerator(std::move(plus));
    add_into(out, hilbert_numerator(std::move(colon)), 1, 1);
    return out;
  }
  // Pure powers of distinct variables: product of (1 - t^d).
  Series out{1};
  for (const auto& g : gens) {
    Series next = out;
    add_into(next, out, -1, g.deg);
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

struct DimensionDegree {
  int dimension;  // projective; -1 for the empty scheme
  long long degree;
};

/// Projective dimension and degree of V(I) for homogeneous I, read off the
/// Hilbert series of the leading-term ideal.
inline DimensionDegree dimension_degree(const GroebnerBasis& gb) {
  for (const auto& g : gb.basis())
    if (!g.is_homogeneous()) throw std::invalid_argument("dimension_degree: ideal must be homogeneous");
  auto num = detail::hilbert_numerator(gb.leading_monomials());
  while (!num.empty() && num.back() == 0) num.pop_back();
  const int n = static_cast<int>(gb.ring()->nvars());
  if (num.empty()) return {-1, 0};
  // Divide out (1 - t) while N(1) == 0.
  int k = 0;
  for (;;) {
    long long at_one = 0;
    for (auto c : num) at_one += c;
    if (at_one != 0) return {n - k - 1, at_one};
    detail::Series q(num.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      carry += num[i];
      q[i] = carry;  // N = (1 - t) Q, Q_i = sum_{j <= i} N_j
    }
    num = std::move(q);
    ++k;
  }
}

inline DimensionDegree dimension_degree(const Ideal& ideal) { return dimension_degree(groebner(ideal)); }

/// Projective dimension via maximal sets of variables independent modulo the
/// leading-term ideal.
inline int krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  const auto lms = detail::minimalize(gb.leading_monomials());
  int best = -1;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    const int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms)
      if (((m.mask & 0xffffu) & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best - 1;
}

inline int krull_dimension(const Ideal& ideal) { return krull_dimension(groebner(ideal)); }

inline long long hilbert_degree(const Ideal& ideal) { return dimension_degree(ideal).degree; }

// --- smoothness and random elements ------------------------------------------------

/// Jacobian criterion over the prime field: V(F, dF/dx_i) projectively empty.
inline bool is_projectively_smooth(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_projectively_smooth: zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("is_projectively_smooth: form must be homogeneous");
  Ideal jac(f.ring(), {f});
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) jac.add(f.derivative(i));
  return dimension_degree(jac).dimension == -1;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, degree);
  return out;
}

inline Poly random_form(const RingPtr& ring, unsigned degree, std::mt19937_64& rng) {
  const std::uint32_t p = ring->field().characteristic();
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), degree))
    terms.push_back({m, static_cast<std::uint32_t>(rng() % p)});
  return Poly(ring, std::move(terms));
}

/// sum_i g_i * (random form of degree d - deg g_i) over the homogeneous
/// generators of degree <= d.
inline Poly random_form_in_ideal(const Ideal& ideal, unsigned degree, std::mt19937_64& rng) {
  Poly acc(ideal.ring());
  bool any = false;
  for (const auto& g : ideal.gens()) {
    if (!g.is_homogeneous()) throw std::invalid_argument("random_form_in_ideal: generators must be homogeneous");
    const int dg = g.degree();
    if (dg > static_cast<int>(degree)) continue;
    any = true;
    acc += g * random_form(ideal.ring(), degree - static_cast<unsigned>(dg), rng);
  }
  if (!any) throw std::invalid_argument("random_form_in_ideal: no generator of low enough degree");
  return acc;
}

}  // namespace cubiclab::poly

#endif  // CUBICLAB_POLY_IDEAL_OPS_HPP
