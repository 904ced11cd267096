#ifndef CUBICLAB_POLY_GROEBNER_HPP
#define CUBICLAB_POLY_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cubiclab/poly/poly.hpp"

namespace cubiclab::poly {

enum class PairSelection { normal, random };

struct GroebnerOptions {
  PairSelection selection = PairSelection::normal;
  std::uint64_t seed = 0;  // used by PairSelection::random
};

/// Reduced Groebner basis: monic, no term of one element divisible by the
/// leading term of another, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().lead_monomial().deg == 0; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis_) out.push_back(g.lead_monomial());
    return out;
  }

  Ideal ideal() const { return Ideal(ring_, basis_); }

 private:
  RingPtr ring_;
  std::vector<Poly> basis_;
};

namespace detail {

inline const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& reducers) {
  for (const Poly* g : reducers)
    if (g->lead_monomial().divides(m)) return g;
  return nullptr;
}

/// Full reduction of f by the given polynomials.
inline Poly reduce_full(Poly f, const std::vector<const Poly*>& reducers) {
  const RingPtr ring = f.ring();
  const auto& field = ring->field();
  std::vector<Term> done;
  while (!f.is_zero()) {
    const Term lead = f.terms().front();
    if (const Poly* g = find_reducer(lead.mono, reducers)) {
      const auto c = field.mul(lead.coef, field.inv(g->lead_coefficient()));
      f = f.minus_term_times(c, lead.mono / g->lead_monomial(), *g);
    } else {
      done.push_back(lead);
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      f = Poly(ring, std::move(rest));
    }
  }
  return Poly(ring, std::move(done));
}

/// Reduce only until the leading term is irreducible.
inline Poly reduce_lead(Poly f, const std::vector<const Poly*>& reducers) {
  const auto& field = f.ring()->field();
  while (!f.is_zero()) {
    const Poly* g = find_reducer(f.lead_monomial(), reducers);
    if (!g) break;
    const auto c = field.mul(f.lead_coefficient(), field.inv(g->lead_coefficient()));
    f = f.minus_term_times(c, f.lead_monomial() / g->lead_monomial(), *g);
  }
  return f;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto& field = f.ring()->field();
  const Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  const Poly a = f.times_term(l / f.lead_monomial(), field.inv(f.lead_coefficient()));
  return a.minus_term_times(field.inv(g.lead_coefficient()), l / g.lead_monomial(), g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Ideal& ideal, const GroebnerOptions& opts)
      : ring_(ideal.ring()), opts_(opts), rng_(opts.seed) {
    for (const auto& g : ideal.gens()) input_.push_back(g.monic());
  }

  GroebnerBasis run() {
    for (auto& f : input_) {
      Poly h = reduce_full(f, active_reducers());
      if (!h.is_zero()) insert(h.monic());
    }
    while (!pairs_.empty()) {
      const Pair p = take_pair();
      Poly h = reduce_lead(s_polynomial(polys_[p.i], polys_[p.j]), active_reducers());
      if (h.is_zero()) continue;
      insert(h.monic());
    }
    return finish();
  }

 private:
  std::vector<const Poly*> active_reducers() const {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  Pair take_pair() {
    std::size_t best = 0;
    if (opts_.selection == PairSelection::random) {
      best = std::uniform_int_distribution<std::size_t>(0, pairs_.size() - 1)(rng_);
    } else {
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const int c = ring_->compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i)))
          best = k;
      }
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Gebauer-Moeller update for the new element h.
  void insert(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = polys_[hi].lead_monomial();

    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) fresh.push_back({k, hi, Monomial::lcm(polys_[k].lead_monomial(), lh)});

    // Chain criterion among the new pairs: drop (k, h) when some other new
    // pair's lcm properly divides it; equal lcms keep the first occurrence.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a))
          keep[a] = false;
      }
    }
    // Product criterion: coprime leading terms need no S-polynomial. The
    // pair still served to suppress others above.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (polys_[fresh[a].i].lead_monomial().coprime(lh)) continue;
      kept.push_back(fresh[a]);
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = Monomial::lcm(polys_[p.i].lead_monomial(), lh);
      const Monomial lj = Monomial::lcm(polys_[p.j].lead_monomial(), lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : kept) pairs_.push_back(p);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].lead_monomial())) active_[k] = false;
  }

  GroebnerBasis finish() {
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    // Inter-reduce; leading terms stay put because the set is minimal.
    std::vector<Poly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      reduced.push_back(reduce_full(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Poly& a, const Poly& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

  RingPtr ring_;
  GroebnerOptions opts_;
  std::mt19937_64 rng_;
  std::vector<Poly> input_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria.
inline GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts = {}) {
  return detail::Buchberger(ideal, opts).run();
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) throw std::invalid_argument("normal_form: ring mismatch");
  std::vector<const Poly*> reducers;
  for (const auto& g : gb.basis()) reducers.push_back(&g);
  return detail::reduce_full(f, reducers);
}

inline bool ideal_member(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

inline bool ideal_member(const Poly& f, const Ideal& ideal) { return ideal_member(f, groebner(ideal)); }

/// Every S-polynomial of the basis reduces to zero.
inline bool verify_groebner(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(detail::s_polynomial(b[i], b[j]), gb).is_zero()) return false;
  return true;
}

/// Reducedness check: monic and no term divisible by another leading term.
inline bool is_reduced(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].lead_coefficient() != 1) return false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[i].terms())
        if (b[j].lead_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

/// Equality of ideals via membership both ways.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  const auto ga = groebner(a);
  const auto gb = groebner(b);
  for (const auto& f : b.gens())
    if (!ideal_member(f, ga)) return false;
  for (const auto& f : a.gens())
    if (!ideal_member(f, gb)) return false;
  return true;
}

}  // namespace cubiclab::poly

#endif  // CUBICLAB_POLY_GROEBNER_HPP
