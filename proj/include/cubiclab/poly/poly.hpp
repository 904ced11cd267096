#ifndef CUBICLAB_POLY_POLY_HPP
#define CUBICLAB_POLY_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubiclab/poly/ring.hpp"

namespace cubiclab::poly {

struct Term {
  Monomial mono;
  std::uint32_t coef;
};

/// Sparse polynomial; terms in strictly descending monomial order, no zero
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Takes arbitrary terms, sorts and combines them.
  Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Poly constant(RingPtr ring, long long c) {
    const auto v = ring->field().reduce(c);
    Poly p(std::move(ring));
    if (v) p.terms_.push_back({Monomial{}, v});
    return p;
  }

  static Poly variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("Poly::variable: index out of range");
    Poly p(std::move(ring));
    p.terms_.push_back({Monomial::variable(i), 1});
    return p;
  }

  static Poly term(RingPtr ring, const Monomial& m, long long c) {
    const auto v = ring->field().reduce(c);
    Poly p(std::move(ring));
    if (v) p.terms_.push_back({m, v});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& lead_monomial() const { return nonzero().terms_.front().mono; }
  std::uint32_t lead_coefficient() const { return nonzero().terms_.front().coef; }

  /// Total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.deg);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.deg != terms_.front().mono.deg) return false;
    return true;
  }

  std::uint32_t coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return 0;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = field().neg(t.coef);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    const auto& f = a.field();
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, f.mul(s.coef, t.coef)});
    return Poly(a.ring_, std::move(prod));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(std::uint32_t c) const {
    c %= field().characteristic();
    if (c == 0) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = field().mul(t.coef, c);
    return r;
  }

  Poly times_term(const Monomial& m, std::uint32_t c) const {
    if (c == 0) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coef = field().mul(t.coef, c);
    }
    return r;  // multiplying by a monomial preserves the order
  }

  /// this - c * m * g, in one merge pass.
  Poly minus_term_times(std::uint32_t c, const Monomial& m, const Poly& g) const {
    check(*this, g);
    const auto& f = field();
    const std::uint32_t nc = f.neg(c);
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      const Monomial gm = g.terms_[j].mono * m;
      const int cmp = i == terms_.size() ? -1 : ring_->compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, f.mul(nc, g.terms_[j++].coef)});
      } else {
        const auto v = f.add(terms_[i++].coef, f.mul(nc, g.terms_[j++].coef));
        if (v) r.terms_.push_back({gm, v});
      }
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead_coefficient()));
  }

  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("Poly::evaluate: wrong point length");
    const auto& f = field();
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
      std::uint32_t v = t.coef;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.mono.exp[i]) v = f.mul(v, f.pow(point[i] % f.characteristic(), t.mono.exp[i]));
      acc = f.add(acc, v);
    }
    return acc;
  }

  Poly derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw std::out_of_range("Poly::derivative: index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const unsigned e = t.mono.exp[var];
      if (e == 0) continue;
      const auto c = field().mul(t.coef, field().reduce(e));
      if (c == 0) continue;
      Monomial m = t.mono;
      m.exp[var] = static_cast<std::uint8_t>(e - 1);
      m.refresh();
      out.push_back({m, c});
    }
    return Poly(ring_, std::move(out));
  }

  /// Image under x_i -> images[i]; images live in a common ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw std::invalid_argument("Poly::substitute: wrong image count");
    const RingPtr& target = images.front().ring();
    Poly acc(target);
    for (const auto& t : terms_) {
      Poly term = Poly::constant(target, t.coef);
      for (std::size_t i = 0; i < images.size(); ++i)
        for (unsigned e = 0; e < t.mono.exp[i]; ++e) term *= images[i];
      acc += term;
    }
    return acc;
  }

  /// Same polynomial in another ring; var_map[i] is the index in `target` of
  /// variable i.
  Poly remap(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->nvars()) throw std::invalid_argument("Poly::remap: wrong map length");
    if (!(target->field() == ring_->field())) throw std::invalid_argument("Poly::remap: field mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < var_map.size(); ++i) {
        if (!t.mono.exp[i]) continue;
        if (var_map[i] >= target->nvars()) throw std::invalid_argument("Poly::remap: variable dropped");
        m.exp[var_map[i]] = t.mono.exp[i];
      }
      m.refresh();
      out.push_back({m, t.coef});
    }
    return Poly(target, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

 private:
  const PrimeField& field() const { return ring_->field(); }

  const Poly& nonzero() const {
    if (terms_.empty()) throw std::domain_error("Poly: zero polynomial has no leading term");
    return *this;
  }

  static void check(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring_, b.ring_)) throw std::invalid_argument("Poly: ring mismatch");
  }

  static Poly combine(const Poly& a, const Poly& b, bool subtract) {
    check(a, b);
    const auto& f = a.field();
    Poly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = a.ring_->compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coef = f.neg(t.coef);
        r.terms_.push_back(t);
      } else {
        const auto v = subtract ? f.sub(a.terms_[i].coef, b.terms_[j].coef)
                                : f.add(a.terms_[i].coef, b.terms_[j].coef);
        if (v) r.terms_.push_back({a.terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    const Ring& r = *ring_;
    for (auto& t : terms_) t.coef %= r.field().characteristic();
    std::sort(terms_.begin(), terms_.end(),
              [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef = r.field().add(out.back().coef, t.coef);
      } else {
        out.push_back(t);
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Generators in one ring. An empty list is the zero ideal.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> gens = {}) : ring_(std::move(ring)) {
    for (auto& g : gens) add(std::move(g));
  }

  void add(Poly g) {
    if (!same_ring(ring_, g.ring())) throw std::invalid_argument("Ideal: generator from another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    Ideal r = a;
    for (const auto& g : b.gens_) r.add(g);
    return r;
  }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

}  // namespace cubiclab::poly

#endif  // CUBICLAB_POLY_POLY_HPP
