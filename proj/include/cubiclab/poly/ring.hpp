#ifndef CUBICLAB_POLY_RING_HPP
#define CUBICLAB_POLY_RING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubiclab::poly {

inline constexpr std::size_t kMaxVars = 16;

/// Arithmetic in Z/p for a prime p < 2^31; residues kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 31) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: characteristic must be a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: zero has no inverse");
    return pow(a, p_ - 2);
  }

  /// Representative in (-p/2, p/2].
  long long signed_value(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;
  std::uint32_t mask = 0;  // bit i: exp[i] >= 1, bit 16 + i: exp[i] >= 2

  static Monomial from_exponents(const std::vector<unsigned>& e) {
    if (e.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 255) throw std::overflow_error("Monomial: exponent above 255");
      m.exp[i] = static_cast<std::uint8_t>(e[i]);
    }
    m.refresh();
    return m;
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exp.at(i) = static_cast<std::uint8_t>(power);
    m.refresh();
    return m;
  }

  void refresh() {
    deg = 0;
    mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      deg = static_cast<std::uint16_t>(deg + exp[i]);
      if (exp[i] >= 1) mask |= 1u << i;
      if (exp[i] >= 2) mask |= 1u << (16 + i);
    }
  }

  bool divides(const Monomial& o) const {
    if (mask & ~o.mask) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const {
    return ((mask & o.mask) & 0xffffu) == 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(exp[i]) + o.exp[i];
      if (s > 255) throw std::overflow_error("Monomial: exponent above 255");
      r.exp[i] = static_cast<std::uint8_t>(s);
    }
    r.refresh();
    return r;
  }

  /// Quotient; caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
    r.refresh();
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.refresh();
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
    r.refresh();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

enum class OrderKind { grevlex, lex, block };

/// block: the first `block` variables form the eliminated block, which
/// dominates; grevlex inside each block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::block, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
       PrimeField field = PrimeField(31))
      : names_(std::move(names)), order_(order), field_(field) {
    if (names_.empty() || names_.size() > kMaxVars)
      throw std::invalid_argument("Ring: between 1 and 16 variables supported");
    if (order_.kind == OrderKind::block && order_.block > names_.size())
      throw std::invalid_argument("Ring: elimination block larger than the variable set");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("Ring: duplicate variable " + names_[i]);
  }

  /// Variables prefix_0 .. prefix_{n-1}.
  static std::shared_ptr<const Ring> indexed(const std::string& prefix, std::size_t n,
                                             MonomialOrder order = MonomialOrder::grevlex(),
                                             std::uint32_t p = 31) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + "_" + std::to_string(i));
    return std::make_shared<const Ring>(std::move(names), order, PrimeField(p));
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const { return order_; }
  const PrimeField& field() const { return field_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case OrderKind::grevlex: return grevlex(a, b, 0, kMaxVars);
      case OrderKind::block: {
        const int c = grevlex(a, b, 0, order_.block);
        return c != 0 ? c : grevlex(a, b, order_.block, kMaxVars);
      }
    }
    return 0;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_ && a.field_ == b.field_;
  }

 private:
  static int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  std::vector<std::string> names_;
  MonomialOrder order_;
  PrimeField field_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace cubiclab::poly

#endif  // CUBICLAB_POLY_RING_HPP
