#pragma once

// Exact arithmetic in finite commutative rings with identity.
//
// A ring is either Z/n or a quotient extension S[x]/(f) of an already built
// ring S by a monic polynomial f. Towers nest to any depth.
//
// Elements are carried as an index Elem in [0, |R|). For Z/n the index is the
// least nonnegative residue. For S[x]/(f) with deg f = d the index of
// c_0 + c_1 x + ... + c_{d-1} x^{d-1} is sum_k c_k |S|^k, so base elements embed
// with the same index and enumeration order is lexicographic on the coefficient
// vector read from the leading coefficient down (base order recursively).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ringcodes/error.hpp"

namespace ringcodes {

using Elem = std::uint32_t;

// Cap on exhaustive enumeration work (candidate vectors, codewords).
struct Budget {
  std::size_t max_candidates = 10'000'000;
};

// Saturating |base|^exp, used to compare enumeration sizes against a budget.
inline std::size_t checked_power(std::size_t base, std::size_t exp) {
  constexpr std::size_t cap = std::size_t{1} << 62;
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

namespace detail {

// Rings up to this size carry precomputed operation tables.
inline constexpr std::uint64_t kTableLimit = 1024;

struct RingNode {
  std::uint64_t cardinality = 0;
  std::uint64_t characteristic = 0;
  std::uint64_t residue_modulus = 0;  // n for Z/n, 0 for an extension
  std::shared_ptr<const RingNode> base;
  std::vector<Elem> modulus;  // f, low to high, leading coefficient included
  std::string variable;
  std::size_t depth = 0;

  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> neg_table;
  std::vector<Elem> inv_table;  // cardinality marks "no inverse"

  std::size_t degree() const { return modulus.empty() ? 0 : modulus.size() - 1; }
};

inline void decode(const RingNode& r, Elem a, std::span<Elem> out) {
  const std::uint64_t q = r.base->cardinality;
  std::uint64_t v = a;
  for (auto& c : out) {
    c = static_cast<Elem>(v % q);
    v /= q;
  }
}

inline Elem encode(const RingNode& r, std::span<const Elem> coords) {
  const std::uint64_t q = r.base->cardinality;
  std::uint64_t v = 0;
  for (std::size_t k = coords.size(); k-- > 0;) v = v * q + coords[k];
  return static_cast<Elem>(v);
}

inline Elem mul(const RingNode& r, Elem a, Elem b);

inline Elem add(const RingNode& r, Elem a, Elem b) {
  if (r.residue_modulus != 0) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= r.residue_modulus ? s - r.residue_modulus : s);
  }
  if (!r.add_table.empty()) return r.add_table[std::uint64_t{a} * r.cardinality + b];
  const RingNode& base = *r.base;
  const std::uint64_t q = base.cardinality;
  std::uint64_t result = 0, place = 1, x = a, y = b;
  for (std::size_t k = 0; k < r.degree(); ++k) {
    result += std::uint64_t{add(base, static_cast<Elem>(x % q), static_cast<Elem>(y % q))} * place;
    x /= q;
    y /= q;
    place *= q;
  }
  return static_cast<Elem>(result);
}

inline Elem neg(const RingNode& r, Elem a) {
  if (r.residue_modulus != 0) return a == 0 ? 0 : static_cast<Elem>(r.residue_modulus - a);
  if (!r.neg_table.empty()) return r.neg_table[a];
  const RingNode& base = *r.base;
  const std::uint64_t q = base.cardinality;
  std::uint64_t result = 0, place = 1, x = a;
  for (std::size_t k = 0; k < r.degree(); ++k) {
    result += std::uint64_t{neg(base, static_cast<Elem>(x % q))} * place;
    x /= q;
    place *= q;
  }
  return static_cast<Elem>(result);
}

// Reduces an arbitrary coefficient list (low to high) modulo the monic modulus.
inline Elem reduce(const RingNode& r, std::vector<Elem> poly) {
  const RingNode& base = *r.base;
  const std::size_t d = r.degree();
  for (std::size_t k = poly.size(); k-- > d;) {
    const Elem t = poly[k];
    if (t == 0) continue;
    // x^k = x^{k-d} * x^d and x^d = -(f_0 + ... + f_{d-1} x^{d-1})
    for (std::size_t j = 0; j < d; ++j) {
      poly[k - d + j] = add(base, poly[k - d + j], neg(base, mul(base, t, r.modulus[j])));
    }
    poly[k] = 0;
  }
  poly.resize(d, 0);
  return encode(r, poly);
}

inline Elem mul(const RingNode& r, Elem a, Elem b) {
  if (r.residue_modulus != 0) {
    return static_cast<Elem>((std::uint64_t{a} * b) % r.residue_modulus);
  }
  if (!r.mul_table.empty()) return r.mul_table[std::uint64_t{a} * r.cardinality + b];
  const RingNode& base = *r.base;
  const std::size_t d = r.degree();
  std::vector<Elem> x(d), y(d), prod(2 * d - 1, 0);
  decode(r, a, x);
  decode(r, b, y);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      prod[i + j] = add(base, prod[i + j], mul(base, x[i], y[j]));
    }
  }
  return reduce(r, std::move(prod));
}

inline Elem from_int(const RingNode& r, std::int64_t k) {
  if (r.residue_modulus != 0) {
    const auto n = static_cast<std::int64_t>(r.residue_modulus);
    return static_cast<Elem>(((k % n) + n) % n);
  }
  return from_int(*r.base, k);  // constants embed with their base index
}

inline bool structurally_equal(const RingNode& a, const RingNode& b) {
  if (&a == &b) return true;
  if (a.residue_modulus != b.residue_modulus || a.cardinality != b.cardinality) return false;
  if (a.residue_modulus != 0) return true;
  return a.variable == b.variable && a.modulus == b.modulus && structurally_equal(*a.base, *b.base);
}

inline std::string element_to_string(const RingNode& r, Elem a);

// Renders c_0 + c_1 v + ... as "c_k*v^k+...+c_0", leading term first.
inline std::string polynomial_to_string(const RingNode& base, std::span<const Elem> coeffs,
                                        const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Elem c = coeffs[k];
    if (c == 0) continue;
    std::string term;
    const std::string cs = element_to_string(base, c);
    if (k == 0) {
      term = cs;
    } else {
      std::string mono = var;
      if (k > 1) mono += "^" + std::to_string(k);
      if (c == 1)
        term = mono;
      else if (cs.find('+') != std::string::npos)
        term = "(" + cs + ")*" + mono;
      else
        term = cs + "*" + mono;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

inline std::string element_to_string(const RingNode& r, Elem a) {
  if (r.residue_modulus != 0) return std::to_string(a);
  std::vector<Elem> coords(r.degree());
  decode(r, a, coords);
  return polynomial_to_string(*r.base, coords, r.variable);
}

inline bool variable_in_use(const RingNode& r, const std::string& name) {
  for (const RingNode* p = &r; p != nullptr && p->residue_modulus == 0; p = p->base.get()) {
    if (p->variable == name) return true;
  }
  return false;
}

}  // namespace detail

class Ring {
 public:
  // Z/n, n >= 2.
  static Ring integers_mod(std::int64_t n) {
    if (n < 2) throw InvalidParameter("Z/n requires n >= 2, got " + std::to_string(n));
    if (static_cast<std::uint64_t>(n) > 0xFFFFFFFFull) throw InvalidParameter("Z/n requires n < 2^32");
    auto node = std::make_shared<detail::RingNode>();
    node->cardinality = static_cast<std::uint64_t>(n);
    node->characteristic = node->cardinality;
    node->residue_modulus = node->cardinality;
    return Ring(std::move(node));
  }

  // base[var]/(f) where f lists coefficients low to high, leading one included.
  static Ring quotient(const Ring& base, std::vector<Elem> f, std::string var = {}) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw InvalidParameter("modulus must have degree >= 1");
    if (f.back() != base.one()) throw InvalidParameter("modulus must be monic");
    for (Elem c : f) {
      if (c >= base.cardinality()) throw InvalidParameter("modulus coefficient outside the base ring");
    }
    const std::size_t d = f.size() - 1;
    const std::size_t card = checked_power(base.cardinality(), d);
    if (card > 0xFFFFFFFFull) throw InvalidParameter("extension ring has more than 2^32 - 1 elements");
    if (var.empty()) {
      for (const char* candidate : {"x", "y", "z", "w", "v", "t", "s"}) {
        if (!detail::variable_in_use(*base.node_, candidate)) {
          var = candidate;
          break;
        }
      }
      if (var.empty()) var = "x" + std::to_string(base.depth() + 1);
    } else if (detail::variable_in_use(*base.node_, var)) {
      throw InvalidParameter("variable '" + var + "' is already used by the base ring");
    }

    auto node = std::make_shared<detail::RingNode>();
    node->cardinality = card;
    node->characteristic = base.characteristic();
    node->base = base.node_;
    node->modulus = std::move(f);
    node->variable = std::move(var);
    node->depth = base.depth() + 1;
    if (card <= detail::kTableLimit) build_tables(*node);
    return Ring(std::move(node));
  }

  std::uint64_t cardinality() const noexcept { return node_->cardinality; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(node_->cardinality); }
  std::uint64_t characteristic() const noexcept { return node_->characteristic; }
  bool is_residue() const noexcept { return node_->residue_modulus != 0; }
  std::uint64_t residue_modulus() const noexcept { return node_->residue_modulus; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t degree() const noexcept { return node_->degree(); }
  const std::string& variable() const noexcept { return node_->variable; }
  std::span<const Elem> modulus() const noexcept { return node_->modulus; }

  Ring base() const {
    if (is_residue()) throw InvalidParameter("Z/n has no base ring");
    return Ring(node_->base);
  }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t k) const { return detail::from_int(*node_, k); }

  // Class of the adjoined variable.
  Elem generator() const {
    if (is_residue()) throw InvalidParameter("Z/n has no adjoined variable");
    return detail::reduce(*node_, {0, 1});
  }

  bool contains(Elem a) const noexcept { return a < node_->cardinality; }

  Elem add(Elem a, Elem b) const { return detail::add(*node_, a, b); }
  Elem neg(Elem a) const { return detail::neg(*node_, a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return detail::mul(*node_, a, b); }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = one(), base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  bool is_unit(Elem a) const {
    if (is_residue()) return std::gcd(std::uint64_t{a}, node_->residue_modulus) == 1;
    return inverse(a).has_value();
  }

  std::optional<Elem> inverse(Elem a) const {
    if (is_residue()) {
      if (std::gcd(std::uint64_t{a}, node_->residue_modulus) != 1) return std::nullopt;
      // extended Euclid on signed 64-bit values
      std::int64_t r0 = static_cast<std::int64_t>(node_->residue_modulus), r1 = a;
      std::int64_t t0 = 0, t1 = 1;
      while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
      }
      return from_int(t0);
    }
    if (!node_->inv_table.empty()) {
      const Elem b = node_->inv_table[a];
      if (b == node_->cardinality) return std::nullopt;
      return b;
    }
    for (std::uint64_t b = 1; b < node_->cardinality; ++b) {
      if (mul(a, static_cast<Elem>(b)) == one()) return static_cast<Elem>(b);
    }
    return std::nullopt;
  }

  // 0 counts as a zero divisor.
  bool is_zero_divisor(Elem a) const {
    if (a == 0) return true;
    if (is_residue()) return std::gcd(std::uint64_t{a}, node_->residue_modulus) != 1;
    for (std::uint64_t b = 1; b < node_->cardinality; ++b) {
      if (mul(a, static_cast<Elem>(b)) == 0) return true;
    }
    return false;
  }

  // Coefficients c_0..c_{d-1} over the base ring.
  std::vector<Elem> coordinates(Elem a) const {
    if (is_residue()) return {a};
    std::vector<Elem> coords(degree());
    detail::decode(*node_, a, coords);
    return coords;
  }

  Elem from_coordinates(std::span<const Elem> coords) const {
    if (is_residue()) {
      if (coords.size() != 1 || coords[0] >= node_->cardinality) throw InvalidParameter("bad residue coordinates");
      return coords[0];
    }
    if (coords.size() != degree()) throw InvalidParameter("coordinate count must equal the modulus degree");
    for (Elem c : coords) {
      if (c >= node_->base->cardinality) throw InvalidParameter("coordinate outside the base ring");
    }
    return detail::encode(*node_, coords);
  }

  std::string to_string(Elem a) const { return detail::element_to_string(*node_, a); }

  // Description text: "Z/9" or "Z/9[x]/(x^2+x+2)".
  std::string describe() const {
    if (is_residue()) return "Z/" + std::to_string(node_->residue_modulus);
    return base().describe() + "[" + node_->variable + "]/(" +
           detail::polynomial_to_string(*node_->base, node_->modulus, node_->variable) + ")";
  }

  // Walks down the tower to the level whose adjoined variable is `name`.
  std::optional<Ring> level_with_variable(const std::string& name) const {
    for (Ring r = *this; !r.is_residue(); r = r.base()) {
      if (r.variable() == name) return r;
    }
    return std::nullopt;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return detail::structurally_equal(*a.node_, *b.node_);
  }

 private:
  explicit Ring(std::shared_ptr<const detail::RingNode> node) : node_(std::move(node)) {}

  static void build_tables(detail::RingNode& node) {
    const std::uint64_t n = node.cardinality;
    std::vector<Elem> neg_table(n), add_table(n * n), mul_table(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
      neg_table[a] = detail::neg(node, static_cast<Elem>(a));
      for (std::uint64_t b = 0; b < n; ++b) {
        add_table[a * n + b] = detail::add(node, static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table[a * n + b] = detail::mul(node, static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
    std::vector<Elem> inv_table(n, static_cast<Elem>(n));
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        if (mul_table[a * n + b] == 1) {
          inv_table[a] = static_cast<Elem>(b);
          break;
        }
      }
    }
    node.neg_table = std::move(neg_table);
    node.add_table = std::move(add_table);
    node.mul_table = std::move(mul_table);
    node.inv_table = std::move(inv_table);
  }

  std::shared_ptr<const detail::RingNode> node_;
};

// An element together with the ring that owns it.
class RingElement {
 public:
  RingElement(Ring ring, Elem value) : ring_(std::move(ring)), value_(value) {
    if (!ring_.contains(value_)) throw InvalidParameter("element index outside the ring");
  }

  const Ring& ring() const noexcept { return ring_; }
  Elem value() const noexcept { return value_; }
  std::string to_string() const { return ring_.to_string(value_); }

  bool is_zero() const noexcept { return value_ == 0; }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring_, a.ring_.add(a.value_, b.value_)};
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring_, a.ring_.sub(a.value_, b.value_)};
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    same_ring(a, b);
    return {a.ring_, a.ring_.mul(a.value_, b.value_)};
  }
  friend RingElement operator-(const RingElement& a) { return {a.ring_, a.ring_.neg(a.value_)}; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.value_ == b.value_ && a.ring_ == b.ring_;
  }

 private:
  static void same_ring(const RingElement& a, const RingElement& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
  }

  Ring ring_;
  Elem value_;
};

inline Ring make_integer_residue_ring(std::int64_t n) { return Ring::integers_mod(n); }

// f is given low to high with its leading coefficient.
inline Ring make_quotient_extension(const Ring& base, const std::vector<RingElement>& f, std::string var = {}) {
  std::vector<Elem> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f) {
    if (!(c.ring() == base)) throw RingMismatch("modulus coefficients must lie in the base ring");
    coeffs.push_back(c.value());
  }
  return Ring::quotient(base, std::move(coeffs), std::move(var));
}

inline RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
inline RingElement neg(const RingElement& a) { return -a; }

inline bool is_unit(const RingElement& a) { return a.ring().is_unit(a.value()); }
inline bool is_zero_divisor(const RingElement& a) { return a.ring().is_zero_divisor(a.value()); }

inline RingElement invert(const RingElement& a) {
  const auto inv = a.ring().inverse(a.value());
  if (!inv) throw NotInvertible(a.to_string() + " is not a unit in " + a.ring().describe());
  return {a.ring(), *inv};
}

inline std::vector<RingElement> enumerate_elements(const Ring& ring) {
  std::vector<RingElement> out;
  out.reserve(ring.size());
  for (std::uint64_t a = 0; a < ring.cardinality(); ++a) out.emplace_back(ring, static_cast<Elem>(a));
  return out;
}

// Smallest u in enumeration order with u^2 = -1.
inline std::optional<RingElement> find_square_root_of_minus_one(const Ring& ring) {
  const Elem minus_one = ring.neg(ring.one());
  for (std::uint64_t a = 0; a < ring.cardinality(); ++a) {
    const auto u = static_cast<Elem>(a);
    if (ring.mul(u, u) == minus_one) return RingElement(ring, u);
  }
  return std::nullopt;
}

}  // namespace ringcodes
