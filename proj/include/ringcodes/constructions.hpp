#pragma once

// Certified special matrices. Every constructor checks its ring hypotheses,
// computes A A^t and the row-code distances delta_i, and compares them with the
// values the construction promises. It returns only fully verified objects.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringcodes/code.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/mpc.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

struct CertifiedMatrix {
  Matrix matrix;
  GramShape gram;
  std::vector<std::size_t> deltas;
  std::vector<std::string> hypotheses;
};

namespace detail {

// Checked hypotheses are logged by id: 2-not-zero-divisor, 2-unit,
// u-squared-minus-one, u-not-zero-divisor.
inline void require(bool ok, const std::string& hypothesis, const std::string& what) {
  if (!ok) throw HypothesisViolation(hypothesis, what);
}

inline void require_two_not_zero_divisor(const Ring& r, std::vector<std::string>& log) {
  require(!r.is_zero_divisor(r.from_int(2)), "2-not-zero-divisor", "2 is a zero divisor in " + r.describe());
  log.emplace_back("2-not-zero-divisor");
}

inline void require_two_unit(const Ring& r, std::vector<std::string>& log) {
  require(r.is_unit(r.from_int(2)), "2-unit", "2 is not a unit in " + r.describe());
  log.emplace_back("2-unit");
}

inline void require_square_root_of_minus_one(const Ring& r, Elem u, std::vector<std::string>& log) {
  require(r.mul(u, u) == r.neg(r.one()), "u-squared-minus-one",
          "u^2 = " + r.to_string(r.mul(u, u)) + " != -1 for u = " + r.to_string(u) + " in " + r.describe());
  log.emplace_back("u-squared-minus-one");
}

inline Elem pick_u(const Ring& r, const std::optional<RingElement>& u) {
  if (u) {
    if (!(u->ring() == r)) throw RingMismatch("u must lie in the construction ring");
    return u->value();
  }
  const auto found = find_square_root_of_minus_one(r);
  require(found.has_value(), "u-squared-minus-one", "-1 is not a square in " + r.describe());
  return found->value();
}

inline CertifiedMatrix certify(Matrix a, GramShape expected_gram, std::vector<std::size_t> expected_deltas,
                               std::vector<std::string> hypotheses, const Budget& budget) {
  GramShape gram = classify_gram(a);
  if (!(gram == expected_gram)) throw InconsistentInput("computed A*A^t does not match the construction");
  std::vector<std::size_t> deltas;
  for (const auto& c : row_codes(a, budget)) deltas.push_back(min_distance(c, budget));
  if (deltas != expected_deltas) throw InconsistentInput("computed row-code distances do not match the construction");
  return {std::move(a), std::move(gram), std::move(deltas), std::move(hypotheses)};
}

}  // namespace detail

// [[1, u, 1], [-1, 0, 1]]: A A^t = diag(2 + u^2, 2), deltas (3, 2).
// Needs 2 and u to be non-zero-divisors. u defaults to 1.
inline CertifiedMatrix diag1_matrix(const Ring& r, std::optional<RingElement> u_in = {}, const Budget& budget = {}) {
  const Elem u = u_in ? detail::pick_u(r, u_in) : r.one();
  std::vector<std::string> log;
  detail::require_two_not_zero_divisor(r, log);
  detail::require(!r.is_zero_divisor(u), "u-not-zero-divisor",
                  "u = " + r.to_string(u) + " is a zero divisor in " + r.describe());
  log.emplace_back("u-not-zero-divisor");
  const Elem one = r.one(), minus_one = r.neg(one), two = r.from_int(2);
  Matrix a(r, 2, 3, {one, u, one, minus_one, 0, one});
  return detail::certify(std::move(a), {GramKind::Diagonal, {r.add(two, r.mul(u, u)), two}}, {3, 2}, std::move(log),
                         budget);
}

// [[1, 0, u], [0, 1, u]] with u^2 = -1: A A^t = adiag(-1, -1), deltas (2, 2).
inline CertifiedMatrix adiag1_matrix_a(const Ring& r, std::optional<RingElement> u_in = {}, const Budget& budget = {}) {
  const Elem u = detail::pick_u(r, u_in);
  std::vector<std::string> log;
  detail::require_square_root_of_minus_one(r, u, log);
  const Elem one = r.one(), minus_one = r.neg(one);
  Matrix a(r, 2, 3, {one, 0, u, 0, one, u});
  return detail::certify(std::move(a), {GramKind::AntiDiagonal, {minus_one, minus_one}}, {2, 2}, std::move(log),
                         budget);
}

// [[1, u, 0, 1, u], [u, 1, u, 0, 1]] with u^2 = -1 and 2 not a zero divisor:
// B B^t = adiag(3u, 3u), deltas (4, 3).
inline CertifiedMatrix adiag1_matrix_b(const Ring& r, std::optional<RingElement> u_in = {}, const Budget& budget = {}) {
  const Elem u = detail::pick_u(r, u_in);
  std::vector<std::string> log;
  detail::require_square_root_of_minus_one(r, u, log);
  detail::require_two_not_zero_divisor(r, log);
  const Elem one = r.one(), three_u = r.mul(r.from_int(3), u);
  Matrix b(r, 2, 5, {one, u, 0, one, u, u, one, u, 0, one});
  return detail::certify(std::move(b), {GramKind::AntiDiagonal, {three_u, three_u}}, {4, 3}, std::move(log), budget);
}

// [[1, u], [u, 1]] with u^2 = -1 and 2 a unit: A A^t = adiag(2u, 2u), deltas (2, 1).
inline CertifiedMatrix adiag3_matrix(const Ring& r, std::optional<RingElement> u_in = {}, const Budget& budget = {}) {
  std::vector<std::string> log;
  detail::require_two_unit(r, log);
  const Elem u = detail::pick_u(r, u_in);
  detail::require_square_root_of_minus_one(r, u, log);
  const Elem one = r.one(), two_u = r.mul(r.from_int(2), u);
  Matrix a(r, 2, 2, {one, u, u, one});
  return detail::certify(std::move(a), {GramKind::AntiDiagonal, {two_u, two_u}}, {2, 1}, std::move(log), budget);
}

// s x s matrix with ones on the diagonal and u on the anti-diagonal, except the
// middle row of odd s which carries only its diagonal one.
//   even s: A A^t = adiag(2u, ..., 2u), deltas 2 (first s/2 rows) then 1
//   odd s:  A A^t = adiag(2u, ..., 1, ..., 2u), deltas 2 (first (s-1)/2 rows) then 1
inline CertifiedMatrix block_adiag_matrix(const Ring& r, std::optional<RingElement> u_in, std::size_t s,
                                          const Budget& budget = {}) {
  if (s < 2) throw InvalidParameter("block anti-diagonal construction needs s >= 2");
  std::vector<std::string> log;
  detail::require_two_unit(r, log);
  const Elem u = detail::pick_u(r, u_in);
  detail::require_square_root_of_minus_one(r, u, log);

  const bool odd = s % 2 == 1;
  const std::size_t mid = s / 2;  // middle row index when s is odd
  Matrix a(r, s, s);
  for (std::size_t i = 0; i < s; ++i) {
    a(i, i) = r.one();
    if (!(odd && i == mid)) a(i, s - 1 - i) = u;
  }
  const Elem two_u = r.mul(r.from_int(2), u);
  std::vector<Elem> lambdas(s, two_u);
  if (odd) lambdas[mid] = r.one();
  const std::size_t twos = odd ? (s - 1) / 2 : s / 2;
  std::vector<std::size_t> deltas(s, 1);
  std::fill(deltas.begin(), deltas.begin() + static_cast<std::ptrdiff_t>(twos), 2);
  return detail::certify(std::move(a), {GramKind::AntiDiagonal, std::move(lambdas)}, std::move(deltas), std::move(log),
                         budget);
}

// The bound for the block family written as
//   even s: min{2d_1..2d_{s/2}, d_{s/2+1}..d_s}
//   odd s:  min{2d_1..2d_{(s-1)/2}, d_{(s+1)/2+1}..d_s}
// Note the odd form leaves out d_{(s+1)/2}; min_distance_lower_bound keeps it.
inline std::size_t block_adiag_bound_skipping_middle(std::span<const std::size_t> d) {
  const std::size_t s = d.size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  if (s % 2 == 0) {
    for (std::size_t i = 0; i < s; ++i) best = std::min(best, i < s / 2 ? 2 * d[i] : d[i]);
  } else {
    const std::size_t half = (s - 1) / 2;
    for (std::size_t i = 0; i < half; ++i) best = std::min(best, 2 * d[i]);
    for (std::size_t i = half + 1; i < s; ++i) best = std::min(best, d[i]);
  }
  return best;
}

struct PrimeSquareCodes {
  Ring ring;
  LinearCode c1;  // Z_{p^2} (1, ..., 1)
  LinearCode c2;  // Z_{p^2} (p, ..., p)
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// For a prime p = 1 (mod 4): C_1 = R(1,...,1), C_2 = R(p,...,p) of length p over
// Z_{p^2}, checked to satisfy d_1 = d_2 = p, C_1 inside C_2^perp, C_2 inside C_1^perp.
inline PrimeSquareCodes prime_square_codes(std::uint64_t p, const Budget& budget = {}) {
  if (!is_prime(p)) throw InvalidParameter(std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw InvalidParameter(std::to_string(p) + " is not congruent to 1 mod 4");
  if (p > 65535) throw InvalidParameter("p is too large");
  Ring r = Ring::integers_mod(static_cast<std::int64_t>(p * p));
  const auto len = static_cast<std::size_t>(p);
  LinearCode c1 = LinearCode::span(r, len, {Word(len, r.one())}, budget);
  LinearCode c2 = LinearCode::span(r, len, {Word(len, r.from_int(static_cast<std::int64_t>(p)))}, budget);
  if (min_distance(c1, budget) != p || min_distance(c2, budget) != p) {
    throw InconsistentInput("prime-square codes do not have distance p");
  }
  if (!is_orthogonal_to(c1, c2) || !is_orthogonal_to(c2, c1)) {
    throw InconsistentInput("prime-square codes are not mutually orthogonal");
  }
  return {std::move(r), std::move(c1), std::move(c2)};
}

}  // namespace ringcodes
