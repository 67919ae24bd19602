#pragma once

// Shared test plumbing: conversions to the oracle types and seeded random
// generators of rings, codes, matrices and specs.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ringcodes/ringcodes.hpp"

namespace support {

using namespace ringcodes;

// RINGCODES_SEED overrides the fixed default so failures can be replayed.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("RINGCODES_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline const char* kGr92 = "Z/9[x]/(x^2+x+2)";

inline Ring ring_of(const oracle::ToyRing& t) {
  return t.gr92 ? parse_ring(kGr92) : Ring::integers_mod(t.n);
}

inline oracle::ToyRing toy_of(const Ring& r) {
  if (r.is_residue()) return oracle::ToyRing::zn(static_cast<std::uint32_t>(r.residue_modulus()));
  if (r.describe() == kGr92) return oracle::ToyRing::gr9_2();
  throw InvalidParameter("no oracle for " + r.describe());
}

inline oracle::WordSet to_set(const LinearCode& c) {
  oracle::WordSet out;
  for (const auto& w : c.codewords()) out.insert(oracle::Vec(w.begin(), w.end()));
  return out;
}

inline std::vector<std::vector<std::uint32_t>> to_rows(const Matrix& a) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.emplace_back(a.row(i).begin(), a.row(i).end());
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Elem elem(const Ring& r) { return static_cast<Elem>(below(r.size())); }

  Elem unit(const Ring& r) {
    for (;;) {
      const Elem e = elem(r);
      if (r.is_unit(e)) return e;
    }
  }

  Word word(const Ring& r, std::size_t m) {
    Word w(m);
    for (auto& x : w) x = elem(r);
    return w;
  }

  // Between 0 and max_gens random generators.
  LinearCode code(const Ring& r, std::size_t m, std::size_t max_gens = 2) {
    std::vector<Word> gens;
    const std::size_t k = below(max_gens + 1);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(word(r, m));
    return LinearCode::span(r, m, std::move(gens));
  }

  // A random subcode of c: span of a few random codewords.
  LinearCode subcode(const LinearCode& c, std::size_t max_gens = 2) {
    std::vector<Word> gens;
    const std::size_t k = below(max_gens + 1);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(c.codewords()[below(c.size())]);
    return LinearCode::span(c.ring(), c.length(), std::move(gens));
  }

  // Greedy: keep adding random isotropic vectors from the current dual.
  LinearCode self_orthogonal_code(const Ring& r, std::size_t m, std::size_t steps = 3) {
    LinearCode c = LinearCode::zero(r, m);
    for (std::size_t t = 0; t < steps; ++t) {
      const LinearCode d = dual_bruteforce(c);
      std::vector<Word> iso;
      for (const auto& w : d.codewords())
        if (dot(r, w, w) == 0 && !c.contains(w)) iso.push_back(w);
      if (iso.empty()) break;
      std::vector<Word> gens = c.spanning_set();
      gens.push_back(iso[below(iso.size())]);
      c = LinearCode::span(r, m, std::move(gens));
      if (coin(0.3)) break;
    }
    return c;
  }

  Matrix matrix(const Ring& r, std::size_t s, std::size_t l) {
    Matrix a(r, s, l);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < l; ++j) a(i, j) = elem(r);
    return a;
  }

  Matrix nonsingular(const Ring& r, std::size_t s) {
    for (;;) {
      Matrix a = matrix(r, s, s);
      if (is_nonsingular(a)) return a;
    }
  }

  Matrix upper_triangular(const Ring& r, std::size_t s) {
    Matrix a(r, s, s);
    for (std::size_t i = 0; i < s; ++i) {
      a(i, i) = unit(r);
      for (std::size_t j = i + 1; j < s; ++j) a(i, j) = elem(r);
    }
    return a;
  }

  Matrix diagonal_units(const Ring& r, std::size_t s) {
    Matrix a(r, s, s);
    for (std::size_t i = 0; i < s; ++i) a(i, i) = unit(r);
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

// Z/4, Z/6, Z/8, Z/9, Z/12 and GR(9,2).
inline std::vector<Ring> small_rings() {
  return {Ring::integers_mod(4), Ring::integers_mod(6), Ring::integers_mod(8), Ring::integers_mod(9),
          Ring::integers_mod(12), parse_ring(kGr92)};
}

}  // namespace support
