#pragma once

// Linear codes over a finite ring as finitely generated submodules of R^m.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_set>
#include <vector>

#include "ringcodes/enumerate.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

using Word = std::vector<Elem>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : w) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using WordSet = std::unordered_set<Word, WordHash>;

inline Elem dot(const Ring& ring, std::span<const Elem> x, std::span<const Elem> y) {
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = ring.add(acc, ring.mul(x[i], y[i]));
  return acc;
}

inline std::size_t weight(std::span<const Elem> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
}

inline Word word_add(const Ring& ring, std::span<const Elem> x, std::span<const Elem> y) {
  Word out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.add(x[i], y[i]);
  return out;
}

inline Word word_scale(const Ring& ring, Elem lambda, std::span<const Elem> x) {
  Word out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.mul(lambda, x[i]);
  return out;
}

class CodeVector {
 public:
  CodeVector(Ring ring, Word coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.empty()) throw InvalidParameter("code vectors have length >= 1");
    for (Elem e : coords_) {
      if (!ring_.contains(e)) throw InvalidParameter("coordinate outside the ring");
    }
  }

  const Ring& ring() const noexcept { return ring_; }
  const Word& coords() const noexcept { return coords_; }
  std::size_t length() const noexcept { return coords_.size(); }
  RingElement operator[](std::size_t i) const { return {ring_, coords_[i]}; }

  friend bool operator==(const CodeVector& a, const CodeVector& b) {
    return a.coords_ == b.coords_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  Word coords_;
};

inline RingElement inner_product(const CodeVector& x, const CodeVector& y) {
  if (!(x.ring() == y.ring())) throw RingMismatch();
  if (x.length() != y.length()) throw ShapeError("inner product of vectors with different lengths");
  return {x.ring(), dot(x.ring(), x.coords(), y.coords())};
}

inline std::size_t hamming_weight(const CodeVector& x) { return weight(x.coords()); }

namespace detail {

struct CodeState {
  Ring ring;
  std::size_t length;
  std::vector<Word> generators;
  Budget budget;

  std::once_flag once;
  std::atomic<bool> ready{false};
  std::vector<Word> words;    // sorted
  std::vector<Word> spanning;  // non-redundant subset of generators

  CodeState(Ring r, std::size_t m, std::vector<Word> gens, Budget b)
      : ring(std::move(r)), length(m), generators(std::move(gens)), budget(b) {}
};

// Grows span{gens} one cyclic submodule at a time: S <- S + R g.
// Generators already inside S are skipped and left out of `kept`.
inline std::vector<Word> close_span(const Ring& ring, std::size_t length, const std::vector<Word>& gens,
                                    const Budget& budget, std::vector<Word>& kept) {
  std::vector<Word> members{Word(length, 0)};
  WordSet seen{members.front()};
  for (const Word& g : gens) {
    if (seen.contains(g)) continue;
    kept.push_back(g);
    WordSet multiples_seen;
    std::vector<Word> multiples;
    for (std::uint64_t lambda = 1; lambda < ring.cardinality(); ++lambda) {
      Word h = word_scale(ring, static_cast<Elem>(lambda), g);
      if (weight(h) != 0 && multiples_seen.insert(h).second) multiples.push_back(std::move(h));
    }
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (const Word& h : multiples) {
        Word w = word_add(ring, members[i], h);
        if (seen.insert(w).second) {
          members.push_back(std::move(w));
          if (members.size() > budget.max_candidates) {
            throw BudgetExceeded("code materialization", members.size(), budget.max_candidates);
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

// An R-submodule of R^m. The codeword set is computed on first use, once,
// and shared by copies; all other state is immutable.
class LinearCode {
 public:
  // Submodule generated by `generators` (an empty list gives the zero code).
  static LinearCode span(Ring ring, std::size_t length, std::vector<Word> generators, Budget budget = {}) {
    validate(ring, length, generators);
    return LinearCode(std::make_shared<detail::CodeState>(std::move(ring), length, std::move(generators), budget));
  }

  static LinearCode span(const std::vector<CodeVector>& generators, const Ring& ring, std::size_t length,
                         Budget budget = {}) {
    std::vector<Word> gens;
    for (const auto& g : generators) {
      if (!(g.ring() == ring)) throw RingMismatch();
      gens.push_back(g.coords());
    }
    return span(ring, length, std::move(gens), budget);
  }

  // A code handed over as its full (linear) codeword set; generators = codewords.
  static LinearCode from_codewords(Ring ring, std::size_t length, std::vector<Word> words) {
    validate(ring, length, words);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto state = std::make_shared<detail::CodeState>(std::move(ring), length, words, Budget{});
    state->words = std::move(words);
    return LinearCode(std::move(state), true);
  }

  // `words` must equal span{generators}; used when the set is already known.
  static LinearCode with_codewords(Ring ring, std::size_t length, std::vector<Word> generators,
                                   std::vector<Word> words) {
    validate(ring, length, generators);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto state = std::make_shared<detail::CodeState>(std::move(ring), length, std::move(generators), Budget{});
    state->words = std::move(words);
    return LinearCode(std::move(state), true);
  }

  static LinearCode zero(Ring ring, std::size_t length) { return span(std::move(ring), length, {}); }

  const Ring& ring() const noexcept { return state_->ring; }
  std::size_t length() const noexcept { return state_->length; }
  const std::vector<Word>& generators() const noexcept { return state_->generators; }

  const std::vector<Word>& codewords() const {
    materialize();
    return state_->words;
  }

  // Generators with redundant members dropped; spans the same code.
  const std::vector<Word>& spanning_set() const {
    materialize();
    return state_->spanning;
  }

  std::size_t size() const { return codewords().size(); }
  bool is_materialized() const noexcept { return state_->ready.load(std::memory_order_acquire); }
  bool is_zero() const {
    return std::all_of(generators().begin(), generators().end(), [](const Word& g) { return weight(g) == 0; });
  }

  bool contains(std::span<const Elem> x) const {
    const auto& words = codewords();
    return std::binary_search(words.begin(), words.end(), Word(x.begin(), x.end()));
  }

  // Same ring, same length, same codeword set.
  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.length() == b.length() && a.ring() == b.ring() && a.codewords() == b.codewords();
  }

 private:
  explicit LinearCode(std::shared_ptr<detail::CodeState> state, bool words_known = false)
      : state_(std::move(state)) {
    if (words_known) {
      std::call_once(state_->once, [&] { finish_from_words(*state_); });
    }
  }

  static void validate(const Ring& ring, std::size_t length, const std::vector<Word>& gens) {
    if (length == 0) throw InvalidParameter("code length must be >= 1");
    for (const Word& g : gens) {
      if (g.size() != length) throw ShapeError("generator length differs from code length");
      for (Elem e : g) {
        if (!ring.contains(e)) throw InvalidParameter("generator coordinate outside the ring");
      }
    }
  }

  static void finish_from_words(detail::CodeState& s) {
    // recover a small spanning subset by walking the (sorted) set
    std::vector<Word> kept;
    std::vector<Word> closure = detail::close_span(s.ring, s.length, s.words, Budget{std::numeric_limits<std::size_t>::max()}, kept);
    if (closure.size() != s.words.size()) throw InconsistentInput("codeword set is not closed under R-linear combinations");
    s.spanning = std::move(kept);
    s.ready.store(true, std::memory_order_release);
  }

  void materialize() const {
    std::call_once(state_->once, [this] {
      detail::CodeState& s = *state_;
      std::vector<Word> kept;
      s.words = detail::close_span(s.ring, s.length, s.generators, s.budget, kept);
      s.spanning = std::move(kept);
      s.ready.store(true, std::memory_order_release);
    });
  }

  std::shared_ptr<detail::CodeState> state_;
};

inline CodeVector as_vector(const LinearCode& c, const Word& w) { return {c.ring(), w}; }

// <g, h> = 0 for every pair of spanning vectors, i.e. C is inside D^perp.
inline bool is_orthogonal_to(const LinearCode& c, const LinearCode& d) {
  if (!(c.ring() == d.ring())) throw RingMismatch();
  if (c.length() != d.length()) throw ShapeError("codes of different lengths");
  for (const Word& g : c.spanning_set())
    for (const Word& h : d.spanning_set())
      if (dot(c.ring(), g, h) != 0) return false;
  return true;
}

// Checked on generators only; bilinearity makes that sufficient.
inline bool is_self_orthogonal(const LinearCode& c) { return is_orthogonal_to(c, c); }

inline bool is_subcode(const LinearCode& c, const LinearCode& d) {
  if (!(c.ring() == d.ring())) throw RingMismatch();
  if (c.length() != d.length()) throw ShapeError("codes of different lengths");
  return std::all_of(c.spanning_set().begin(), c.spanning_set().end(), [&](const Word& g) { return d.contains(g); });
}

// Every x in R^m orthogonal to all generators of C. Exhaustive over |R|^m.
inline LinearCode dual_bruteforce(const LinearCode& c, const Budget& budget = {}) {
  const Ring& ring = c.ring();
  const std::size_t m = c.length();
  const std::size_t candidates = checked_power(ring.size(), m);
  if (candidates > budget.max_candidates) {
    throw BudgetExceeded("dual enumeration over R^" + std::to_string(m), candidates, budget.max_candidates);
  }
  const auto& gens = c.spanning_set();
  const std::size_t k = std::max<std::size_t>(gens.size(), 1);
  // column j of the m x k matrix is generator j
  std::vector<Elem> cols(m * k, 0);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) cols[i * k + j] = gens[j][i];

  auto chunks = partition_first_coordinate(ring.size(), [&](Elem lo, Elem hi) {
    std::vector<Word> found;
    enumerate_row_combinations(ring, cols, m, k, lo, hi, [&](std::span<const Elem> x, std::span<const Elem> dots) {
      for (Elem v : dots)
        if (v != 0) return true;
      found.emplace_back(x.begin(), x.end());
      return true;
    });
    return found;
  });
  std::vector<Word> words;
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(words));
  return LinearCode::from_codewords(ring, m, std::move(words));
}

// C self-orthogonal and |C| = |C^perp|.
inline bool is_self_dual(const LinearCode& c, const Budget& budget = {}) {
  return is_self_orthogonal(c) && c.size() == dual_bruteforce(c, budget).size();
}

// Minimum weight over nonzero codewords. Streams over coefficient tuples when
// the code has not been materialized and |R|^k fits the budget.
inline std::size_t min_distance(const LinearCode& c, const Budget& budget = {}) {
  if (c.is_zero()) throw UndefinedDistance();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto& gens = c.generators();
  const std::size_t streamed = checked_power(c.ring().size(), gens.size());
  if (!c.is_materialized() && streamed <= budget.max_candidates) {
    std::vector<Elem> rows;
    for (const Word& g : gens) rows.insert(rows.end(), g.begin(), g.end());
    const auto chunks = partition_first_coordinate(c.ring().size(), [&](Elem lo, Elem hi) {
      std::size_t local = std::numeric_limits<std::size_t>::max();
      enumerate_row_combinations(c.ring(), rows, gens.size(), c.length(), lo, hi,
                                 [&](std::span<const Elem>, std::span<const Elem> word) {
                                   const std::size_t w = weight(word);
                                   if (w != 0 && w < local) local = w;
                                   return local > 1;
                                 });
      return local;
    });
    for (std::size_t v : chunks) best = std::min(best, v);
    return best;
  }
  for (const Word& w : c.codewords()) {
    const std::size_t wt = weight(w);
    if (wt != 0) best = std::min(best, wt);
  }
  return best;
}

}  // namespace ringcodes
