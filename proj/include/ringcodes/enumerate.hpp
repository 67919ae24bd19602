#pragma once

// Exhaustive enumeration kernel shared by the brute-force oracles.

#include <algorithm>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "ringcodes/ring.hpp"

namespace ringcodes {

// Visits every x in R^k (restricted to lo <= x[0] < hi) in lexicographic order
// together with x * M, where M is k x n given row-major. Partial products are
// carried per level so each step costs O(n). visit returns false to stop.
template <class Visit>
bool enumerate_row_combinations(const Ring& ring, std::span<const Elem> rows, std::size_t k, std::size_t n,
                                Elem lo, Elem hi, Visit&& visit) {
  std::vector<Elem> x(k, 0);
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n, 0));
  if (k == 0) return visit(std::span<const Elem>(x), std::span<const Elem>(partial[0]));
  const auto q = static_cast<Elem>(ring.size());

  auto descend = [&](auto& self, std::size_t level) -> bool {
    if (level == k) return visit(std::span<const Elem>(x), std::span<const Elem>(partial[k]));
    const Elem from = level == 0 ? lo : 0;
    const Elem to = level == 0 ? hi : q;
    const Elem* row = rows.data() + level * n;
    const std::vector<Elem>& cur = partial[level];
    std::vector<Elem>& next = partial[level + 1];
    for (Elem v = from; v < to; ++v) {
      x[level] = v;
      for (std::size_t j = 0; j < n; ++j) next[j] = ring.add(cur[j], ring.mul(v, row[j]));
      if (!self(self, level + 1)) return false;
    }
    return true;
  };
  return descend(descend, 0);
}

// Splits [0, q) into contiguous chunks, runs fn(lo, hi) on each (concurrently
// when more than one hardware thread is available) and returns the results in
// chunk order, so the combined output does not depend on the split.
template <class Fn>
auto partition_first_coordinate(std::size_t q, Fn&& fn) {
  using Result = decltype(fn(Elem{0}, Elem{0}));
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>({hw, q, 16});
  std::vector<Result> results(std::max<std::size_t>(chunks, 1));
  if (chunks <= 1) {
    results[0] = fn(Elem{0}, static_cast<Elem>(q));
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const auto lo = static_cast<Elem>(q * c / chunks);
    const auto hi = static_cast<Elem>(q * (c + 1) / chunks);
    workers.emplace_back([&results, &fn, c, lo, hi] { results[c] = fn(lo, hi); });
  }
  for (auto& w : workers) w.join();
  return results;
}

}  // namespace ringcodes
