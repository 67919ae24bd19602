#pragma once

// Matrix-product codes [C_1 ... C_s] A: construction, the closed-form dual,
// hypothesis checks for the self-orthogonality / self-duality criteria, row
// codes and the product distance bound.
//
// Wire convention: a codeword (c_1 ... c_s) A is flattened column by column,
// (sum_i a_{i,1} c_i | sum_i a_{i,2} c_i | ... | sum_i a_{i,l} c_i), each block of
// length m.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringcodes/code.hpp"
#include "ringcodes/matrix.hpp"

namespace ringcodes {

class MPCSpec {
 public:
  MPCSpec(std::vector<LinearCode> inputs, Matrix a) : inputs_(std::move(inputs)), a_(std::move(a)) {
    if (inputs_.size() != a_.rows()) {
      throw ShapeError("need one input code per row of A (" + std::to_string(a_.rows()) + "), got " +
                       std::to_string(inputs_.size()));
    }
    if (a_.rows() > a_.cols()) throw ShapeError("matrix-product codes require s <= l");
    for (const auto& c : inputs_) {
      if (!(c.ring() == a_.ring())) throw RingMismatch("input code and matrix rings differ");
      if (c.length() != inputs_.front().length()) throw ShapeError("input codes must share one length");
    }
  }

  const std::vector<LinearCode>& inputs() const noexcept { return inputs_; }
  const Matrix& matrix() const noexcept { return a_; }
  const Ring& ring() const noexcept { return a_.ring(); }
  std::size_t s() const noexcept { return a_.rows(); }
  std::size_t l() const noexcept { return a_.cols(); }
  std::size_t m() const noexcept { return inputs_.front().length(); }
  std::size_t length() const noexcept { return m() * l(); }

  MPCSpec with_matrix(Matrix a) const { return {inputs_, std::move(a)}; }
  MPCSpec with_inputs(std::vector<LinearCode> inputs) const { return {std::move(inputs), a_}; }

 private:
  std::vector<LinearCode> inputs_;
  Matrix a_;
};

// Image of c in C_i: (a_{i,1} c | ... | a_{i,l} c).
inline Word embed_row(const Matrix& a, std::size_t i, std::span<const Elem> c) {
  const Ring& r = a.ring();
  const std::size_t m = c.size();
  Word out(m * a.cols(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Elem aij = a(i, j);
    if (aij == 0) continue;
    for (std::size_t k = 0; k < m; ++k) out[j * m + k] = r.mul(aij, c[k]);
  }
  return out;
}

// Sum set of the s embedded input codes. Each input contributes either its
// codeword set or R-multiples of its spanning vectors, whichever is smaller.
inline LinearCode build_mpc(const MPCSpec& spec, const Budget& budget = {}) {
  const Ring& r = spec.ring();
  const Matrix& a = spec.matrix();
  const std::size_t n = spec.length();
  std::vector<Word> generators;
  std::vector<Word> members{Word(n, 0)};
  WordSet seen{members.front()};

  for (std::size_t i = 0; i < spec.s(); ++i) {
    const LinearCode& c = spec.inputs()[i];
    const auto& spanning = c.spanning_set();
    for (const Word& g : spanning) generators.push_back(embed_row(a, i, g));

    WordSet step_seen;
    std::vector<Word> step;
    if (c.size() <= spanning.size() * r.size()) {
      for (const Word& w : c.codewords()) {
        Word e = embed_row(a, i, w);
        if (step_seen.insert(e).second) step.push_back(std::move(e));
      }
    } else {
      // cyclic pieces added one at a time keep the intermediate sets small
      for (const Word& g : spanning) {
        std::vector<Word> multiples;
        for (std::uint64_t lambda = 1; lambda < r.cardinality(); ++lambda) {
          multiples.push_back(embed_row(a, i, word_scale(r, static_cast<Elem>(lambda), g)));
        }
        const std::size_t before = members.size();
        for (std::size_t t = 0; t < before; ++t) {
          for (const Word& h : multiples) {
            Word w = word_add(r, members[t], h);
            if (seen.insert(w).second) {
              members.push_back(std::move(w));
              if (members.size() > budget.max_candidates)
                throw BudgetExceeded("matrix-product code materialization", members.size(), budget.max_candidates);
            }
          }
        }
      }
      continue;
    }
    const std::size_t before = members.size();
    for (std::size_t t = 0; t < before; ++t) {
      for (const Word& h : step) {
        if (weight(h) == 0) continue;
        Word w = word_add(r, members[t], h);
        if (seen.insert(w).second) {
          members.push_back(std::move(w));
          if (members.size() > budget.max_candidates)
            throw BudgetExceeded("matrix-product code materialization", members.size(), budget.max_candidates);
        }
      }
    }
  }
  return LinearCode::with_codewords(r, n, std::move(generators), std::move(members));
}

// [C_1^perp ... C_s^perp] (A^{-1})^t for square nonsingular A.
inline LinearCode mpc_dual_theorem(const MPCSpec& spec, const Budget& budget = {}) {
  const Matrix& a = spec.matrix();
  if (!a.is_square() || !is_nonsingular(a)) throw NotApplicable("theorem requires non-singular A");
  std::vector<LinearCode> duals;
  for (const auto& c : spec.inputs()) duals.push_back(dual_bruteforce(c, budget));
  return build_mpc(MPCSpec(std::move(duals), transpose(adjugate_inverse(a))), budget);
}

// C_{R_i}: span of the first i rows of A, i = 1..s.
inline std::vector<LinearCode> row_codes(const Matrix& a, const Budget& budget = {}) {
  if (!has_full_rank(a, budget)) throw NotApplicable("row codes require A of full rank");
  std::vector<LinearCode> codes;
  std::vector<Word> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows.emplace_back(a.row(i).begin(), a.row(i).end());
    codes.push_back(LinearCode::span(a.ring(), a.cols(), rows, budget));
  }
  return codes;
}

// d_i = d(C_i) and delta_i = d(C_{R_i}) for each row.
struct BoundTerm {
  std::size_t input_distance;
  std::size_t row_distance;
  std::size_t product() const { return input_distance * row_distance; }
};

inline std::vector<BoundTerm> distance_bound_terms(const MPCSpec& spec, const Budget& budget = {}) {
  const auto rows = row_codes(spec.matrix(), budget);
  std::vector<BoundTerm> terms;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    terms.push_back({min_distance(spec.inputs()[i], budget), min_distance(rows[i], budget)});
  }
  return terms;
}

// min_i d_i * delta_i.
inline std::size_t min_distance_lower_bound(const MPCSpec& spec, const Budget& budget = {}) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& t : distance_bound_terms(spec, budget)) best = std::min(best, t.product());
  return best;
}

// The r x (l m) matrix with blocks a_{i,j} G_i, i.e. row block i is
// (a_{i,1} G_i | ... | a_{i,l} G_i). Each G_i must have independent rows
// spanning C_i; both facts are checked by enumeration.
inline Matrix mpc_generator_matrix(const MPCSpec& spec, const std::vector<Matrix>& gs, const Budget& budget = {}) {
  if (gs.size() != spec.s()) throw ShapeError("need one generating matrix per input code");
  const Matrix& a = spec.matrix();
  if (!has_full_rank(a, budget)) throw NotApplicable("generating matrix construction requires A of full rank");
  const Ring& r = spec.ring();
  const std::size_t m = spec.m();
  std::vector<Elem> entries;
  std::size_t total_rows = 0;
  for (std::size_t i = 0; i < spec.s(); ++i) {
    const Matrix& g = gs[i];
    if (!(g.ring() == r)) throw RingMismatch("generating matrix ring differs");
    if (g.cols() != m) throw ShapeError("generating matrix width differs from input length");
    std::vector<Word> rows;
    for (std::size_t k = 0; k < g.rows(); ++k) rows.emplace_back(g.row(k).begin(), g.row(k).end());
    if (!(LinearCode::span(r, m, rows, budget) == spec.inputs()[i])) {
      throw InconsistentInput("rows of G_" + std::to_string(i + 1) + " do not span C_" + std::to_string(i + 1));
    }
    if (!has_full_rank(g, budget)) {
      throw InconsistentInput("rows of G_" + std::to_string(i + 1) + " are not independent");
    }
    for (const Word& row : rows) {
      const Word e = embed_row(a, i, row);
      entries.insert(entries.end(), e.begin(), e.end());
      ++total_rows;
    }
  }
  Matrix out(r, total_rows, spec.length(), std::move(entries));
  std::vector<Word> out_rows;
  for (std::size_t k = 0; k < out.rows(); ++k) out_rows.emplace_back(out.row(k).begin(), out.row(k).end());
  if (!(LinearCode::span(r, spec.length(), out_rows, budget) == build_mpc(spec, budget))) {
    throw InconsistentInput("generating matrix does not span the matrix-product code");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Condition report

enum class Verdict { Holds, Fails, Indeterminate };

enum class Property { SelfOrthogonal, SelfDual, Equivalence };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

inline const char* to_string(Property p) {
  switch (p) {
    case Property::SelfOrthogonal: return "self-orthogonal";
    case Property::SelfDual: return "self-dual";
    case Property::Equivalence: return "equivalence";
  }
  return "";
}

struct ConditionResult {
  std::string id;
  Verdict holds = Verdict::Fails;
  std::string detail;
};

struct Conclusion {
  Property property;
  std::string justified_by;
};

struct MPCReport {
  GramShape gram;
  std::vector<ConditionResult> conditions;
  std::vector<Conclusion> conclusions;

  const ConditionResult* find(const std::string& id) const {
    for (const auto& c : conditions)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool concludes(Property p) const {
    return std::any_of(conclusions.begin(), conclusions.end(), [p](const Conclusion& c) { return c.property == p; });
  }

  bool concludes(Property p, const std::string& id) const {
    return std::any_of(conclusions.begin(), conclusions.end(),
                       [&](const Conclusion& c) { return c.property == p && c.justified_by == id; });
  }
};

// Stable condition identifiers, in report order.
inline const std::vector<std::string>& condition_ids() {
  static const std::vector<std::string> ids = {
      "thm-self-orth-1", "thm-self-orth-2", "cor-orthog-2", "cor-orthog-3", "thm-self-dual",
      "lemma-ca-1",      "lemma-ca-2",      "lemma-ca-3",   "lemma-ca-4",   "thm-self-mpc"};
  return ids;
}

namespace detail {

inline std::string index_label(std::size_t i) { return "C_" + std::to_string(i + 1); }

// Runs a check that may need an out-of-budget enumeration.
template <class Fn>
ConditionResult guarded(std::string id, Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    return {std::move(id), Verdict::Indeterminate, e.what()};
  }
}

inline ConditionResult result(std::string id, bool holds, std::string detail) {
  return {std::move(id), holds ? Verdict::Holds : Verdict::Fails, std::move(detail)};
}

}  // namespace detail

// Evaluates every hypothesis (no short-circuit) and records what they imply.
inline MPCReport check_conditions(const MPCSpec& spec, const Budget& budget = {}) {
  using detail::index_label;
  using detail::result;
  const Ring& r = spec.ring();
  const Matrix& a = spec.matrix();
  const auto& codes = spec.inputs();
  const std::size_t s = spec.s();
  const Matrix g = gram_matrix(a);

  MPCReport report;
  report.gram = classify_gram(a);

  // diagonal Gram: C_i self-orthogonal whenever lambda_i != 0
  report.conditions.push_back(detail::guarded("thm-self-orth-1", [&] {
    if (!is_diagonal(g)) return result("thm-self-orth-1", false, "A*A^t is not diagonal");
    for (std::size_t i = 0; i < s; ++i) {
      if (g(i, i) != 0 && !is_self_orthogonal(codes[i])) {
        return result("thm-self-orth-1", false,
                      "lambda_" + std::to_string(i + 1) + " = " + r.to_string(g(i, i)) + " != 0 but " +
                          index_label(i) + " is not self-orthogonal");
      }
    }
    return result("thm-self-orth-1", true, "A*A^t diagonal; every C_i with lambda_i != 0 is self-orthogonal");
  }));

  // anti-diagonal Gram: C_i inside C_{s-i+1}^perp whenever lambda_i != 0
  report.conditions.push_back(detail::guarded("thm-self-orth-2", [&] {
    if (!is_anti_diagonal(g)) return result("thm-self-orth-2", false, "A*A^t is not anti-diagonal");
    for (std::size_t i = 0; i < s; ++i) {
      const Elem lambda = g(i, s - 1 - i);
      if (lambda != 0 && !is_orthogonal_to(codes[i], codes[s - 1 - i])) {
        return result("thm-self-orth-2", false,
                      "lambda_" + std::to_string(i + 1) + " = " + r.to_string(lambda) + " != 0 but " +
                          index_label(i) + " is not inside " + index_label(s - 1 - i) + "^perp");
      }
    }
    return result("thm-self-orth-2", true,
                  "A*A^t anti-diagonal; C_i inside C_{s-i+1}^perp wherever lambda_i != 0");
  }));

  const bool square = a.is_square();
  const bool nonsingular = square && is_nonsingular(a);
  const bool orthogonal = square && is_orthogonal_matrix(a);

  report.conditions.push_back(detail::guarded("cor-orthog-2", [&] {
    if (!orthogonal) return result("cor-orthog-2", false, square ? "A is not orthogonal" : "A is not square");
    for (std::size_t i = 0; i < s; ++i) {
      if (!is_self_orthogonal(codes[i]))
        return result("cor-orthog-2", false, index_label(i) + " is not self-orthogonal");
    }
    return result("cor-orthog-2", true, "A orthogonal and every C_i self-orthogonal");
  }));

  report.conditions.push_back(detail::guarded("cor-orthog-3", [&] {
    if (!orthogonal) return result("cor-orthog-3", false, square ? "A is not orthogonal" : "A is not square");
    for (std::size_t i = 0; i < s; ++i) {
      if (!is_self_dual(codes[i], budget)) return result("cor-orthog-3", false, index_label(i) + " is not self-dual");
    }
    return result("cor-orthog-3", true, "A orthogonal and every C_i self-dual");
  }));

  report.conditions.push_back(detail::guarded("thm-self-dual", [&] {
    if (!square) return result("thm-self-dual", false, "A is not square");
    if (!is_anti_diagonal(g)) return result("thm-self-dual", false, "A*A^t is not anti-diagonal");
    for (std::size_t i = 0; i < s; ++i) {
      const Elem lambda = g(i, s - 1 - i);
      if (!r.is_unit(lambda)) {
        return result("thm-self-dual", false,
                      "lambda_" + std::to_string(i + 1) + " = " + r.to_string(lambda) + " is not a unit");
      }
    }
    for (std::size_t i = 0; i < s; ++i) {
      if (!(codes[i] == dual_bruteforce(codes[s - 1 - i], budget))) {
        return result("thm-self-dual", false, index_label(i) + " != " + index_label(s - 1 - i) + "^perp");
      }
    }
    return result("thm-self-dual", true, "A*A^t = adiag of units and C_i = C_{s-i+1}^perp for all i");
  }));

  auto lemma_case = [&](const std::string& id, auto&& predicate) {
    report.conditions.push_back(detail::guarded(id, [&] {
      if (!square) return result(id, false, "A is not square");
      if (!nonsingular) return result(id, false, "A is singular");
      return predicate();
    }));
  };

  lemma_case("lemma-ca-1", [&] {
    if (!is_upper_triangular(a)) return result("lemma-ca-1", false, "A is not upper triangular");
    for (std::size_t i = 0; i + 1 < s; ++i) {
      if (!is_subcode(codes[i], codes[i + 1]))
        return result("lemma-ca-1", false, index_label(i) + " is not inside " + index_label(i + 1));
    }
    return result("lemma-ca-1", true, "C_1 inside ... inside C_s and A upper triangular");
  });
  lemma_case("lemma-ca-2", [&] {
    if (!is_lower_triangular(a)) return result("lemma-ca-2", false, "A is not lower triangular");
    for (std::size_t i = 0; i + 1 < s; ++i) {
      if (!is_subcode(codes[i + 1], codes[i]))
        return result("lemma-ca-2", false, index_label(i + 1) + " is not inside " + index_label(i));
    }
    return result("lemma-ca-2", true, "C_s inside ... inside C_1 and A lower triangular");
  });
  lemma_case("lemma-ca-3", [&] {
    return result("lemma-ca-3", is_diagonal(a), is_diagonal(a) ? "A is diagonal" : "A is not diagonal");
  });
  lemma_case("lemma-ca-4", [&] {
    for (std::size_t i = 1; i < s; ++i) {
      if (!(codes[i] == codes[0])) return result("lemma-ca-4", false, index_label(i) + " != C_1");
    }
    return result("lemma-ca-4", true, "all input codes are equal");
  });

  std::vector<std::string> equivalence_by;
  for (const char* id : {"lemma-ca-1", "lemma-ca-2", "lemma-ca-3", "lemma-ca-4"}) {
    if (report.find(id)->holds == Verdict::Holds) equivalence_by.push_back(id);
  }

  report.conditions.push_back(detail::guarded("thm-self-mpc", [&] {
    if (!square) return result("thm-self-mpc", false, "A is not square");
    if (!nonsingular) return result("thm-self-mpc", false, "A is singular");
    std::string detail;
    if (!equivalence_by.empty()) {
      detail = "[C_1 ... C_s]A = [C_1 ... C_s] by " + equivalence_by.front();
    } else {
      const LinearCode with_a = build_mpc(spec, budget);
      const LinearCode with_identity = build_mpc(spec.with_matrix(Matrix::identity(r, s)), budget);
      if (!(with_a == with_identity)) return result("thm-self-mpc", false, "[C_1 ... C_s]A != [C_1 ... C_s]");
      detail = "[C_1 ... C_s]A = [C_1 ... C_s] by direct comparison";
    }
    return result("thm-self-mpc", true, detail);
  }));

  auto holds = [&](const char* id) { return report.find(id)->holds == Verdict::Holds; };

  if (holds("thm-self-orth-1")) report.conclusions.push_back({Property::SelfOrthogonal, "thm-self-orth-1"});
  if (holds("thm-self-orth-2")) report.conclusions.push_back({Property::SelfOrthogonal, "thm-self-orth-2"});
  if (holds("cor-orthog-2")) report.conclusions.push_back({Property::SelfOrthogonal, "cor-orthog-2"});
  if (holds("cor-orthog-3")) report.conclusions.push_back({Property::SelfDual, "cor-orthog-3"});
  if (holds("thm-self-dual")) report.conclusions.push_back({Property::SelfDual, "thm-self-dual"});
  for (const auto& id : equivalence_by) report.conclusions.push_back({Property::Equivalence, id});

  ConditionResult& self_mpc = report.conditions.back();
  if (self_mpc.holds == Verdict::Holds) {
    if (equivalence_by.empty()) report.conclusions.push_back({Property::Equivalence, "thm-self-mpc"});
    // the MPC inherits exactly the inputs' self-orthogonality / self-duality
    const bool all_so = std::all_of(codes.begin(), codes.end(), [](const LinearCode& c) { return is_self_orthogonal(c); });
    self_mpc.detail += all_so ? "; inputs all self-orthogonal" : "; some input is not self-orthogonal, so neither is the MPC";
    if (all_so) report.conclusions.push_back({Property::SelfOrthogonal, "thm-self-mpc"});
    try {
      const bool all_sd =
          all_so && std::all_of(codes.begin(), codes.end(), [&](const LinearCode& c) { return is_self_dual(c, budget); });
      self_mpc.detail += all_sd ? "; inputs all self-dual" : "; some input is not self-dual, so neither is the MPC";
      if (all_sd) report.conclusions.push_back({Property::SelfDual, "thm-self-mpc"});
    } catch (const BudgetExceeded&) {
      self_mpc.detail += "; self-duality of the inputs not decided within budget";
    }
  }
  return report;
}

}  // namespace ringcodes
