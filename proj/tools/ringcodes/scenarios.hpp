#pragma once

// Named worked examples. Each scenario recomputes everything from scratch and
// records one expectation per claim, with the computed witness value.

#include <cstdint>
#include <string>
#include <vector>

#include "ringcodes/ringcodes.hpp"

namespace ringcodes::cli {

struct Expectation {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ScenarioResult {
  std::string id;
  std::string description;
  std::vector<Expectation> expectations;

  bool passed() const {
    for (const auto& e : expectations)
      if (!e.pass) return false;
    return true;
  }
};

inline std::string list_words(const Ring& r, const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(r, words[i]);
  }
  return out + "}";
}

inline std::string format_gram(const Ring& r, const GramShape& g) {
  std::string out = to_string(g.kind);
  if (g.kind == GramKind::Other) return out;
  out += "(";
  for (std::size_t i = 0; i < g.lambdas.size(); ++i) {
    if (i) out += ",";
    out += r.to_string(g.lambdas[i]);
  }
  return out + ")";
}

inline std::string format_sizes(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

namespace scenario_detail {

inline std::vector<Word> words_from_ints(const Ring& r, std::initializer_list<std::initializer_list<std::int64_t>> ws) {
  std::vector<Word> out;
  for (const auto& w : ws) {
    Word x;
    for (auto v : w) x.push_back(r.from_int(v));
    out.push_back(std::move(x));
  }
  return out;
}

inline LinearCode code_of(const Ring& r, std::initializer_list<std::initializer_list<std::int64_t>> gens,
                          const Budget& budget) {
  auto g = words_from_ints(r, gens);
  const std::size_t len = g.front().size();
  return LinearCode::span(r, len, std::move(g), budget);
}

inline std::string conclusion_witness(const MPCReport& rep) {
  std::string out;
  for (const auto& c : rep.conclusions) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(c.property)) + " via " + c.justified_by;
  }
  return out.empty() ? "no conclusions" : out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace scenario_detail

inline ScenarioResult scenario_ex1(const Budget& budget) {
  using namespace scenario_detail;
  ScenarioResult res{"ex1", "Z/20, C1 = {0,10}, C2 = 4Z/20, A = [[1,2],[0,0]]", {}};
  const Ring r = Ring::integers_mod(20);
  const LinearCode c1 = code_of(r, {{10}}, budget), c2 = code_of(r, {{4}}, budget);
  const MPCSpec spec({c1, c2}, Matrix::from_ints(r, {{1, 2}, {0, 0}}));

  const GramShape g = classify_gram(spec.matrix());
  res.expectations.push_back(
      {"A*A^t = diag(5,0)", g == GramShape{GramKind::Diagonal, {5, 0}}, format_gram(r, g)});

  const LinearCode mpc = build_mpc(spec, budget);
  std::vector<Word> expected_mpc;
  for (std::int64_t a = 0; a < 20; a += 10) expected_mpc.push_back({r.from_int(a), 0});
  res.expectations.push_back({"MPC = 10Z/20 x {0}", mpc.codewords() == LinearCode::from_codewords(r, 2, expected_mpc).codewords(),
                              list_words(r, mpc.codewords())});

  const LinearCode dual = dual_bruteforce(mpc, budget);
  std::vector<Word> expected_dual;
  for (std::int64_t a = 0; a < 20; a += 2)
    for (std::int64_t b = 0; b < 20; ++b) expected_dual.push_back({r.from_int(a), r.from_int(b)});
  res.expectations.push_back({"dual = 2Z/20 x Z/20 (200 words)",
                              dual.codewords() == LinearCode::from_codewords(r, 2, expected_dual).codewords() &&
                                  dual.size() == 200,
                              std::to_string(dual.size()) + " words"});

  const bool so = is_self_orthogonal(mpc) && is_subcode(mpc, dual);
  res.expectations.push_back({"MPC is self-orthogonal", so, yes_no(so)});

  const MPCReport rep = check_conditions(spec, budget);
  res.expectations.push_back({"concluded self-orthogonal via thm-self-orth-1",
                              rep.concludes(Property::SelfOrthogonal, "thm-self-orth-1"), conclusion_witness(rep)});
  return res;
}

inline ScenarioResult scenario_ex2(const Budget& budget) {
  using namespace scenario_detail;
  ScenarioResult res{"ex2", "Z/20, C1 = {0,10}, C2 = 4Z/20, B = [[0,2,0,4],[0,4,2,0]], both input orders", {}};
  const Ring r = Ring::integers_mod(20);
  const LinearCode c1 = code_of(r, {{10}}, budget), c2 = code_of(r, {{4}}, budget);
  const Matrix b = Matrix::from_ints(r, {{0, 2, 0, 4}, {0, 4, 2, 0}});

  const GramShape g = classify_gram(b);
  res.expectations.push_back(
      {"B*B^t = adiag(8,8)", g == GramShape{GramKind::AntiDiagonal, {8, 8}}, format_gram(r, g)});

  res.expectations.push_back({"C1 in C2^perp and C2 in C1^perp", is_orthogonal_to(c1, c2) && is_orthogonal_to(c2, c1),
                              yes_no(is_orthogonal_to(c1, c2) && is_orthogonal_to(c2, c1))});

  struct Order {
    const char* label;
    MPCSpec spec;
    std::vector<Word> listed;
  };
  const Order orders[] = {
      {"[C1 C2]B", MPCSpec({c1, c2}, b),
       words_from_ints(r, {{0, 0, 0, 0}, {0, 16, 8, 0}, {0, 12, 16, 0}, {0, 8, 4, 0}, {0, 4, 12, 0}})},
      {"[C2 C1]B", MPCSpec({c2, c1}, b),
       words_from_ints(r, {{0, 0, 0, 0}, {0, 8, 0, 16}, {0, 16, 0, 12}, {0, 4, 0, 8}, {0, 12, 0, 4}})},
  };
  for (const auto& o : orders) {
    const LinearCode mpc = build_mpc(o.spec, budget);
    const LinearCode listed = LinearCode::from_codewords(r, 4, o.listed);
    res.expectations.push_back({std::string(o.label) + " equals the listed 5 codewords",
                                mpc.codewords() == listed.codewords(), list_words(r, mpc.codewords())});
    res.expectations.push_back(
        {std::string(o.label) + " is self-orthogonal", is_self_orthogonal(mpc), yes_no(is_self_orthogonal(mpc))});
    const MPCReport rep = check_conditions(o.spec, budget);
    res.expectations.push_back({std::string(o.label) + " concluded self-orthogonal via thm-self-orth-2",
                                rep.concludes(Property::SelfOrthogonal, "thm-self-orth-2"), conclusion_witness(rep)});
  }
  return res;
}

inline ScenarioResult scenario_z25(const Budget& budget) {
  using namespace scenario_detail;
  ScenarioResult res{"z25-selfdual", "Z/25, C = span{(1,7)}, A = [[1,7],[7,1]]", {}};
  const Ring r = Ring::integers_mod(25);
  const LinearCode c = code_of(r, {{1, 7}}, budget);
  res.expectations.push_back({"C is self-dual", is_self_dual(c, budget), std::to_string(c.size()) + " words"});

  const CertifiedMatrix cm = adiag3_matrix(r, RingElement(r, 7), budget);
  const Elem fourteen = r.from_int(14);
  res.expectations.push_back({"A*A^t = adiag(14,14) with 14 a unit",
                              cm.gram == GramShape{GramKind::AntiDiagonal, {fourteen, fourteen}} && r.is_unit(fourteen),
                              format_gram(r, cm.gram)});

  const MPCSpec spec({c, c}, cm.matrix);
  const MPCReport rep = check_conditions(spec, budget);
  res.expectations.push_back({"concluded self-dual via thm-self-dual",
                              rep.concludes(Property::SelfDual, "thm-self-dual"), conclusion_witness(rep)});

  const LinearCode mpc = build_mpc(spec, budget);
  const bool sd = is_self_dual(mpc, budget);
  res.expectations.push_back({"MPC is self-dual (brute-force dual over 25^4 vectors)", sd, yes_no(sd)});

  const Word witness{r.from_int(14), r.from_int(23), 0, 0};
  res.expectations.push_back({"MPC contains the weight-2 word (14,23,0,0)", mpc.contains(witness),
                              format_vector(r, witness)});

  const std::size_t d = min_distance(mpc, budget);
  res.expectations.push_back({"minimum distance is 2", d == 2, std::to_string(d)});

  const Matrix g = Matrix::from_ints(r, {{1, 7}});
  const Matrix gen = mpc_generator_matrix(spec, {g, g}, budget);
  const bool free2 = gen.rows() == 2 && gen.cols() == 4 && mpc.size() == 625;
  res.expectations.push_back({"free of rank 2, length 4, rate 1/2", free2,
                              "rank " + std::to_string(gen.rows()) + ", length " + std::to_string(gen.cols()) +
                                  ", |C| = " + std::to_string(mpc.size())});
  return res;
}

inline ScenarioResult scenario_prime_square(std::uint64_t p, const Budget& budget) {
  using namespace scenario_detail;
  ScenarioResult res{"prime-square:" + std::to_string(p),
                     "Z/p^2, C1 = R(1,...,1), C2 = R(p,...,p), matrices A and B of the adiag1 family", {}};
  const PrimeSquareCodes pc = prime_square_codes(p, budget);
  const Ring& r = pc.ring;
  const std::size_t d1 = min_distance(pc.c1, budget), d2 = min_distance(pc.c2, budget);
  res.expectations.push_back({"d1 = d2 = p", d1 == p && d2 == p, std::to_string(d1) + ", " + std::to_string(d2)});
  const bool orth = is_orthogonal_to(pc.c1, pc.c2) && is_orthogonal_to(pc.c2, pc.c1);
  res.expectations.push_back({"C1 in C2^perp and C2 in C1^perp", orth, scenario_detail::yes_no(orth)});

  struct Family {
    CertifiedMatrix cm;
    std::size_t length_factor;
    std::size_t bound_factor;
  };
  const Family fams[] = {{adiag1_matrix_a(r, {}, budget), 3, 2}, {adiag1_matrix_b(r, {}, budget), 5, 3}};
  for (const auto& f : fams) {
    const std::string tag = f.length_factor == 3 ? "[C1 C2]A" : "[C1 C2]B";
    const MPCSpec spec({pc.c1, pc.c2}, f.cm.matrix);
    const LinearCode mpc = build_mpc(spec, budget);
    const MPCReport rep = check_conditions(spec, budget);
    res.expectations.push_back({tag + " concluded self-orthogonal", rep.concludes(Property::SelfOrthogonal),
                                conclusion_witness(rep)});
    res.expectations.push_back({tag + " is self-orthogonal", is_self_orthogonal(mpc), yes_no(is_self_orthogonal(mpc))});
    res.expectations.push_back({tag + " has length " + std::to_string(f.length_factor) + "p",
                                mpc.length() == f.length_factor * p, std::to_string(mpc.length())});
    const std::size_t d = min_distance(mpc, budget);
    res.expectations.push_back({tag + " has d >= " + std::to_string(f.bound_factor) + "p",
                                d >= f.bound_factor * p, std::to_string(d)});
  }
  return res;
}

inline void certificate_expectations(ScenarioResult& res, const std::string& tag, const CertifiedMatrix& cm,
                                     const GramShape& gram, const std::vector<std::size_t>& deltas) {
  const Ring& r = cm.matrix.ring();
  res.expectations.push_back({tag + " matrix", true, format_matrix(cm.matrix)});
  res.expectations.push_back({tag + " gram = " + format_gram(r, gram), cm.gram == gram, format_gram(r, cm.gram)});
  res.expectations.push_back({tag + " deltas = " + format_sizes(deltas), cm.deltas == deltas, format_sizes(cm.deltas)});
}

inline ScenarioResult scenario_lemma_diag1(const Ring& r, const RingElement& u, const Budget& budget) {
  ScenarioResult res{"lemma-diag1:" + r.describe() + ":" + u.to_string(), "[[1,u,1],[-1,0,1]] certificate", {}};
  const CertifiedMatrix cm = diag1_matrix(r, u, budget);
  const Elem two = r.from_int(2);
  certificate_expectations(res, "diag1", cm, {GramKind::Diagonal, {r.add(two, r.mul(u.value(), u.value())), two}},
                           {3, 2});
  return res;
}

inline ScenarioResult scenario_lemma_adiag1(const Ring& r, const Budget& budget) {
  ScenarioResult res{"lemma-adiag1:" + r.describe(), "A = [[1,0,u],[0,1,u]] and B = [[1,u,0,1,u],[u,1,u,0,1]]", {}};
  const CertifiedMatrix a = adiag1_matrix_a(r, {}, budget);
  const Elem u = a.matrix(0, 2);
  res.expectations.push_back({"u^2 = -1", r.mul(u, u) == r.neg(r.one()), "u = " + r.to_string(u)});
  const Elem m1 = r.neg(r.one());
  certificate_expectations(res, "A", a, {GramKind::AntiDiagonal, {m1, m1}}, {2, 2});
  const CertifiedMatrix b = adiag1_matrix_b(r, RingElement(r, u), budget);
  const Elem three_u = r.mul(r.from_int(3), u);
  certificate_expectations(res, "B", b, {GramKind::AntiDiagonal, {three_u, three_u}}, {4, 3});
  return res;
}

inline ScenarioResult scenario_lemma_adiag3(const Ring& r, const Budget& budget) {
  ScenarioResult res{"lemma-adiag3:" + r.describe(), "[[1,u],[u,1]] certificate", {}};
  const CertifiedMatrix a = adiag3_matrix(r, {}, budget);
  const Elem u = a.matrix(0, 1);
  res.expectations.push_back({"u^2 = -1", r.mul(u, u) == r.neg(r.one()), "u = " + r.to_string(u)});
  const Elem two_u = r.mul(r.from_int(2), u);
  certificate_expectations(res, "A", a, {GramKind::AntiDiagonal, {two_u, two_u}}, {2, 1});
  return res;
}

inline const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = {
      "ex1", "ex2", "z25-selfdual", "prime-square:<p>", "lemma-diag1:<ring>:<u>", "lemma-adiag1:<ring>",
      "lemma-adiag3:<ring>"};
  return ids;
}

// Dispatches a scenario id. Unknown ids throw InvalidParameter.
inline ScenarioResult run_scenario(const std::string& id, const Budget& budget) {
  if (id == "ex1") return scenario_ex1(budget);
  if (id == "ex2") return scenario_ex2(budget);
  if (id == "z25-selfdual") return scenario_z25(budget);
  const auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : id.substr(colon + 1);
  if (colon != std::string::npos && !rest.empty()) {
    if (head == "prime-square") {
      if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 9) {
        throw InvalidParameter("prime-square needs a decimal prime, got '" + rest + "'");
      }
      return scenario_prime_square(std::stoull(rest), budget);
    }
    if (head == "lemma-diag1") {
      const auto last = rest.rfind(':');
      if (last == std::string::npos) throw InvalidParameter("lemma-diag1 needs <ring>:<u>");
      const Ring r = parse_ring(rest.substr(0, last));
      return scenario_lemma_diag1(r, parse_element(r, rest.substr(last + 1)), budget);
    }
    if (head == "lemma-adiag1") return scenario_lemma_adiag1(parse_ring(rest), budget);
    if (head == "lemma-adiag3") return scenario_lemma_adiag3(parse_ring(rest), budget);
  }
  throw InvalidParameter("unknown scenario '" + id + "'");
}

}  // namespace ringcodes::cli
