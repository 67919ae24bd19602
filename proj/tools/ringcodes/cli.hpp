#pragma once

// ringcodes command line. run() is the whole program minus process setup, so
// tests drive it in-process with captured streams.
//
// Exit codes: 0 all requested properties hold, 1 a property fails,
// 2 input error, hypothesis violation or exhausted budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ringcodes/ringcodes.hpp"
#include "scenarios.hpp"

namespace ringcodes::cli {

using nlohmann::json;

enum class Format { Text, Json };

// Codes up to this size print as their full sorted word list.
inline constexpr std::size_t kListLimit = 64;

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {"self-orthogonal", "self-dual", "equivalence"};
  return names;
}

// --budget beats RINGCODES_BUDGET beats the library default.
inline Budget resolve_budget(std::optional<std::uint64_t> flag, const char* env) {
  Budget b;
  if (env && *env) {
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
      throw InvalidParameter("RINGCODES_BUDGET must be a positive integer, got '" + s + "'");
    }
    b.max_candidates = std::stoull(s);
  }
  if (flag) b.max_candidates = *flag;
  if (b.max_candidates == 0) throw InvalidParameter("budget must be positive");
  return b;
}

// ---------------------------------------------------------------------------
// JSON views

inline json elements_json(const Ring& r, std::span<const Elem> w) {
  json out = json::array();
  for (Elem e : w) out.push_back(r.to_string(e));
  return out;
}

inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(elements_json(m.ring(), m.row(i)));
  return out;
}

inline json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::Holds: return true;
    case Verdict::Fails: return false;
    case Verdict::Indeterminate: return nullptr;
  }
  return nullptr;
}

// Large codes are given by a non-redundant spanning set; small ones also list every word.
inline json code_json(const LinearCode& c) {
  json gens = json::array();
  for (const auto& g : c.spanning_set()) gens.push_back(elements_json(c.ring(), g));
  json out = {{"ring", c.ring().describe()}, {"length", c.length()}, {"generators", gens}, {"size", c.size()}};
  if (c.size() <= kListLimit) {
    json words = json::array();
    for (const auto& w : c.codewords()) words.push_back(elements_json(c.ring(), w));
    out["codewords"] = words;
  }
  return out;
}

inline json gram_json(const Ring& r, const GramShape& g) {
  return {{"tag", to_string(g.kind)}, {"lambdas", elements_json(r, g.lambdas)}};
}

inline json report_json(const Ring& r, const MPCReport& rep) {
  json conds = json::array(), concl = json::array();
  for (const auto& c : rep.conditions) conds.push_back({{"id", c.id}, {"holds", verdict_json(c.holds)}, {"detail", c.detail}});
  for (const auto& c : rep.conclusions) concl.push_back({{"property", to_string(c.property)}, {"justified_by", c.justified_by}});
  return {{"gram", gram_json(r, rep.gram)}, {"conditions", conds}, {"conclusions", concl}};
}

inline json certificate_json(const std::string& family, const CertifiedMatrix& cm) {
  return {{"family", family},
          {"ring", cm.matrix.ring().describe()},
          {"matrix", format_matrix(cm.matrix)},
          {"entries", matrix_json(cm.matrix)},
          {"gram", gram_json(cm.matrix.ring(), cm.gram)},
          {"deltas", cm.deltas},
          {"hypotheses", cm.hypotheses}};
}

inline json scenario_json(const ScenarioResult& res) {
  json exps = json::array();
  for (const auto& e : res.expectations) exps.push_back({{"name", e.name}, {"pass", e.pass}, {"witness", e.witness}});
  return {{"scenario", res.id}, {"description", res.description}, {"expectations", exps}, {"passed", res.passed()}};
}

// ---------------------------------------------------------------------------
// Text views

// Re-parsable description; spanning set rather than raw generators so duals stay short.
inline std::string code_description(const LinearCode& c) {
  return format_code(LinearCode::span(c.ring(), c.length(), c.spanning_set()));
}

inline void print_code(std::ostream& out, const std::string& label, const LinearCode& c) {
  out << label << ": " << code_description(c) << "\n";
  out << "  size: " << c.size() << "\n";
  if (c.size() <= kListLimit) out << "  codewords: " << list_words(c.ring(), c.codewords()) << "\n";
}

inline void print_report(std::ostream& out, const Ring& r, const MPCReport& rep) {
  out << "gram: " << format_gram(r, rep.gram) << "\n";
  out << "conditions:\n";
  for (const auto& c : rep.conditions) out << "  " << c.id << ": " << to_string(c.holds) << " (" << c.detail << ")\n";
  out << "conclusions:\n";
  if (rep.conclusions.empty()) out << "  none\n";
  for (const auto& c : rep.conclusions) out << "  " << to_string(c.property) << " via " << c.justified_by << "\n";
}

// ---------------------------------------------------------------------------
// Input assembly

// Accepts `span <ring> len <m> { ... }` or a bare `{ (..), ... }` over `ring`.
inline LinearCode parse_code_arg(const std::optional<Ring>& ring, const std::string& src, const Budget& budget) {
  const auto first = src.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && src.compare(first, 4, "span") == 0) {
    LinearCode c = parse_code(src, budget);
    if (ring && !(c.ring() == *ring)) {
      throw RingMismatch("code ring " + c.ring().describe() + " differs from --ring " + ring->describe());
    }
    return c;
  }
  if (!ring) throw InvalidParameter("a bare generator list needs --ring; or write 'span <ring> len <m> { ... }'");
  text_detail::Parser p(src);
  p.expect("{");
  std::vector<Word> gens;
  if (p.accept("}")) throw InvalidParameter("empty generator list: write 'span <ring> len <m> { }' for a zero code");
  do {
    const auto tok = p.peek();
    gens.push_back(p.vector(*ring));
    if (gens.back().size() != gens.front().size()) {
      throw ParseError("generators have different lengths", tok.line, tok.column);
    }
  } while (p.accept(","));
  p.expect("}");
  p.expect_end();
  const std::size_t m = gens.front().size();
  return LinearCode::span(*ring, m, std::move(gens), budget);
}

struct SpecArgs {
  std::string ring;
  std::string matrix;
  std::vector<std::string> codes;
  bool use_dual_theorem = false;
};

inline std::optional<Ring> optional_ring(const std::string& desc) {
  if (desc.empty()) return std::nullopt;
  return parse_ring(desc);
}

inline MPCSpec build_spec(const SpecArgs& a, const Budget& budget) {
  if (a.ring.empty()) throw InvalidParameter("--ring is required with --matrix");
  const Ring r = parse_ring(a.ring);
  const Matrix m = parse_matrix(r, a.matrix);
  std::vector<LinearCode> codes;
  for (const auto& c : a.codes) codes.push_back(parse_code_arg(r, c, budget));
  return MPCSpec(std::move(codes), m);
}

// ---------------------------------------------------------------------------
// Commands

struct PropertyCheck {
  std::string property;
  Verdict holds;
  std::string detail;
};

inline int cmd_verify(const SpecArgs& args, const std::vector<std::string>& expect, const Budget& budget, Format fmt,
                      std::ostream& out) {
  for (const auto& e : expect) {
    if (std::find(property_names().begin(), property_names().end(), e) == property_names().end()) {
      throw InvalidParameter("unknown property '" + e + "' (known: self-orthogonal, self-dual, equivalence)");
    }
  }
  const MPCSpec spec = build_spec(args, budget);
  const LinearCode mpc = build_mpc(spec, budget);
  const MPCReport rep = check_conditions(spec, budget);

  std::optional<LinearCode> dual;
  if (args.use_dual_theorem) dual = mpc_dual_theorem(spec, budget);  // NotApplicable for singular A

  std::vector<PropertyCheck> checks;
  checks.push_back({"self-orthogonal", is_self_orthogonal(mpc) ? Verdict::Holds : Verdict::Fails, "generator pairs"});
  try {
    if (dual) {
      checks.push_back({"self-dual", dual->codewords() == mpc.codewords() ? Verdict::Holds : Verdict::Fails,
                        "compared with [C_1^perp ... C_s^perp](A^-1)^t"});
    } else {
      const LinearCode d = dual_bruteforce(mpc, budget);
      checks.push_back({"self-dual", d.codewords() == mpc.codewords() ? Verdict::Holds : Verdict::Fails,
                        "compared with brute-force dual"});
    }
  } catch (const BudgetExceeded& e) {
    checks.push_back({"self-dual", Verdict::Indeterminate, e.what()});
  }
  try {
    if (!spec.matrix().is_square()) {
      checks.push_back({"equivalence", Verdict::Fails, "A is not square"});
    } else {
      const LinearCode plain = build_mpc(spec.with_matrix(Matrix::identity(spec.ring(), spec.s())), budget);
      checks.push_back({"equivalence", plain.codewords() == mpc.codewords() ? Verdict::Holds : Verdict::Fails,
                        "[C_1 ... C_s]A compared with [C_1 ... C_s]"});
    }
  } catch (const BudgetExceeded& e) {
    checks.push_back({"equivalence", Verdict::Indeterminate, e.what()});
  }

  auto verdict_of = [&](const std::string& p) {
    for (const auto& c : checks)
      if (c.property == p) return c.holds;
    return Verdict::Indeterminate;
  };
  int code = 0;
  bool any_fail = false, any_unknown = false;
  for (const auto& e : expect) {
    any_fail |= verdict_of(e) == Verdict::Fails;
    any_unknown |= verdict_of(e) == Verdict::Indeterminate;
  }
  if (any_unknown) code = 2;
  else if (any_fail) code = 1;

  const Ring& r = spec.ring();
  if (fmt == Format::Json) {
    json inputs = json::array(), props = json::array(), exps = json::array();
    for (const auto& c : spec.inputs()) inputs.push_back(code_json(c));
    for (const auto& c : checks) props.push_back({{"property", c.property}, {"holds", verdict_json(c.holds)}, {"detail", c.detail}});
    for (const auto& e : expect) exps.push_back({{"property", e}, {"holds", verdict_json(verdict_of(e))}});
    json j = {{"command", "verify"}, {"ring", r.describe()},   {"matrix", matrix_json(spec.matrix())},
              {"inputs", inputs},    {"mpc", code_json(mpc)},   {"report", report_json(r, rep)},
              {"properties", props}, {"expectations", exps},    {"exit_code", code}};
    if (dual) j["dual"] = code_json(*dual);
    out << j.dump(2) << "\n";
    return code;
  }
  out << "ring: " << r.describe() << "\n";
  out << "matrix: " << format_matrix(spec.matrix()) << "\n";
  for (std::size_t i = 0; i < spec.s(); ++i) print_code(out, "C_" + std::to_string(i + 1), spec.inputs()[i]);
  print_code(out, "mpc", mpc);
  if (dual) print_code(out, "dual (theorem)", *dual);
  print_report(out, r, rep);
  out << "properties:\n";
  for (const auto& c : checks) out << "  " << c.property << ": " << to_string(c.holds) << " (" << c.detail << ")\n";
  for (const auto& e : expect) {
    const Verdict v = verdict_of(e);
    out << (v == Verdict::Holds ? "PASS" : v == Verdict::Fails ? "FAIL" : "UNKNOWN") << " expect " << e << "\n";
  }
  return code;
}

inline int cmd_reproduce(const std::string& id, const Budget& budget, Format fmt, std::ostream& out) {
  if (id.empty() || id == "list") {
    if (fmt == Format::Json) {
      out << json{{"scenarios", scenario_ids()}}.dump(2) << "\n";
    } else {
      for (const auto& s : scenario_ids()) out << s << "\n";
    }
    return 0;
  }
  const ScenarioResult res = run_scenario(id, budget);
  if (fmt == Format::Json) {
    out << scenario_json(res).dump(2) << "\n";
  } else {
    out << "scenario " << res.id << ": " << res.description << "\n";
    for (const auto& e : res.expectations) out << (e.pass ? "PASS " : "FAIL ") << e.name << ": " << e.witness << "\n";
    out << (res.passed() ? "all expectations hold" : "some expectations fail") << "\n";
  }
  return res.passed() ? 0 : 1;
}

inline int cmd_construct(const std::string& family, const std::string& ring_desc, const std::string& u_desc,
                         std::optional<std::size_t> s, const Budget& budget, Format fmt, std::ostream& out) {
  const Ring r = parse_ring(ring_desc);
  std::optional<RingElement> u;
  if (!u_desc.empty()) u = parse_element(r, u_desc);
  if (s && family != "block") throw InvalidParameter("--s only applies to the block family");
  CertifiedMatrix cm = [&] {
    if (family == "diag1") return diag1_matrix(r, u, budget);
    if (family == "adiag1a") return adiag1_matrix_a(r, u, budget);
    if (family == "adiag1b") return adiag1_matrix_b(r, u, budget);
    if (family == "adiag3") return adiag3_matrix(r, u, budget);
    if (family == "block") {
      if (!s) throw InvalidParameter("block needs --s");
      return block_adiag_matrix(r, u, *s, budget);
    }
    throw InvalidParameter("unknown family '" + family + "' (diag1, adiag1a, adiag1b, adiag3, block)");
  }();
  const json cert = certificate_json(family, cm);
  if (fmt == Format::Json) {
    out << cert.dump(2) << "\n";
  } else {
    out << format_matrix(cm.matrix) << "\n";
    out << "gram: " << format_gram(r, cm.gram) << "\n";
    out << "deltas: " << format_sizes(cm.deltas) << "\n";
    out << "certificate: " << cert.dump() << "\n";
  }
  return 0;
}

// Dual of a single code, or of the MPC when --matrix is given.
inline int cmd_dual(const SpecArgs& args, const Budget& budget, Format fmt, std::ostream& out) {
  LinearCode code = [&] {
    if (!args.matrix.empty()) {
      const MPCSpec spec = build_spec(args, budget);
      return args.use_dual_theorem ? mpc_dual_theorem(spec, budget) : dual_bruteforce(build_mpc(spec, budget), budget);
    }
    if (args.use_dual_theorem) throw InvalidParameter("--use-dual-theorem needs --matrix");
    if (args.codes.size() != 1) throw InvalidParameter("dual takes exactly one --code without --matrix");
    return dual_bruteforce(parse_code_arg(optional_ring(args.ring), args.codes.front(), budget), budget);
  }();
  if (fmt == Format::Json) {
    out << json{{"command", "dual"}, {"method", args.use_dual_theorem ? "theorem" : "bruteforce"}, {"code", code_json(code)}}
               .dump(2)
        << "\n";
  } else {
    print_code(out, "dual", code);
  }
  return 0;
}

inline int cmd_distance(const SpecArgs& args, const Budget& budget, Format fmt, std::ostream& out) {
  json j = {{"command", "distance"}};
  std::string text;
  if (!args.matrix.empty()) {
    const MPCSpec spec = build_spec(args, budget);
    const LinearCode mpc = build_mpc(spec, budget);
    const std::size_t d = min_distance(mpc, budget);
    j["length"] = mpc.length();
    j["size"] = mpc.size();
    j["min_distance"] = d;
    text = "length: " + std::to_string(mpc.length()) + "\nsize: " + std::to_string(mpc.size()) +
           "\nmin distance: " + std::to_string(d) + "\n";
    if (has_full_rank(spec.matrix(), budget)) {
      const auto terms = distance_bound_terms(spec, budget);
      json jt = json::array();
      std::string t;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        jt.push_back({{"input_distance", terms[i].input_distance}, {"row_distance", terms[i].row_distance}});
        t += (i ? ", " : "") + std::to_string(terms[i].input_distance) + "*" + std::to_string(terms[i].row_distance);
      }
      const std::size_t bound = min_distance_lower_bound(spec, budget);
      j["lower_bound"] = bound;
      j["bound_terms"] = jt;
      text += "lower bound: " + std::to_string(bound) + " = min{" + t + "}\n";
    } else {
      j["lower_bound"] = nullptr;
      text += "lower bound: not applicable (A is not full rank)\n";
    }
  } else {
    if (args.codes.size() != 1) throw InvalidParameter("distance takes exactly one --code without --matrix");
    const LinearCode c = parse_code_arg(optional_ring(args.ring), args.codes.front(), budget);
    const std::size_t d = min_distance(c, budget);
    j["length"] = c.length();
    j["size"] = c.size();
    j["min_distance"] = d;
    text = "length: " + std::to_string(c.length()) + "\nsize: " + std::to_string(c.size()) +
           "\nmin distance: " + std::to_string(d) + "\n";
  }
  if (fmt == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err, const char* env_budget) {
  CLI::App app{"Exact matrix-product code construction and verification over finite commutative rings",
               "ringcodes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget_flag, "Enumeration cap in candidate vectors (overrides RINGCODES_BUDGET)");

  SpecArgs spec_args;
  std::vector<std::string> expect;
  auto add_spec_options = [&](CLI::App* sub, bool matrix_required) {
    sub->add_option("--ring", spec_args.ring, "Ring, e.g. Z/20 or Z/9[x]/(x^2+x+2)");
    auto* m = sub->add_option("--matrix", spec_args.matrix, "Matrix literal, e.g. [[1,2],[0,0]]");
    if (matrix_required) m->required();
    sub->add_option("--code", spec_args.codes, "Input code: { (10), ... } or span <ring> len <m> { ... }")->required();
    sub->add_flag("--use-dual-theorem", spec_args.use_dual_theorem,
                  "Compute the MPC dual as [C_1^perp ... C_s^perp](A^-1)^t");
  };

  auto* verify = app.add_subcommand("verify", "Check every self-orthogonality/self-duality condition for [C_1 ... C_s]A");
  add_spec_options(verify, true);
  verify->add_option("--expect", expect, "Property that must hold: self-orthogonal, self-dual, equivalence");

  std::string scenario;
  auto* reproduce = app.add_subcommand("reproduce", "Run a named worked example");
  reproduce->add_option("scenario", scenario, "Scenario id, or 'list'");

  std::string family, ring_desc, u_desc;
  std::optional<std::size_t> s;
  auto* construct = app.add_subcommand("construct", "Build and certify a special matrix");
  construct->add_option("family", family, "diag1, adiag1a, adiag1b, adiag3 or block")->required();
  construct->add_option("--ring", ring_desc, "Ring description")->required();
  construct->add_option("--u", u_desc, "Parameter u (default: smallest square root of -1, or 1 for diag1)");
  construct->add_option("--s", s, "Size of the block matrix");

  auto* dual = app.add_subcommand("dual", "Dual of a code, or of an MPC when --matrix is given");
  add_spec_options(dual, false);
  auto* distance = app.add_subcommand("distance", "Minimum distance of a code, or of an MPC with its lower bound");
  add_spec_options(distance, false);

  std::vector<std::string> argv_store{"ringcodes"};
  argv_store.insert(argv_store.end(), argv_in.begin(), argv_in.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Budget budget = resolve_budget(budget_flag, env_budget);
    const Format fmt = format == "json" ? Format::Json : Format::Text;
    if (verify->parsed()) return cmd_verify(spec_args, expect, budget, fmt, out);
    if (reproduce->parsed()) return cmd_reproduce(scenario, budget, fmt, out);
    if (construct->parsed()) return cmd_construct(family, ring_desc, u_desc, s, budget, fmt, out);
    if (dual->parsed()) return cmd_dual(spec_args, budget, fmt, out);
    if (distance->parsed()) return cmd_distance(spec_args, budget, fmt, out);
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << " [" << e.hypothesis() << "]\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ringcodes::cli
