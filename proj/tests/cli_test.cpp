#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace ringcodes;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run_cli(std::vector<std::string> args, const char* env_budget = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env_budget);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::vector<std::string> kEx1 = {"--ring", "Z/20", "--matrix", "[[1,2],[0,0]]", "--code", "{ (10) }",
                                       "--code", "{ (4) }"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Cli, VerifyExampleOne) {
  const Invocation r = run_cli(with({"verify"}, with(kEx1, {"--expect", "self-orthogonal"})));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "gram: diag(5,0)"));
  EXPECT_TRUE(contains(r.out, "self-orthogonal via thm-self-orth-1"));
  EXPECT_TRUE(contains(r.out, "PASS expect self-orthogonal"));
  // the MPC is 10Z/20 x {0}, which is not self-dual
  const Invocation sd = run_cli(with({"verify"}, with(kEx1, {"--expect", "self-dual"})));
  EXPECT_EQ(sd.code, 1);
  EXPECT_TRUE(contains(sd.out, "FAIL expect self-dual"));
}

TEST(Cli, DualTheoremNeedsNonsingularMatrix) {
  const Invocation r = run_cli(with({"verify"}, with(kEx1, {"--use-dual-theorem"})));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "theorem requires non-singular A")) << r.err;
}

TEST(Cli, TrivialSpec) {
  const Invocation r = run_cli({"verify", "--ring", "Z/4", "--matrix", "[[1,0],[0,1]]", "--code", "span Z/4 len 1 {}",
                         "--code", "span Z/4 len 1 {}", "--expect", "self-orthogonal", "--expect", "equivalence"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli(with({"verify"}, with(kEx1, {"--expect", "self-orthogonl"}))).code, 2);
  const Invocation bad_matrix = run_cli({"verify", "--ring", "Z/20", "--matrix", "[[1,2],[0]]", "--code", "{ (1) }"});
  EXPECT_EQ(bad_matrix.code, 2);
  EXPECT_TRUE(contains(bad_matrix.err, "parse error at 1:8")) << bad_matrix.err;
  EXPECT_EQ(run_cli({"verify", "--ring", "Z/20", "--code", "{ (1) }"}).code, 2);  // --matrix missing
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"--format", "xml", "reproduce", "ex1"}).code, 2);
  EXPECT_EQ(run_cli({"reproduce", "nope"}).code, 2);
  // ring of a span form must agree with --ring
  EXPECT_EQ(run_cli({"dual", "--ring", "Z/4", "--code", "span Z/8 len 1 { (2) }"}).code, 2);
}

TEST(Cli, BudgetResolution) {
  // the MPC over Z/25 of length 4 has a 390625-word dual search
  const std::vector<std::string> args = {"verify", "--ring", "Z/25", "--matrix", "[[1,7],[7,1]]", "--code",
                                         "{ (1,7) }", "--code", "{ (1,7) }", "--expect", "self-dual"};
  const Invocation small_env = run_cli(args, "1000");
  EXPECT_EQ(small_env.code, 2);
  EXPECT_TRUE(contains(small_env.out, "UNKNOWN expect self-dual"));
  // flag beats the environment
  EXPECT_EQ(run_cli(with({"--budget", "1000000"}, args), "1000").code, 0);
  EXPECT_EQ(run_cli(args, "lots").code, 2);
  EXPECT_EQ(run_cli(with({"--budget", "0"}, args)).code, 2);
  EXPECT_EQ(cli::resolve_budget(std::nullopt, nullptr).max_candidates, Budget{}.max_candidates);
  EXPECT_EQ(cli::resolve_budget(std::nullopt, "77").max_candidates, 77u);
  EXPECT_EQ(cli::resolve_budget(5, "77").max_candidates, 5u);
}

TEST(Cli, Construct) {
  const Invocation a3 = run_cli({"construct", "adiag3", "--ring", "Z/25"});
  EXPECT_EQ(a3.code, 0) << a3.err;
  EXPECT_TRUE(contains(a3.out, "[[1,7],[7,1]]\n"));
  EXPECT_TRUE(contains(a3.out, "gram: adiag(14,14)"));
  EXPECT_TRUE(contains(a3.out, "deltas: (2,1)"));

  const Invocation d1 = run_cli({"construct", "diag1", "--ring", "Z/20"});
  EXPECT_EQ(d1.code, 2);
  EXPECT_TRUE(contains(d1.err, "2 is a zero divisor")) << d1.err;

  const Invocation b2 = run_cli({"--format", "json", "construct", "block", "--ring", "Z/25", "--s", "2"});
  const Invocation a3j = run_cli({"--format", "json", "construct", "adiag3", "--ring", "Z/25"});
  ASSERT_EQ(b2.code, 0);
  json jb = json::parse(b2.out), ja = json::parse(a3j.out);
  EXPECT_EQ(jb["family"], "block");
  jb.erase("family");
  ja.erase("family");
  EXPECT_EQ(jb, ja);

  const Invocation b3 = run_cli({"construct", "block", "--ring", "Z/25", "--u", "7", "--s", "3"});
  EXPECT_TRUE(contains(b3.out, "gram: adiag(14,1,14)"));
  EXPECT_TRUE(contains(b3.out, "deltas: (2,1,1)"));
  EXPECT_EQ(run_cli({"construct", "adiag1a", "--ring", "Z/20", "--u", "3"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "block", "--ring", "Z/25"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "adiag3", "--ring", "Z/25", "--s", "2"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "spiral", "--ring", "Z/25"}).code, 2);
}

TEST(Cli, ReproduceScenarios) {
  for (const std::string id : {"ex1", "ex2", "z25-selfdual", "prime-square:5", "lemma-diag1:Z/25:1",
                               "lemma-adiag1:Z/25", "lemma-adiag3:Z/13"}) {
    const Invocation r = run_cli({"reproduce", id});
    EXPECT_EQ(r.code, 0) << id << "\n" << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "all expectations hold")) << id;
    EXPECT_FALSE(contains(r.out, "FAIL ")) << id;
  }
  const Invocation list = run_cli({"reproduce", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_TRUE(contains(list.out, "z25-selfdual"));
  EXPECT_EQ(run_cli({"reproduce", "prime-square:7"}).code, 2);
  EXPECT_EQ(run_cli({"reproduce", "lemma-diag1:Z/20:1"}).code, 2);
}

TEST(Cli, DualAndDistance) {
  const Invocation d = run_cli({"dual", "--ring", "Z/20", "--code", "{ (4) }"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "size: 4"));
  const Invocation dm = run_cli(with({"--format", "json", "dual"}, kEx1));
  EXPECT_EQ(json::parse(dm.out)["code"]["size"], 200);
  const std::vector<std::string> z25 = {"--ring", "Z/25", "--matrix", "[[1,7],[7,1]]", "--code", "{ (1,7) }",
                                        "--code", "{ (1,7) }"};
  const Invocation viathm = run_cli(with({"--format", "json", "dual", "--use-dual-theorem"}, z25));
  EXPECT_EQ(json::parse(viathm.out)["code"]["size"], 625);
  const Invocation dist = run_cli(with({"distance"}, z25));
  EXPECT_EQ(dist.code, 0);
  EXPECT_TRUE(contains(dist.out, "min distance: 2"));
  EXPECT_TRUE(contains(dist.out, "lower bound: 2"));
  const Invocation singular = run_cli(with({"--format", "json", "distance"}, kEx1));
  const json js = json::parse(singular.out);
  EXPECT_EQ(js["min_distance"], 1);
  EXPECT_TRUE(js["lower_bound"].is_null());
  EXPECT_EQ(run_cli({"distance", "--code", "span Z/4 len 2 {}"}).code, 2);  // zero code
}

// ---------------------------------------------------------------------------

TEST(CliProperty, TextAndJsonVerdictsAgree) {
  support::Gen gen(support::test_seed());
  for (const Ring& r : {Ring::integers_mod(4), Ring::integers_mod(6), Ring::integers_mod(9)}) {
    for (int t = 0; t < 15; ++t) {
      const Matrix a = gen.matrix(r, 2, 2);
      std::vector<std::string> args = {"verify", "--ring", r.describe(), "--matrix", format_matrix(a)};
      for (int i = 0; i < 2; ++i) {
        args.push_back("--code");
        args.push_back(format_code(gen.code(r, 1 + (r.size() < 7 ? 1 : 0), 2)));
      }
      for (const auto& p : cli::property_names()) {
        args.push_back("--expect");
        args.push_back(p);
      }
      const Invocation text = run_cli(args);
      const Invocation js = run_cli(with({"--format", "json"}, args));
      ASSERT_EQ(text.code, js.code);
      const json j = json::parse(js.out);
      ASSERT_EQ(j["exit_code"], js.code);
      for (const auto& e : j["expectations"]) {
        const std::string word = e["holds"].is_null() ? "UNKNOWN" : e["holds"].get<bool>() ? "PASS" : "FAIL";
        ASSERT_TRUE(contains(text.out, word + " expect " + e["property"].get<std::string>())) << text.out;
      }
      for (const auto& c : j["report"]["conditions"]) {
        const std::string word = c["holds"].is_null() ? "indeterminate" : c["holds"].get<bool>() ? "holds" : "fails";
        ASSERT_TRUE(contains(text.out, "  " + c["id"].get<std::string>() + ": " + word)) << text.out;
      }
    }
  }
}

TEST(CliProperty, PrintedDescriptionsReparse) {
  support::Gen gen(support::test_seed() + 1);
  for (const Ring& r : support::small_rings()) {
    for (int t = 0; t < 5; ++t) {
      const LinearCode c = gen.code(r, 1 + gen.below(2), 2);
      const Invocation d = run_cli({"dual", "--code", format_code(c)});
      ASSERT_EQ(d.code, 0) << d.err;
      const auto start = d.out.find("span ");
      const auto end = d.out.find('\n', start);
      ASSERT_NE(start, std::string::npos);
      const LinearCode printed = parse_code(d.out.substr(start, end - start));
      ASSERT_EQ(printed, dual_bruteforce(c));
      const json j = json::parse(run_cli({"--format", "json", "dual", "--code", format_code(c)}).out);
      ASSERT_EQ(parse_ring(j["code"]["ring"].get<std::string>()), r);
      ASSERT_EQ(j["code"]["size"], printed.size());
    }
  }
}
