#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "inclogic-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = inclogic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(INCLOGIC_DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, ModelCheck) {
  auto r = run({"mc", "--model", data("sample_model.json"), "--team", data("sample_team.json"),
                "--formula", "<>p", "--semantics", "lax"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "RESULT: true");

  const std::string box = "[]((p & [p <= r]) | (q & [q <= r]))";
  r = run({"mc", "--model", data("sample_model.json"), "--team", data("sample_team.json"), "--formula",
           box, "--semantics", "strict", "--stats"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "RESULT: false");
  EXPECT_NE(r.err.find("states:"), std::string::npos);
}

TEST(Cli, CheckerAgreesWithOracleOnFixtures) {
  for (const char* f : {"<>p", "[]((p & [p <= r]) | (q & [q <= r]))", "<>(p & [q <= r])", "[<>p <= q]"})
    for (const char* mode : {"lax", "strict"})
      for (const char* team : {"sample_team.json", "sample_team_w1.json"}) {
        auto fast = run({"mc", "--model", data("sample_model.json"), "--team", data(team), "--formula", f,
                         "--semantics", mode});
        auto slow = run({"oracle", "mc", "--model", data("sample_model.json"), "--team", data(team),
                         "--formula", f, "--semantics", mode});
        EXPECT_EQ(fast.out, slow.out) << f << ' ' << mode << ' ' << team;
        EXPECT_EQ(fast.code, slow.code);
      }
}

TEST(Cli, Trace) {
  auto r = run({"mc", "--model", data("sample_model.json"), "--team", data("sample_team.json"),
                "--formula", "<>p", "--trace"});
  EXPECT_EQ(r.err.rfind("round 1:", 0), 0U);
  EXPECT_EQ(first_line(r.out), "RESULT: true");
}

TEST(Cli, PropositionalCheck) {
  auto r = run({"mc-prop", "--team", data("sample_prop_team.json"), "--formula",
                "(p & [p <= r]) | (q & [q <= r])", "--semantics", "strict"});
  EXPECT_EQ(r.code, 1);
  r = run({"oracle", "prop", "--team", data("sample_prop_team.json"), "--formula",
           "(p & [p <= r]) | (q & [q <= r])", "--semantics", "lax"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, Validity) {
  auto r = run({"validity", "--logic", "plinc-strict", "--formula", "[p <= p]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "RESULT: valid");

  r = run({"validity", "--logic", "plinc-lax", "--formula", "[p <= q] | [q <= p]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "RESULT: invalid");
  const auto witness = inclogic::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(witness["domain"], (inclogic::json{"p", "q"}));

  r = run({"validity", "--logic", "minc-bounded", "--formula", "p | !p", "--max-worlds", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "RESULT: unknown");

  r = run({"validity", "--logic", "minc-bounded", "--formula", "[p <= q]", "--workers", "2"});
  EXPECT_EQ(r.code, 1);
  const auto model = inclogic::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_TRUE(model.contains("team"));
  EXPECT_TRUE(model.contains("worlds"));
}

TEST(Cli, Translate) {
  auto r = run({"translate", "inclusion-to-pl", "--formula", "[p <= q]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("((p & q) | (!p & !q))"), std::string::npos);
  r = run({"translate", "eminc-to-minc", "--model", data("sample_model.json"), "--formula", "[<>p <= q]"});
  EXPECT_NE(r.out.find("[f0 <= q]"), std::string::npos);
  r = run({"translate", "eminc-val-to-minc", "--formula", "[<>p <= q]"});
  EXPECT_NE(r.out.find("[f0 <= q]"), std::string::npos);
}

TEST(Cli, Generators) {
  auto r = run({"gen", "mcvp", "--circuit", data("circuit.txt"), "--input", "110", "--check", "lax"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "RESULT: true");
  r = run({"gen", "mcvp", "--circuit", data("circuit.txt"), "--input", "100"});
  EXPECT_EQ(first_line(r.out), "RESULT: false");
  r = run({"gen", "setsplit", "--family", data("triangle.txt"), "--check", "strict"});
  EXPECT_EQ(first_line(r.out), "RESULT: true");
  r = run({"gen", "dqbf", "--instance", data("dqbf_nonvalid.txt"), "--check", "lax"});
  EXPECT_EQ(first_line(r.out), "RESULT: true");
  r = run({"gen", "dqbf", "--instance", data("dqbf_valid.txt"), "--check", "strict"});
  EXPECT_EQ(first_line(r.out), "RESULT: true");
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"mc", "--model", "missing.json", "--team", "x", "--formula", "p"}).code, 2);
  auto r = run({"validity", "--formula", "!(p & q)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run({"mc-prop", "--team", data("sample_prop_team.json"), "--formula", "p",
                 "--semantics", "loose"}).code,
            2);
  EXPECT_EQ(run({"mc-prop", "--team", data("sample_prop_team.json"), "--formula", "z"}).code, 2);
  EXPECT_EQ(run({"gen", "mcvp", "--circuit", data("circuit.txt"), "--input", "1"}).code, 2);
}
