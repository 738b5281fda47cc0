#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "shl/identities.hpp"
#include "shl/paramgen.hpp"
#include "shl/params.hpp"
#include "shl/rational.hpp"
#include "shl/report.hpp"
#include "shl/signature.hpp"

using namespace shl;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(SHL_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult result;
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

ordered_json parse_output(const RunResult& r) { return ordered_json::parse(r.output); }

}  // namespace

TEST_CASE("seeded parameters are reproducible") {
  ParamShape shape{.n_vars = 4, .needs_admissible = true};
  ParamSet a = generate_params(77, shape);
  ParamSet b = generate_params(77, shape);
  CHECK(a.t == b.t);
  CHECK(a.gamma == b.gamma);
  CHECK(a.u == b.u);
  CHECK(a.s.prefix() == b.s.prefix());
  CHECK(a.s.tail() == b.s.tail());

  ParamSet c = generate_params(78, shape);
  CHECK(a.u != c.u);
}

TEST_CASE("seeded parameters satisfy the requested shape") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    ParamShape shape{.n_vars = 2, .needs_admissible = true};
    ParamSet p = generate_params(seed, shape);
    CHECK_NOTHROW(p.validate_basic());
    CHECK(is_admissible(p));
    CHECK(p.u.size() == 2);
    CHECK(p.u[0] != p.u[1]);
  }

  ParamShape tight{.n_vars = 2,
                   .needs_admissible = true,
                   .epsilon = Rational(13, 20)};
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    ParamSet p = generate_params(seed, tight);
    std::vector<Rational> cols = p.s.prefix();
    cols.push_back(p.s.tail());
    for (const Rational& u : p.u)
      for (const Rational& s : cols)
        CHECK(contraction_within(u, s, Rational(13, 20)));
  }

  ParamShape zero{.n_vars = 2, .s_mode = SMode::zero};
  ParamSet zp = generate_params(5, zero);
  CHECK(zp.s.at(0) == 0);
  CHECK(zp.s.at(7) == 0);

  ParamShape unit{.n_vars = 2, .unit_gamma = true};
  CHECK(generate_params(6, unit).gamma == 1);
}

TEST_CASE("seeded signatures are odd and bounded") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Signature mu = generate_odd_signature(seed, 7, 6);
    CHECK(mu.size() % 2 == 1);
    CHECK(mu.size() <= 7);
    CHECK(mu.max_part() <= 6);
    CHECK(generate_odd_signature(seed, 7, 6) == mu);
  }
}

TEST_CASE("report serialization") {
  Report r;
  r.suite = "demo";
  r.set_sides(Rational(22, 7), Rational(3));
  r.verdict = Verdict::pass;
  r.trace.push_back(TracePoint{0, 0.5});
  auto j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["lhs"]["exact"] == "22/7");
  CHECK(j["rhs"]["exact"] == "3");
  CHECK(j["residual"] == "1/7");
  CHECK(j["verdict"] == "pass");
  CHECK(j["trace"][0]["max_part"] == 0);
  CHECK(j.contains("runtime_ms"));
  CHECK(j.contains("version"));
  CHECK_FALSE(j.contains("message"));
  CHECK(parse_rational(j["lhs"]["exact"].get<std::string>()) == Rational(22, 7));

  r.message = "something";
  CHECK(r.to_json()["message"] == "something");

  CHECK(verdict_exit_code(Verdict::pass) == 0);
  CHECK(verdict_exit_code(Verdict::fail) == 1);
  CHECK(verdict_exit_code(Verdict::error) == 2);
  CHECK(verdict_exit_code(Verdict::unsupported) == 3);
}

TEST_CASE("tool evaluates a signature both ways") {
  RunResult r = run_tool("eval f --lambda \"[1,0]\" --t 1/3 --s 0 --u 1/5,1/7");
  REQUIRE(r.exit_code == 0);
  auto j = parse_output(r);
  CHECK(j["suite"] == "eval-f");
  CHECK(j["lhs"]["exact"] == "16/105");
  CHECK(j["rhs"]["exact"] == "16/105");
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("tool evaluates the closed pfaffian side") {
  RunResult r = run_tool("eval pf --t 1/3 --gamma 2 --s 1/5 --u 1/7,1/11");
  REQUIRE(r.exit_code == 0);
  auto j = parse_output(r);

  ParamSet p;
  p.t = Rational(1, 3);
  p.gamma = Rational(2);
  p.s = InhomogeneitySequence::constant(Rational(1, 5));
  p.u = {Rational(1, 7), Rational(1, 11)};
  CHECK(j["lhs"]["exact"].get<std::string>() == rational_str(littlewood_rhs(p)));
}

TEST_CASE("tool verifies the refined identity from explicit parameters") {
  RunResult r = run_tool(
      "verify littlewood --t 1/3 --gamma 2 --s 1/5 --u 1/7,1/11 --max-part 12");
  REQUIRE(r.exit_code == 0);
  auto j = parse_output(r);
  CHECK(j["verdict"] == "pass");
  CHECK(j["plan"]["max_part"] == 12);
  CHECK(j["trace"].size() == 13);
}

TEST_CASE("tool verifies seeded suites") {
  CHECK(run_tool("verify ybe --seed 42").exit_code == 0);
  CHECK(run_tool("verify frozen --seed 5 --n 1").exit_code == 0);
  CHECK(run_tool("verify lemma-plus --seed 9").exit_code == 0);
}

TEST_CASE("tool reports inadmissible parameters as an error") {
  RunResult r = run_tool(
      "verify littlewood --t 1/3 --gamma 2 --s 1/5 --u 99/100,1/11");
  CHECK(r.exit_code == 2);
  auto j = parse_output(r);
  CHECK(j["verdict"] == "error");
}

TEST_CASE("tool usage errors") {
  CHECK(run_tool("verify littlewood --t 1/3").exit_code == 2);
  CHECK(run_tool("verify littlewood --seed 3 --t 1/2 --n 1").exit_code == 2);
  CHECK(run_tool("verify nosuchsuite --seed 3").exit_code == 2);
  CHECK(run_tool("eval littlewood --seed 3 --n 1").exit_code == 2);
  CHECK(run_tool("verify f --seed 3").exit_code == 2);
}

TEST_CASE("tool flags unsupported closure requests") {
  RunResult r = run_tool("verify lemma-plus --mu \"[2,2]\" --t 1/3 --s 1/5 --u 1/4");
  CHECK(r.exit_code == 3);
  auto j = parse_output(r);
  CHECK(j["verdict"] == "unsupported");
}

TEST_CASE("tool output is deterministic apart from timing") {
  const std::string cmd = "verify littlewood --seed 11 --n 1 --max-part 10";
  auto a = parse_output(run_tool(cmd));
  auto b = parse_output(run_tool(cmd));
  a["runtime_ms"] = 0;
  b["runtime_ms"] = 0;
  CHECK(a.dump() == b.dump());
}

TEST_CASE("tool writes json to a file when asked") {
  std::string path = "/tmp/shl_cli_test_out.json";
  std::remove(path.c_str());
  RunResult r = run_tool("eval f --lambda \"[0]\" --t 1/3 --s 1/5 --u 1/2 --json-out " + path);
  REQUIRE(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f);
  char buf[8192];
  std::size_t got = fread(buf, 1, sizeof buf, f);
  std::fclose(f);
  auto j = ordered_json::parse(std::string(buf, got));
  CHECK(j["lhs"]["exact"] == "20/27");
  std::remove(path.c_str());
}

TEST_CASE("tool reports its version") {
  RunResult r = run_tool("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.1.0") != std::string::npos);
}
