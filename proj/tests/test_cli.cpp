#include <doctest.h>

#include <json.hpp>

#include "frankl/cli.hpp"

using namespace frankl::cli;

namespace {

CommandConfig cmd(std::string name) {
  CommandConfig c;
  c.command = std::move(name);
  return c;
}

}  // namespace

TEST_CASE("f in text and json") {
  auto c = cmd("f");
  c.n = 3;
  c.a = 3;
  auto r = run(c);
  CHECK(r.exit_code == kOk);
  CHECK(r.out.find("f(3,3) = 5") != std::string::npos);
  c.format = Format::kJson;
  c.stable = true;
  auto j = nlohmann::json::parse(run(c).out);
  CHECK(j["value"] == 5);
  CHECK_FALSE(j.contains("nodes"));
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("missing or out-of-range arguments exit 1") {
  auto c = cmd("f");
  c.n = 3;
  CHECK(run(c).exit_code == kBadArguments);
  c.a = 3;
  c.n = 20;
  auto r = run(c);
  CHECK(r.exit_code == kBadArguments);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(run(cmd("frobnicate")).exit_code == kBadArguments);
  auto v = cmd("verify");
  v.claim = "no-such-claim";
  CHECK(run(v).exit_code == kBadArguments);
}

TEST_CASE("budget exhaustion exits 2") {
  auto c = cmd("f");
  c.n = 6;
  c.a = 6;
  c.budget.max_nodes = 10;
  CHECK(run(c).exit_code == kBudgetExhausted);
}

TEST_CASE("g in csv") {
  auto c = cmd("g");
  c.n = 4;
  c.m = 10;
  c.format = Format::kCsv;
  auto r = run(c);
  CHECK(r.exit_code == kOk);
  CHECK(r.out == "n,m,value,proven_optimal\n4,10,6,true\n");
}

TEST_CASE("bound, certify, lp") {
  auto b = cmd("bound");
  b.a = 7;
  CHECK(run(b).out.find("24") != std::string::npos);
  b.n = 9;
  b.a = 9;
  b.format = Format::kJson;
  auto jb = nlohmann::json::parse(run(b).out);
  CHECK(jb["exact"] == "1100/29");

  auto c = cmd("certify");
  c.n = 7;
  c.a = 7;
  auto rc = run(c);
  CHECK(rc.exit_code == kOk);
  CHECK(rc.out.find("387/16") != std::string::npos);
  // Below 7 the multipliers are reported but gamma < 0 is expected.
  c.n = 5;
  c.a.reset();
  auto r5 = run(c);
  CHECK(r5.exit_code == kOk);
  CHECK(r5.out.find("FAIL gamma-nonnegative") != std::string::npos);

  auto l = cmd("lp");
  l.n = 3;
  l.a = 3;
  l.format = Format::kJson;
  auto jl = nlohmann::json::parse(run(l).out);
  CHECK(jl["objective"] == "13/2");
}

TEST_CASE("verify reports violations with exit 3") {
  auto v = cmd("verify");
  v.claim = "monotonicity";
  CHECK(run(v).exit_code == kViolation);
  v.claim = "thm-f-2n-minus-n";
  v.n = 4;
  CHECK(run(v).exit_code == kOk);
}

TEST_CASE("witness is valid json") {
  auto w = cmd("witness");
  w.n = 4;
  w.a = 4;
  auto j = nlohmann::json::parse(run(w).out);
  CHECK(j["n"] == 4);
  CHECK(j["masks"].size() == 8);
}

TEST_CASE("tables") {
  auto t = cmd("table");
  t.what = "bound";
  t.from = 7;
  t.to = 16;
  t.format = Format::kCsv;
  auto r = run(t);
  CHECK(r.exit_code == kOk);
  CHECK(r.out.find("\n9,37\n") != std::string::npos);
  t.what = "f-aa";
  t.from = 1;
  t.to = 4;
  CHECK(run(t).out.find("4,8") != std::string::npos);
  t.what = "nope";
  CHECK(run(t).exit_code == kBadArguments);
}
