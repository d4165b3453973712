#include <iostream>

#include <CLI11.hpp>

#include "frankl/cli.hpp"

namespace {

using frankl::cli::CommandConfig;
using frankl::cli::Format;

void add_common(CLI::App* sub, CommandConfig& cfg, std::string& format, std::uint64_t& max_nodes,
                double& max_seconds) {
  sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--max-nodes", max_nodes, "node/pivot budget (0 = unlimited)");
  sub->add_option("--max-seconds", max_seconds, "time budget in seconds (0 = unlimited)");
  sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  sub->add_flag("--stable", cfg.stable, "omit node counts and timings");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around union-closed families"};
  app.require_subcommand(0, 1);

  CommandConfig cfg;
  std::string format = "text";
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  int n = 0;
  long a = 0;
  std::size_t m = 0;
  long from = 0;
  long to = 0;
  bool check_paper = false;

  app.add_flag("--check-paper", check_paper, "run the desk-scale reproduction suite");
  app.add_flag("--stretch", cfg.stretch, "with --check-paper, also run the stretch targets");

  auto* f = app.add_subcommand("f", "compute f(n,a)");
  f->add_option("--n", n)->required();
  f->add_option("--a", a)->required();

  auto* g = app.add_subcommand("g", "compute g(n,m)");
  g->add_option("--n", n)->required();
  g->add_option("--m", m)->required();

  auto* lp = app.add_subcommand("lp", "solve the linear relaxation exactly");
  lp->add_option("--n", n)->required();
  lp->add_option("--a", a)->required();

  auto* bound = app.add_subcommand("bound", "evaluate the certified upper bound");
  bound->add_option("--a", a)->required();
  bound->add_option("--n", n, "ground size (default: n = a, closed form)");

  auto* certify = app.add_subcommand("certify", "build and check the dual certificate");
  certify->add_option("--n", n)->required();
  certify->add_option("--a", a, "also map it onto the relaxation and check the dual bound");

  auto* verify = app.add_subcommand("verify", "run theorem and lemma checks");
  verify->add_option("--claim", cfg.claim, "claim id or 'all'");
  verify->add_option("--n", n, "restrict to one ground size");

  auto* table = app.add_subcommand("table", "reproduce a table");
  table->add_option("--what", cfg.what)->required()->check(CLI::IsMember({"f-aa", "bound", "fr"}));
  table->add_option("--from", from);
  table->add_option("--to", to);

  auto* witness = app.add_subcommand("witness", "emit an extremal family for f(n,a) as JSON");
  witness->add_option("--n", n)->required();
  witness->add_option("--a", a)->required();

  for (auto* sub : {f, g, lp, bound, certify, verify, table, witness}) add_common(sub, cfg, format, max_nodes, max_seconds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : frankl::cli::kBadArguments;
  }

  if (check_paper) {
    cfg.command = "check-paper";
  } else if (auto subs = app.get_subcommands(); !subs.empty()) {
    auto* sub = subs.front();
    cfg.command = sub->get_name();
    auto set_if = [sub](const char* flag) { return sub->get_option_no_throw(flag) && sub->count(flag) > 0; };
    if (set_if("--n")) cfg.n = n;
    if (set_if("--a")) cfg.a = a;
    if (set_if("--m")) cfg.m = m;
    if (set_if("--from")) cfg.from = from;
    if (set_if("--to")) cfg.to = to;
  } else {
    std::cerr << app.help();
    return frankl::cli::kBadArguments;
  }

  cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  if (max_nodes > 0) cfg.budget.max_nodes = max_nodes;
  if (max_seconds > 0) cfg.budget.max_seconds = max_seconds;

  const auto result = frankl::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
