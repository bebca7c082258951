#include <CLI11.hpp>
#include <iostream>

#include "hh/cli/commands.hpp"
#include "hh/cli/render.hpp"
#include "hh/cli/verify.hpp"

int main(int argc, char** argv) {
  using namespace hh::cli;
  CLI::App app{"Formal Hodge diamonds of Springer resolutions for sl_m"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opt;
  bool no_cache = false;
  app.add_option("--jobs,-j", opt.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--no-cache", no_cache, "neither read nor write the result cache");

  int m = 3;
  std::string method = "bgg", format = "pretty", expr, lam = "0", suite = "all";

  auto* dia = app.add_subcommand("diamond", "formal Hodge diamond h^{i,j}");
  dia->add_option("--m", m, "rank + 1")->check(CLI::Range(2, 4));
  dia->add_option("--method", method)->check(CLI::IsMember({"bgg", "ce", "both"}));
  dia->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));

  auto* coh = app.add_subcommand("cohomology", "multiplicities of L_lam in H(G/B, G x_B E)");
  coh->add_option("--expr", expr, "bundle expression, e.g. \"wedge^2(n) (x) u\"")->required();
  coh->add_option("--m", m)->check(CLI::Range(2, 5));
  coh->add_option("--lam", lam, "highest weight: 0, rho, theta or a,b,...");
  coh->add_option("--method", method)->check(CLI::IsMember({"bgg", "ce", "both"}));
  coh->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

  auto* cmp = app.add_subcommand("compare-dc", "diamond against diagonal coinvariants");
  cmp->add_option("--m", m)->check(CLI::Range(2, 4));

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  ver->add_option("--m", m)->check(CLI::Range(2, 4));
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  ver->add_option("--suite", suite)->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }
  opt.use_cache = !no_cache;

  if (*dia) return cmd_diamond(m, method, format, opt, std::cout, std::cerr);
  if (*coh) return cmd_cohomology(expr, m, lam, method, format, opt, std::cout, std::cerr);
  if (*cmp) return cmd_compare_dc(m, opt, std::cout, std::cerr);
  return cmd_verify(m, suite, opt, std::cout, std::cerr);
}
