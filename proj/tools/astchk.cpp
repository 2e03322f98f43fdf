#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "cherednik/harness.hpp"

using namespace cherednik;

namespace {

std::vector<Rational> parse_kappas(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw ConfigError("--kappa: " + std::string(e.what()));
    }
  }
  return out;
}

void parse_window(const std::string& text, RunConfig& c) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("--window: expected lo..hi");
  try {
    c.lo = std::stoi(text.substr(0, dots));
    c.hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw ConfigError("--window: expected integers lo..hi, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("ASTCHK_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
  CLI::App app{"Exact verification suites for Cherednik-type operator identities"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kappa, window, level_offset = "0";
  auto* run = app.add_subcommand("run", "Run one verification suite");
  run->add_option("--suite", cfg.suite, "Suite name (see 'list')")->required();
  run->add_option("--m", cfg.m, "Rank m")->capture_default_str();
  run->add_option("--n", cfg.n, "Second rank n (thm125)")->capture_default_str();
  run->add_option("--N", cfg.N, "Number of tensor factors")->capture_default_str();
  run->add_option("--kappa", kappa, "Comma-separated rationals, e.g. 1,5/2,-7/3");
  run->add_option("--level-offset", level_offset, "Added to the level (nonzero: negative control)");
  run->add_option("--window", window, "x-exponent window lo..hi (default -2..2)");
  run->add_option("--depth", cfg.depth, "PBW depth bound")->capture_default_str();
  run->add_option("--degree", cfg.degree, "Total degree bound for polynomial suites")->capture_default_str();
  run->add_option("--bound-shift", cfg.bound_shift, "thm125: add to u_p (1 = read s_pp as identity)")
      ->capture_default_str();
  run->add_option("--samples", cfg.samples, "Key budget when sampling")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  run->add_option("--module", cfg.modules, "Module alias or JSON path (repeatable)");
  run->add_option("--format", cfg.format, "text or json")->capture_default_str();
  run->add_flag("--expect-fail", cfg.expect_fail, "Pass iff the checks fail (negative control)");

  auto* list = app.add_subcommand("list", "List suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& [name, _] : suite_registry()) std::cout << name << "\n";
    return 0;
  }
  try {
    if (!kappa.empty()) cfg.kappas = parse_kappas(kappa);
    if (!window.empty()) parse_window(window, cfg);
    cfg.level_offset = Rational::parse(level_offset);
    const CheckReport rep = run_suite(cfg);
    std::cout << emit_report(rep, cfg);
    return rep.passed() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
