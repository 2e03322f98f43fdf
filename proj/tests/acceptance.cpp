// Acceptance battery: one PASS/FAIL line per criterion, exact equality throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cherednik/coinvariants.hpp"
#include "cherednik/harness.hpp"
#include "cherednik/hecke.hpp"

using namespace cherednik;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long instances = 0;

  void need(const CheckReport& r, const std::string& what) {
    instances += r.total_instances();
    if (r.total_instances() == 0) {
      ok = false;
      detail += what + ": no instances; ";
    }
    if (!r.passed()) {
      ok = false;
      detail += what + ": " + std::to_string(r.failure_count) + " failure(s)";
      if (!r.failures.empty()) detail += " first " + r.failures.front().check + " @ " + r.failures.front().input;
      detail += "; ";
    }
  }
  void need_fail(const CheckReport& r, const std::string& what) {
    instances += r.total_instances();
    if (r.passed()) {
      ok = false;
      detail += what + ": negative control passed; ";
    }
  }
  void need_true(bool b, const std::string& what) {
    if (!b) {
      ok = false;
      detail += what + "; ";
    }
  }
};

RunConfig cfg(std::string suite) {
  RunConfig c;
  c.suite = std::move(suite);
  return c;
}

Outcome c1_hecke() {
  Outcome o;
  struct Case {
    int N;
    GlModule U;
    std::string name;
  };
  const std::vector<Case> cases{{2, make_natural(2), "(2,2,natural)"},
                                {3, make_natural(2), "(2,3,natural)"},
                                {2, tensor(make_natural(3), make_natural(3)), "(3,2,natural*natural)"}};
  for (const auto& cs : cases)
    for (bool sl : {false, true}) {
      auto c = cfg(sl ? "hecke_fn" : "hecke_en");
      c.N = cs.N;
      c.modules = {cs.U.m() == 3 ? "natural:3*natural:3" : "natural:2"};
      o.need(run_suite(c), c.suite + " " + cs.name);
    }
  return o;
}

Outcome c2_dunkl_rational() {
  Outcome o;
  for (int N : {2, 3}) {
    auto c = cfg("dunkl_rational");
    c.N = N;
    c.degree = 5;
    o.need(run_suite(c), "N=" + std::to_string(N));
  }
  return o;
}

Outcome c3_trig() {
  Outcome o;
  for (int N : {2, 3}) {
    auto c = cfg("dunkl_trig");
    c.N = N;
    c.lo = -3;
    c.hi = 3;
    c.degree = 4;
    o.need(run_suite(c), "N=" + std::to_string(N));
  }
  return o;
}

Outcome c4_cybe() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    auto c = cfg("cybe");
    c.m = m;
    o.need(run_suite(c), "m=" + std::to_string(m));
  }
  return o;
}

Outcome c5_affine() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    auto c = cfg("affine_jacobi");
    c.m = m;
    o.need(run_suite(c), "jacobi m=" + std::to_string(m));
  }
  auto c = cfg("affine_rep");
  c.m = 2;
  c.lo = -2;
  c.hi = 2;
  c.depth = 2;
  c.samples = 40;
  o.need(run_suite(c), "representation");
  return o;
}

Outcome c6_prop15() {
  Outcome o;
  auto c = cfg("ast_prop15");
  c.samples = 200;
  c.seed = 6;
  o.need(run_suite(c), "prop15");
  return o;
}

Outcome c7_lemmas() {
  Outcome o;
  auto c = cfg("ast_lemmas3");
  c.samples = 100;
  c.seed = 7;
  o.need(run_suite(c), "lemmas + epsilon witness");
  return o;
}

Outcome c8_commutator() {
  Outcome o;
  auto c = cfg("ast_commutator_j");
  c.samples = 100;
  c.seed = 8;
  c.depth = 2;
  o.need(run_suite(c), "commutator + J");
  auto j = cfg("ast_j_element");
  o.need(run_suite(j), "J in q(x)q");
  auto bad = c;
  bad.level_offset = 1;
  bad.kappas = {Rational(5, 2)};
  o.need_fail(run_suite(bad), "level kappa-m+1");
  return o;
}

Outcome c9_qw() {
  Outcome o;
  auto c = cfg("prop15_qw");
  c.kappas = {Rational(5, 2)};
  c.samples = 100;
  c.seed = 9;
  c.depth = 2;
  o.need(run_suite(c), "qW preserved");
  auto bad = c;
  bad.level_offset = 1;
  bad.samples = 40;
  o.need_fail(run_suite(bad), "level kappa-m+1");
  return o;
}

Outcome c10_thm125() {
  Outcome o;
  struct Case {
    int m, n;
    std::vector<std::string> mods;
  };
  const std::vector<Case> cases{{1, 1, {"onedim:1:2", "onedim:1:-1"}},
                                {2, 1, {"natural:2", "onedim:1:-1"}},
                                {2, 2, {"natural:2", "natural:2"}}};
  for (const auto& cs : cases) {
    auto c = cfg("thm125");
    c.m = cs.m;
    c.n = cs.n;
    c.N = 2;
    c.depth = 2;
    c.modules = cs.mods;
    const std::string tag = "(" + std::to_string(cs.m) + "," + std::to_string(cs.n) + ",2)";
    o.need(run_suite(c), tag + " bound p-1");
    c.bound_shift = 1;
    o.need_fail(run_suite(c), tag + " bound p");
  }
  return o;
}

Outcome c11_thm17() {
  Outcome o;
  for (int N : {1, 2}) {
    auto c = cfg("thm17");
    c.N = N;
    c.kappas = {Rational(1), Rational(5, 2)};
    c.samples = 10000;  // exhaustive: both bounded bases are below the threshold
    c.seed = 11;
    o.need(run_suite(c), "N=" + std::to_string(N));
  }
  return o;
}

Outcome c12_reducers() {
  Outcome o;
  // Two-strategy agreement and idempotence run inside the criteria 9-11 suites
  // (nf_affine_soundness, thm125 strategies_agree/idempotent); here they are
  // re-run standalone and every report is checked for determinism.
  std::vector<RunConfig> configs;
  auto q = cfg("prop15_qw");
  q.kappas = {Rational(1)};
  q.samples = 30;
  q.seed = 12;
  q.depth = 1;
  configs.push_back(q);
  auto t = cfg("thm17");
  t.N = 2;
  t.kappas = {Rational(5, 2)};
  t.samples = 40;
  t.seed = 12;
  configs.push_back(t);
  auto f = cfg("thm125");
  f.m = 2;
  f.n = 2;
  f.depth = 2;
  configs.push_back(f);
  auto l = cfg("ast_lemmas3");
  l.kappas = {Rational(-7, 3)};
  l.samples = 10;
  l.depth = 1;
  l.lo = -1;
  l.hi = 1;
  configs.push_back(l);
  for (const auto& c : configs) {
    const auto a = run_suite(c);
    const auto b = run_suite(c);
    o.need(a, c.suite);
    bool strategies = false;
    for (const auto& [k, n] : a.instances)
      if (k.find("strategies_agree") != std::string::npos && n > 0) strategies = true;
    if (c.suite != "ast_lemmas3") o.need_true(strategies, c.suite + ": no strategy-agreement instances");
    o.need_true(a == b && emit_report(a, c) == emit_report(b, c), c.suite + ": reports differ across runs");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 Hecke suites", 30, c1_hecke},
      {"2 Dunkl rational", 60, c2_dunkl_rational},
      {"3 trigonometric + embedding", 120, c3_trig},
      {"4 classical Yang-Baxter", 10, c4_cybe},
      {"5 affine Jacobi + representation", 60, c5_affine},
      {"6 Cherednik operators on W", 300, c6_prop15},
      {"7 extended-space lemmas + epsilon family", 300, c7_lemmas},
      {"8 commutator formula + J element", 300, c8_commutator},
      {"9 qW preservation", 300, c9_qw},
      {"10 parabolic equivalence", 120, c10_thm125},
      {"11 trigonometric equivalence", 300, c11_thm17},
      {"12 reducer soundness + determinism", 900, c12_reducers},
  };
  int failed = 0;
  double total = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += s;
    if (s > cr.budget_s) {
      o.ok = false;
      o.detail += "over time budget; ";
    }
    std::printf("%s criterion %-42s %8.2fs (budget %4.0fs) instances=%ld%s%s\n", o.ok ? "PASS" : "FAIL", cr.name, s,
                cr.budget_s, o.instances, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  const bool in_budget = total <= 900;
  std::printf("%s battery total %.2fs (budget 900s)\n", in_budget ? "PASS" : "FAIL", total);
  return failed == 0 && in_budget ? 0 : 1;
}
