#include "cherednik/harness.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cherednik/affine.hpp"
#include "cherednik/coinvariants.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/wspace.hpp"

namespace cherednik {

void RunConfig::validate() const {
  if (kappas.empty()) throw ConfigError("kappa list is empty");
  if (lo > hi) throw ConfigError("window " + std::to_string(lo) + ".." + std::to_string(hi) + " is empty");
  if (m < 1 || m > 8 || n < 1 || n > 8 || N < 1 || N > 6) throw ConfigError("sizes out of range");
  if (depth < 0 || degree < 0) throw ConfigError("depth and degree must be >= 0");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (format != "text" && format != "json") throw ConfigError("format must be text or json");
}

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> e;
  e["suite"] = suite;
  e["m"] = std::to_string(m);
  e["n"] = std::to_string(n);
  e["N"] = std::to_string(N);
  std::string ks;
  for (std::size_t i = 0; i < kappas.size(); ++i) ks += (i ? "," : "") + kappas[i].str();
  e["kappa"] = ks;
  e["level_offset"] = level_offset.str();
  e["window"] = std::to_string(lo) + ".." + std::to_string(hi);
  e["depth"] = std::to_string(depth);
  e["degree"] = std::to_string(degree);
  e["bound_shift"] = std::to_string(bound_shift);
  e["samples"] = std::to_string(samples);
  e["seed"] = std::to_string(seed);
  std::string mods;
  for (std::size_t i = 0; i < modules.size(); ++i) mods += (i ? ";" : "") + modules[i];
  e["modules"] = mods;
  e["expect_fail"] = expect_fail ? "true" : "false";
  return e;
}

// ---------------------------------------------------------------- module specs

namespace {

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("module spec: bad " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Rational parse_rational_at(const std::string& text, const std::string& where) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError("module spec: " + where + ": " + e.what());
  }
}

GlModule module_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("module spec: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("module spec: " + path + ": " + e.what());
  }
  try {
    const int m = j.at("m").get<int>();
    const int dim = j.at("dim").get<int>();
    const auto& action = j.at("action");
    if (m < 1 || dim < 1) throw ConfigError("module spec: " + path + ": need m >= 1 and dim >= 1");
    if (!action.is_array() || static_cast<int>(action.size()) != m * m)
      throw ConfigError("module spec: " + path + ": action must list m^2 = " + std::to_string(m * m) + " matrices");
    std::vector<Matrix> mats;
    for (int t = 0; t < m * m; ++t) {
      const std::string loc = path + ": action[" + std::to_string(t) + "]";
      const auto& rows = action[t];
      if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw ConfigError("module spec: " + loc + ": expected " + std::to_string(dim) + " rows");
      Matrix mat(dim, dim);
      for (int r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim)
          throw ConfigError("module spec: " + loc + "[" + std::to_string(r) + "]: expected " + std::to_string(dim) +
                            " entries");
        for (int c = 0; c < dim; ++c) {
          const auto& e = rows[r][c];
          const std::string where = loc + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
          mat(r, c) = e.is_string() ? parse_rational_at(e.get<std::string>(), where)
                      : e.is_number_integer()
                          ? Rational(e.get<long>())
                          : throw ConfigError("module spec: " + where + ": expected an integer or rational string");
        }
      }
      mats.push_back(std::move(mat));
    }
    return GlModule(m, dim, std::move(mats));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("module spec: " + path + ": " + e.what());
  }
}

}  // namespace

GlModule parse_module_spec(const std::string& spec) {
  if (const auto star = spec.find('*'); star != std::string::npos)
    return tensor(parse_module_spec(spec.substr(0, star)), parse_module_spec(spec.substr(star + 1)));
  const auto parts = split(spec, ':');
  if (parts.size() >= 2 && (parts[0] == "natural" || parts[0] == "trivial" || parts[0] == "onedim")) {
    const int m = parse_int(parts[1], "rank");
    if (m < 1) throw ConfigError("module spec: rank must be >= 1");
    if (parts[0] == "natural" && parts.size() == 2) return make_natural(m);
    if (parts[0] == "trivial" && parts.size() == 2) return make_trivial(m);
    if (parts[0] == "onedim" && parts.size() == 3) {
      std::vector<Rational> w;
      for (const auto& s : split(parts[2], ',')) w.push_back(parse_rational_at(s, "onedim weight"));
      return make_onedim(m, w);
    }
    throw ConfigError("module spec: malformed alias '" + spec + "'");
  }
  return module_from_json(spec);
}

// ---------------------------------------------------------------- suites

namespace {

GlModule module_at(const RunConfig& c, std::size_t i, const GlModule& fallback) {
  return c.modules.size() > i ? parse_module_spec(c.modules[i]) : fallback;
}

std::string kappa_tag(const Rational& k) { return "kappa=" + k.str(); }

CheckReport hecke_suite(const RunConfig& c, bool sl) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  for (const Rational shift : {Rational(0), Rational(-U.m()), Rational(3, 2)}) {
    const HeckeFamily f{c.N, U, sl, shift};
    const auto keys = hecke_basis(f);
    rep.merge_prefixed("shift=" + shift.str(), hecke_relation_suite(f, keys));
  }
  return rep;
}

std::vector<BasisKey> w_sample(const WSpace& W, const RunConfig& c) {
  return subsample(w_keys(W, c.lo, c.hi, c.depth, c.samples, c.seed), c.samples, c.seed);
}

CheckReport cherednik_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  const Rational level = Rational(7, 3) + c.level_offset;
  for (const auto& kappa : c.kappas)
    for (Flavor f : {Flavor::gl, Flavor::sl}) {
      const WSpace W = make_wspace(c.N, InducedModule(U, level, f), f == Flavor::sl, kappa);
      rep.merge_prefixed(kappa_tag(kappa) + " " + flavor_str(f), cherednik_relation_suite(W, w_sample(W, c)));
    }
  const WSpace W = make_wspace(c.N, InducedModule(U, level, Flavor::gl), false, c.kappas.front());
  rep.merge_prefixed("witness", nonzero_mode_witness(W, w_keys(W, c.lo, c.hi, std::max(c.depth, 1), c.samples, c.seed)));
  return rep;
}

CheckReport lemmas_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  for (const auto& kappa : c.kappas) {
    const WSpace W = make_wspace(c.N, InducedModule(U, kappa - Rational(U.m()), Flavor::gl), false, kappa);
    rep.merge_prefixed(kappa_tag(kappa), extended_lemma_suite(W, w_sample(W, c)));
    if (c.N >= 2 && U.m() >= 2) rep.merge_prefixed(kappa_tag(kappa) + " epsilon", epsilon_witness(W));
  }
  return rep;
}

CheckReport commutator_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  const int m = U.m();
  const bool at_level = c.level_offset.is_zero();
  for (const auto& kappa : c.kappas)
    for (bool sl : {false, true}) {
      const WSpace W = make_wspace(c.N, InducedModule(U, kappa - Rational(m) + c.level_offset, Flavor::gl), sl, kappa);
      const auto keys = w_sample(W, c);
      const std::string tag = kappa_tag(kappa) + (sl ? " sl" : " gl");
      for (int j : {-1, -2})
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            rep.merge_prefixed(tag, commutator_formula_check(W, j, a, b, keys, at_level));
            rep.merge_prefixed(tag, j_element_check(W, j, a, b, keys, at_level));
          }
    }
  return rep;
}

CheckReport j_membership_runner(const RunConfig& c) {
  CheckReport rep;
  for (int j = -1; j >= -std::max(2, c.depth); --j)
    for (int a = 0; a < c.m; ++a)
      for (int b = 0; b < c.m; ++b) rep.merge_prefixed("j=" + std::to_string(j), j_membership_check(c.m, j, a, b));
  return rep;
}

CheckReport qw_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  for (const auto& kappa : c.kappas)
    for (Flavor f : {Flavor::gl, Flavor::sl}) {
      const InducedModule M(U, kappa - Rational(U.m()) + c.level_offset, f);
      const WSpace W = make_wspace(c.N, M, f == Flavor::sl, kappa);
      const auto keys = w_sample(W, c);
      const std::string tag = kappa_tag(kappa) + " " + flavor_str(f);
      rep.merge_prefixed(tag, check_qw_preservation(W, keys, c.depth));
      rep.merge_prefixed(tag + " nf", nf_affine_soundness(c.N, M, keys));
    }
  return rep;
}

CheckReport trig_equivalence_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  SpaceDesc s;
  s.nvars = c.N;
  s.x_lo = c.lo;
  s.x_hi = c.hi;
  s.word_len = c.N;
  s.alphabet = U.m();
  for (int b = 0; b < U.dim(); ++b) s.module_keys.emplace_back(IntSeq{}, b);
  const auto model = subsample(sample_basis(s, c.samples, c.seed), c.samples, c.seed);
  for (const auto& kappa : c.kappas) {
    const Rational level = kappa - Rational(U.m()) + c.level_offset;
    const WSpace W = make_wspace(c.N, InducedModule(U, level, Flavor::sl), true, kappa);
    const auto keys = w_sample(W, c);
    rep.merge_prefixed(kappa_tag(kappa), check_trig_equivalence(U, c.N, kappa, model, keys, c.level_offset));
    rep.merge_prefixed(kappa_tag(kappa) + " nf", nf_affine_soundness(c.N, W.M, keys));
  }
  return rep;
}

CheckReport parabolic_runner(const RunConfig& c) {
  const GlModule U = module_at(c, 0, c.m == 1 ? make_onedim(1, {2}) : make_natural(c.m));
  const GlModule V = module_at(c, 1, c.n == 1 ? make_onedim(1, {-1}) : make_natural(c.n));
  return check_parabolic_equivalence(U, V, c.N, c.depth, c.bound_shift);
}

CheckReport dunkl_rational_runner(const RunConfig& c) {
  CheckReport rep;
  for (const auto& kappa : c.kappas)
    rep.merge_prefixed(kappa_tag(kappa), rational_relation_suite(CherednikParams{c.N, kappa}, c.degree));
  return rep;
}

CheckReport dunkl_trig_runner(const RunConfig& c) {
  CheckReport rep;
  for (const auto& kappa : c.kappas) {
    const CherednikParams p{c.N, kappa};
    rep.merge_prefixed(kappa_tag(kappa), trig_relation_suite(p, c.lo, c.hi));
    rep.merge_prefixed(kappa_tag(kappa) + " embedding", embedding_check(p, c.degree));
  }
  return rep;
}

CheckReport affine_rep_runner(const RunConfig& c) {
  CheckReport rep;
  const GlModule U = module_at(c, 0, make_natural(c.m));
  for (Flavor f : {Flavor::gl, Flavor::sl}) {
    const InducedModule M(U, Rational(7, 3) + c.level_offset, f);
    rep.merge_prefixed(flavor_str(f), affine_rep_check(M, c.lo, c.hi, c.depth));
    SpaceDesc s;
    s.nvars = c.N;
    s.x_lo = c.lo;
    s.x_hi = c.hi;
    s.word_len = c.N;
    s.alphabet = U.m();
    s.module_keys = M.keys(c.depth);
    const auto keys = subsample(sample_basis(s, c.samples, c.seed), std::min<long>(c.samples, 40), c.seed);
    rep.merge_prefixed(flavor_str(f) + " theta", theta_rep_check(c.N, M, c.lo, c.hi, keys));
  }
  return rep;
}

}  // namespace

const std::map<std::string, SuiteRunner>& suite_registry() {
  static const std::map<std::string, SuiteRunner> reg{
      {"hecke_en", [](const RunConfig& c) { return hecke_suite(c, false); }},
      {"hecke_fn", [](const RunConfig& c) { return hecke_suite(c, true); }},
      {"dunkl_rational", dunkl_rational_runner},
      {"dunkl_trig", dunkl_trig_runner},
      {"cybe", [](const RunConfig& c) { return check_cybe(c.m); }},
      {"casimir", [](const RunConfig& c) { return casimir_split_check(c.m); }},
      {"affine_jacobi", [](const RunConfig& c) { return affine_jacobi_check(c.m, c.lo, c.hi); }},
      {"affine_rep", affine_rep_runner},
      {"ast_prop15", cherednik_runner},
      {"ast_lemmas3", lemmas_runner},
      {"ast_commutator_j", commutator_runner},
      {"ast_j_element", j_membership_runner},
      {"prop15_qw", qw_runner},
      {"thm17", trig_equivalence_runner},
      {"thm125", parabolic_runner},
  };
  return reg;
}

CheckReport run_suite(const RunConfig& config) {
  config.validate();
  const auto& reg = suite_registry();
  const auto it = reg.find(config.suite);
  if (it == reg.end()) throw ConfigError("unknown suite '" + config.suite + "'");
  CheckReport rep;
  try {
    rep = it->second(config);
  } catch (const ModuleError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  rep.name = config.suite;
  if (config.expect_fail) {
    CheckReport wrapped;
    wrapped.name = config.suite;
    wrapped.params = rep.params;
    wrapped.instances = rep.instances;
    expect_true(wrapped, "expected_failure", !rep.passed(), "negative control", "all checks passed");
    if (!rep.failures.empty()) {
      const auto& f = rep.failures.front();
      wrapped.params["witness"] = f.check + " @ " + f.input + " expected " + f.expected + " got " + f.actual;
      wrapped.params["underlying_failures"] = std::to_string(rep.failure_count);
    }
    return wrapped;
  }
  return rep;
}

std::string emit_report(const CheckReport& report, const RunConfig& config) {
  const bool pass = report.passed();
  if (config.format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = config.suite;
    j["config"] = config.echo();
    j["status"] = pass ? "pass" : "fail";
    j["expect_fail"] = config.expect_fail;
    j["instances"] = report.instances;
    j["total_instances"] = report.total_instances();
    j["params"] = report.params;
    j["failure_count"] = report.failure_count;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures)
      j["failures"].push_back({{"check", f.check}, {"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "suite " << config.suite << ": " << (pass ? "PASS" : "FAIL");
  if (config.expect_fail) os << " (expected failure mode)";
  os << "\n  instances: " << report.total_instances() << " across " << report.instances.size() << " checks\n";
  for (const auto& [k, v] : report.instances) os << "    " << k << ": " << v << "\n";
  if (const auto w = report.params.find("witness"); w != report.params.end())
    os << "  witness of the expected failure: " << w->second << "\n";
  if (!report.failures.empty()) {
    os << "  failures (showing " << report.failures.size() << "):\n";
    for (const auto& f : report.failures)
      os << "    [" << f.check << "] " << f.input << "\n      expected: " << f.expected << "\n      actual:   " << f.actual
         << "\n";
  }
  if (!pass) os << "  failure_count: " << report.failure_count << "\n";
  return os.str();
}

}  // namespace cherednik
