#include "cherednik/wspace.hpp"

#include <stdexcept>

#include "cherednik/dunkl.hpp"
#include "cherednik/hecke.hpp"

namespace cherednik {

namespace {

std::string idx(int p) { return std::to_string(p + 1); }

Exponent exponent_of(const BasisKey& k) { return Exponent(k.x.begin(), k.x.end()); }

void add_poly(Vec& out, const BasisKey& k, const LaurentPoly& a, const Rational& c = 1) {
  for (const auto& [e, v] : a.terms()) {
    BasisKey o = k;
    o.x.assign(e.begin(), e.end());
    out.add_term(std::move(o), v * c);
  }
}

}  // namespace

WSpace make_wspace(int N, InducedModule M, bool sl_correction, Rational kappa) {
  if (M.flavor() == Flavor::sl && !sl_correction)
    throw std::invalid_argument("make_wspace: an sl-induced module needs the sl correction");
  return WSpace{N, std::move(M), sl_correction, std::move(kappa)};
}

SpaceDesc w_space_desc(const WSpace& W, int lo, int hi, int depth) {
  SpaceDesc s;
  s.nvars = W.N;
  s.x_lo = lo;
  s.x_hi = hi;
  s.word_len = W.N;
  s.alphabet = W.m();
  s.module_keys = W.M.keys(depth);
  return s;
}

std::vector<BasisKey> w_keys(const WSpace& W, int lo, int hi, int depth, long samples, std::uint64_t seed) {
  return sample_basis(w_space_desc(W, lo, hi, depth), samples, seed);
}

LinOp<Rational> op_X(const WSpace&, int p, int power) { return x_op(p, power); }

LieElem y_loop_element(const WSpace& W, int b, int a, int i) {
  LieElem x = lie(LoopGen::E(b, a, i));
  if (W.sl_correction && a == b) {
    const Rational c(-1, W.m());
    for (int e = 0; e < W.m(); ++e) lie_add(x, LoopGen::E(e, e, i), c);
  }
  return x;
}

namespace {

// sum_{i=0}^{depth} sum_a x_p^{-i-1} E_{a w_p}^{(p)} (x) E_{w_p a} t^i applied to k, with
// every output multiplied by `scale` (a per-term callback receives the key and coefficient).
template <typename Emit>
void loop_terms(const WSpace& W, int p, const BasisKey& k, Emit&& emit) {
  const int depth = k.depth();
  const int b = k.word[p];
  for (int i = 0; i <= depth; ++i)
    for (int a = 0; a < W.m(); ++a) {
      BasisKey base = k;
      base.word[p] = a;
      for (auto&& [k2, c] : W.M.act(y_loop_element(W, b, a, i), base).terms()) emit(k2, c, -i - 1);
    }
}

}  // namespace

LinOp<Rational> op_Y(const WSpace& W, int p) {
  if (p < 0 || p >= W.N) throw std::out_of_range("op_Y: index out of range");
  return LinOp<Rational>("Y" + idx(p), [W, p](const BasisKey& k) {
    Vec out;
    const Exponent e = exponent_of(k);
    if (e[p] != 0) {
      BasisKey o = k;
      --o.x[p];
      out.add_term(std::move(o), W.kappa * Rational(e[p]));
    }
    for (int r = 0; r < W.N; ++r) {
      if (r == p) continue;
      BasisKey o = k;
      std::swap(o.word[p], o.word[r]);
      add_poly(out, o, monomial_divided_difference(p, r, e));
    }
    loop_terms(W, p, k, [&](BasisKey k2, const Rational& c, int shift) {
      k2.x[p] += shift;
      out.add_term(std::move(k2), c);
    });
    return out;
  });
}

LinOp<Rational> cherednik_z(const WSpace& W, int p) { return compose(op_X(W, p), op_Y(W, p)); }

// ---------------------------------------------------------------- extended space

ExtOp::ExtOp(std::string name, Fn fn) : name_(std::move(name)), fn_(std::make_shared<Fn>(std::move(fn))) {}

ExtVec ExtOp::apply(const ExtVec& v) const {
  ExtVec out;
  for (const auto& [k, c] : v.terms()) out += (*fn_)(k, c);
  return out;
}

ExtOp operator+(const ExtOp& a, const ExtOp& b) {
  return ExtOp(a.name() + " + " + b.name(), [a, b](const BasisKey& k, const DiffFrac& c) {
    ExtVec v(k, c);
    auto r = a.apply(v);
    r += b.apply(v);
    return r;
  });
}

ExtOp operator*(const Rational& s, const ExtOp& a) {
  return ExtOp(s.str() + "*(" + a.name() + ")", [s, a](const BasisKey& k, const DiffFrac& c) {
    ExtVec r;
    for (const auto& [k2, c2] : a.apply(ExtVec(k, c)).terms()) r.add_term(k2, c2 * s);
    return r;
  });
}

ExtOp compose(const ExtOp& a, const ExtOp& b) {
  return ExtOp("(" + a.name() + ")(" + b.name() + ")",
               [a, b](const BasisKey& k, const DiffFrac& c) { return a.apply(b.apply(ExtVec(k, c))); });
}

ExtOp commutator(const ExtOp& a, const ExtOp& b) {
  return ExtOp("[" + a.name() + ", " + b.name() + "]", [a, b](const BasisKey& k, const DiffFrac& c) {
    const ExtVec v(k, c);
    auto r = a.apply(b.apply(v));
    r -= b.apply(a.apply(v));
    return r;
  });
}

ExtVec embed(const Vec& v, int N) {
  ExtVec out;
  for (const auto& [k, c] : v.terms()) {
    BasisKey o = k;
    o.x.clear();
    out.add_term(std::move(o), DiffFrac(LaurentPoly::monomial(exponent_of(k), c)));
    (void)N;
  }
  return out;
}

std::optional<Vec> restrict_to_w(const ExtVec& v) {
  Vec out;
  for (const auto& [k, c] : v.terms()) {
    const DiffFrac r = c.reduced();
    if (!r.is_laurent()) return std::nullopt;
    add_poly(out, k, r.num());
  }
  return out;
}

DRT ext_DRT(const WSpace& W, int p) {
  if (p < 0 || p >= W.N) throw std::out_of_range("ext_DRT: index out of range");
  const int N = W.N;
  ExtOp D("D" + idx(p), [p](const BasisKey& k, const DiffFrac& c) { return ExtVec(k, partial(c, p)); });
  ExtOp R("R" + idx(p), [p, N](const BasisKey& k, const DiffFrac& c) {
    ExtVec out;
    for (int r = 0; r < N; ++r) {
      if (r == p) continue;
      BasisKey o = k;
      std::swap(o.word[p], o.word[r]);
      DiffFrac f = permute(c, Perm::transposition(p, r, N));
      f.mul_by_inverse_difference(p, r);
      out.add_term(std::move(o), f);
    }
    return out;
  });
  ExtOp T("T" + idx(p), [W, p, N](const BasisKey& k, const DiffFrac& c) {
    ExtVec out;
    for (int r = 0; r < N; ++r) {
      if (r == p) continue;
      BasisKey o = k;
      std::swap(o.word[p], o.word[r]);
      DiffFrac f = c;
      f.mul_by_inverse_difference(p, r);
      out.add_term(std::move(o), f);
    }
    loop_terms(W, p, k, [&](BasisKey k2, const Rational& v, int shift) {
      out.add_term(std::move(k2), c * DiffFrac(LaurentPoly::variable(N, p, shift)) * v);
    });
    return out;
  });
  return {D, R, T};
}

ExtOp ext_family(const WSpace& W, int p, const Rational& eps) {
  const auto [D, R, T] = ext_DRT(W, p);
  return W.kappa * D + eps * R + T;
}

namespace {

// check_identity for extended operators on embedded W-keys.
void ext_check(CheckReport& rep, const std::string& check, const std::string& tag, const ExtOp& lhs,
               const ExtOp& rhs, std::span<const BasisKey> keys, int N) {
  CheckReport part = for_each_key(keys, [&](const BasisKey& k) {
    CheckReport r;
    r.count(check);
    const ExtVec v = embed(Vec(k, 1), N);
    const ExtVec diff = lhs.apply(v) - rhs.apply(v);
    if (!diff.is_zero()) r.fail({check, tag + " " + key_str(k), "0", diff.str()});
    return r;
  });
  rep.merge(part);
}

ExtOp ext_zero() {
  return ExtOp("0", [](const BasisKey&, const DiffFrac&) { return ExtVec(); });
}

}  // namespace

CheckReport extended_lemma_suite(const WSpace& W, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "ast_lemmas3";
  rep.params["m"] = std::to_string(W.m());
  rep.params["N"] = std::to_string(W.N);
  rep.params["kappa"] = W.kappa.str();
  rep.params["flavor"] = flavor_str(W.M.flavor());
  rep.params["sl_correction"] = W.sl_correction ? "true" : "false";
  const int N = W.N;
  std::vector<DRT> ops;
  for (int p = 0; p < N; ++p) ops.push_back(ext_DRT(W, p));
  const auto zero = ext_zero();
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q) {
      const std::string tag = "p=" + idx(p) + " q=" + idx(q);
      const auto& a = ops[p];
      const auto& b = ops[q];
      ext_check(rep, "R_commute", tag, commutator(a.R, b.R), zero, keys, N);
      ext_check(rep, "T_commute", tag, commutator(a.T, b.T), zero, keys, N);
      ext_check(rep, "DR", tag, commutator(a.D, b.R) + commutator(a.R, b.D), zero, keys, N);
      ext_check(rep, "DT", tag, commutator(a.D, b.T) + commutator(a.T, b.D), zero, keys, N);
      ext_check(rep, "RT", tag, commutator(a.R, b.T) + commutator(a.T, b.R), zero, keys, N);
      ext_check(rep, "D_commute", tag, commutator(a.D, b.D), zero, keys, N);
      for (int eps : {0, 1, -1, 2})
        ext_check(rep, "eps_family", tag + " eps=" + std::to_string(eps),
                  commutator(ext_family(W, p, eps), ext_family(W, q, eps)), zero, keys, N);
    }
  // kappa D - R + T restricted to W is Y_p, with no surviving denominator.
  for (int p = 0; p < N; ++p) {
    const auto y = op_Y(W, p);
    const auto ext = ext_family(W, p, -1);
    rep.merge(for_each_key(keys, [&](const BasisKey& k) {
      CheckReport r;
      r.count("restriction");
      const auto w = restrict_to_w(ext.apply(embed(Vec(k, 1), N)));
      if (!w) r.fail({"restriction", "p=" + idx(p) + " " + key_str(k), "element of W", "denominator left"});
      else if (!(*w - y(k)).is_zero())
        r.fail({"restriction", "p=" + idx(p) + " " + key_str(k), y(k).str(), w->str()});
      return r;
    }));
  }
  return rep;
}

CheckReport epsilon_witness(const WSpace& W) {
  CheckReport rep;
  rep.name = "epsilon_witness";
  if (W.N < 2 || W.m() < 2) throw std::invalid_argument("epsilon_witness: needs N >= 2 and m >= 2");
  BasisKey k;
  k.x.assign(W.N, 0);
  k.x[0] = 1;
  k.word.assign(W.N, 0);
  k.word[1] = 1;
  k.base = 0;
  const auto v = embed(Vec(k, 1), W.N);
  const auto leaves = restrict_to_w(ext_family(W, 0, 0).apply(v));
  expect_true(rep, "eps0_leaves_W", !leaves.has_value(), key_str(k));
  const auto stays = restrict_to_w(ext_family(W, 0, -1).apply(v));
  expect_true(rep, "eps-1_preserves_W", stays.has_value(), key_str(k));
  return rep;
}

CheckReport cherednik_relation_suite(const WSpace& W, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "ast_prop15";
  rep.params["m"] = std::to_string(W.m());
  rep.params["N"] = std::to_string(W.N);
  rep.params["kappa"] = W.kappa.str();
  rep.params["level"] = W.M.level().str();
  rep.params["flavor"] = flavor_str(W.M.flavor());
  rep.params["sl_correction"] = W.sl_correction ? "true" : "false";
  const int N = W.N;
  const auto id = identity_op<Rational>();
  std::vector<LinOp<Rational>> y, z;
  for (int p = 0; p < N; ++p) {
    y.push_back(op_Y(W, p));
    z.push_back(cherednik_z(W, p));
  }
  auto s = [N](int p, int q) { return sigma_op(Perm::transposition(p, q, N)); };
  for (int p = 0; p < N; ++p) {
    const std::string tp = "p=" + idx(p);
    for (int q = p + 1; q < N; ++q) {
      const std::string tq = tp + " q=" + idx(q);
      check_into(rep, "Y_commute", tq, commutator(y[p], y[q]), zero_op<Rational>(), keys);
      check_into(rep, "ycom", tq, commutator(z[p], z[q]), compose(s(p, q), z[p] - z[q]), keys);
    }
    for (int q = 0; q < N; ++q)
      if (q != p)
        check_into(rep, "cross3", tp + " q=" + idx(q), commutator(y[p], op_X(W, q)), Rational(-1) * s(p, q), keys);
    std::vector<LinOp<Rational>> rhs{W.kappa * id};
    for (int r = 0; r < N; ++r)
      if (r != p) rhs.push_back(s(p, r));
    check_into(rep, "cross4", tp, commutator(y[p], op_X(W, p)), sum(rhs, "rhs"), keys);
    for (int t = 0; t + 1 < N; ++t) {
      const auto sig = sigma_op(Perm::simple(t, N));
      const int image = Perm::simple(t, N)(p);
      check_into(rep, "sirel", "s=" + idx(t) + " " + tp, compose(compose(sig, y[p]), sig), y[image], keys);
      check_into(rep, "yrel", "s=" + idx(t) + " " + tp, compose(compose(sig, z[p]), sig), z[image], keys);
    }
    for (const auto& [name, x] : lie_generators(W.m(), W.M.flavor() == Flavor::sl)) {
      LieElem g;
      for (int c = 0; c < W.m(); ++c)
        for (int d = 0; d < W.m(); ++d) lie_add(g, LoopGen::E(c, d, 0), x(c, d));
      check_into(rep, "theta_mode0", tp + " X=" + name, commutator(y[p], theta(N, W.M, g)), zero_op<Rational>(),
                 keys);
    }
  }
  if (W.sl_correction) {
    // Any gl-extension of the sl-action gives the same corrected operators.
    const InducedModule shifted(shift_trace(W.M.base(), Rational(1, 3)), W.M.level(), W.M.flavor());
    const WSpace W2{N, shifted, true, W.kappa};
    for (int p = 0; p < N; ++p) check_into(rep, "trace_shift", "p=" + idx(p), y[p], op_Y(W2, p), keys);
  }
  return rep;
}

CheckReport nonzero_mode_witness(const WSpace& W, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "nonzero_mode_witness";
  const auto c = commutator(op_Y(W, 0), theta(W.N, W.M, lie(LoopGen::E(0, 1, 1))));
  std::string found;
  for (const auto& k : keys)
    if (!c(k).is_zero()) {
      found = key_str(k);
      break;
    }
  expect_true(rep, "witness_found", !found.empty(), found.empty() ? "no key" : found);
  return rep;
}

namespace {

void check_level(const WSpace& W, bool require) {
  if (require && W.M.level() != W.kappa - Rational(W.m()))
    throw std::invalid_argument("level must be kappa - m = " + (W.kappa - Rational(W.m())).str() + ", got " +
                                W.M.level().str());
}

// (1/m) d_cd (m - kappa) j x_1^{j-1}, the extra term of the sl flavor.
LinOp<Rational> sl_term(const WSpace& W, int j, int c, int d) {
  if (!W.sl_correction || c != d) return zero_op<Rational>();
  const Rational coef = Rational(1, W.m()) * (Rational(W.m()) - W.kappa) * Rational(j);
  return coef * x_op(0, j - 1);
}

// Loop-side operator on factors 1 and r: sum_a (E_ca^{(1)} E_ad^{(r)} - E_ad^{(1)} E_ca^{(r)}).
void cross_pair(int m, int c, int d, int r, const BasisKey& k, const LaurentPoly& coef, Vec& out) {
  (void)m;
  if (k.word[r] == d) {  // a = w_1
    BasisKey o = k;
    o.word[r] = k.word[0];
    o.word[0] = c;
    add_poly(out, o, coef * LaurentPoly::monomial(exponent_of(k)));
  }
  if (k.word[0] == d) {  // a = w_r
    BasisKey o = k;
    o.word[0] = k.word[r];
    o.word[r] = c;
    add_poly(out, o, coef * LaurentPoly::monomial(exponent_of(k)), -1);
  }
}

LinOp<Rational> cross_factor_sum(const WSpace& W, int j, int c, int d) {
  return LinOp<Rational>("cross_factor_sum", [W, j, c, d](const BasisKey& k) {
    Vec out;
    Exponent e(W.N, 0);
    e[0] = j;
    for (int r = 1; r < W.N; ++r) {
      // (x_r^j - x_1^j) / (x_1 - x_r)
      const LaurentPoly coef = -monomial_divided_difference(0, r, e);
      cross_pair(W.m(), c, d, r, k, coef, out);
    }
    return out;
  });
}

// sum_{i=0}^{-j-1} sum_a x_1^{-i-1} (E_ca^{(1)} (x) E_ad t^{i+j} - E_ad^{(1)} (x) E_ca t^{i+j})
LinOp<Rational> module_sum(const WSpace& W, int j, int c, int d) {
  return LinOp<Rational>("module_sum", [W, j, c, d](const BasisKey& k) {
    Vec out;
    for (int i = 0; i <= -j - 1; ++i) {
      {
        const int a = k.word[0];
        BasisKey o = k;
        o.word[0] = c;
        o.x[0] += -i - 1;
        out += W.M.act(LoopGen::E(a, d, i + j), o);
      }
      if (k.word[0] == d)
        for (int a = 0; a < W.m(); ++a) {
          BasisKey o = k;
          o.word[0] = a;
          o.x[0] += -i - 1;
          out -= W.M.act(LoopGen::E(c, a, i + j), o);
        }
    }
    return out;
  });
}

// coef * x_1^{j-1} E_cd^{(1)}
LinOp<Rational> first_factor_term(int j, int c, int d, const Rational& coef) {
  return LinOp<Rational>("x1^(j-1)E_cd(1)", [j, c, d, coef](const BasisKey& k) {
    Vec out;
    if (k.word[0] != d) return out;
    BasisKey o = k;
    o.word[0] = c;
    o.x[0] += j - 1;
    out.add_term(std::move(o), coef);
    return out;
  });
}

}  // namespace

CheckReport commutator_formula_check(const WSpace& W, int j, int c, int d, std::span<const BasisKey> keys,
                                     bool require_level) {
  if (j >= 0) throw std::invalid_argument("commutator_formula_check: needs j < 0");
  check_level(W, require_level);
  CheckReport rep;
  rep.name = "ast_commutator";
  rep.params["j"] = std::to_string(j);
  rep.params["c"] = idx(c);
  rep.params["d"] = idx(d);
  rep.params["kappa"] = W.kappa.str();
  rep.params["level"] = W.M.level().str();
  const auto lhs = commutator(op_Y(W, 0), theta(W.N, W.M, lie(LoopGen::E(c, d, j))));
  const auto rhs = cross_factor_sum(W, j, c, d) + first_factor_term(j, c, d, Rational(W.m() * j)) + module_sum(W, j, c, d) -
                   sl_term(W, j, c, d);
  check_into(rep, "commutator", "j=" + std::to_string(j) + " c=" + idx(c) + " d=" + idx(d), lhs, rhs, keys);
  return rep;
}

namespace {

// J = sum_i sum_a (E_ad t^{i+j} (x) E_ca t^{-i-1} - E_ca t^{i+j} (x) E_ad t^{-i-1})
std::vector<std::tuple<LoopGen, LoopGen, Rational>> j_terms(int m, int j, int c, int d) {
  std::vector<std::tuple<LoopGen, LoopGen, Rational>> out;
  for (int i = 0; i <= -j - 1; ++i)
    for (int a = 0; a < m; ++a) {
      out.emplace_back(LoopGen::E(a, d, i + j), LoopGen::E(c, a, -i - 1), 1);
      out.emplace_back(LoopGen::E(c, a, i + j), LoopGen::E(a, d, -i - 1), -1);
    }
  return out;
}

// omega_r(J) for r in [0, N] (r == N is the module factor).
LinOp<Rational> omega(const WSpace& W, int r, int j, int c, int d) {
  std::vector<LinOp<Rational>> parts;
  for (const auto& [P, Q, coef] : j_terms(W.m(), j, c, d))
    parts.push_back(coef * compose(theta_r(W.N, W.M, r, lie(P)), theta_r(W.N, W.M, 0, lie(Q))));
  return sum(std::move(parts), "omega" + idx(r) + "(J)");
}

}  // namespace

CheckReport j_element_check(const WSpace& W, int j, int c, int d, std::span<const BasisKey> keys,
                            bool require_level) {
  if (j >= 0) throw std::invalid_argument("j_element_check: needs j < 0");
  check_level(W, require_level);
  CheckReport rep;
  rep.name = "ast_j_element";
  rep.params["j"] = std::to_string(j);
  rep.params["c"] = idx(c);
  rep.params["d"] = idx(d);
  rep.params["kappa"] = W.kappa.str();
  rep.params["level"] = W.M.level().str();
  const std::string tag = "j=" + std::to_string(j) + " c=" + idx(c) + " d=" + idx(d);
  const int N = W.N;
  std::vector<LinOp<Rational>> om;
  for (int r = 0; r <= N; ++r) om.push_back(omega(W, r, j, c, d));

  // omega_1(J) = j x_1^{j-1} (m E_cd^{(1)} - d_cd)
  auto w1 = first_factor_term(j, c, d, Rational(W.m() * j));
  if (c == d) w1 = w1 - Rational(j) * x_op(0, j - 1);
  check_into(rep, "omega_1", tag, om[0], w1, keys);
  for (int r = 1; r < N; ++r) {
    Exponent e(N, 0);
    e[0] = j;
    const LaurentPoly coef = -monomial_divided_difference(0, r, e);
    const auto single = LinOp<Rational>("cross_factor_term", [c, d, r, coef, m = W.m()](const BasisKey& k) {
      Vec out;
      cross_pair(m, c, d, r, k, coef, out);
      return out;
    });
    check_into(rep, "omega_r", tag + " r=" + idx(r), om[r], single, keys);
  }
  check_into(rep, "omega_module", tag, om[N], module_sum(W, j, c, d), keys);

  auto rhs = sum(om, "omega(J)");
  if (c == d) rhs = rhs + Rational(j) * x_op(0, j - 1);
  rhs = rhs - sl_term(W, j, c, d);
  const auto lhs = commutator(op_Y(W, 0), theta(N, W.M, lie(LoopGen::E(c, d, j))));
  check_into(rep, "commutator_J", tag, lhs, rhs, keys);
  return rep;
}

CheckReport j_membership_check(int m, int j, int c, int d) {
  CheckReport rep;
  rep.name = "j_membership";
  // labels: a*m+b (E_ab, a != b), m*m+a (H_a), m*m+m (I)
  const int trace = m * m + m;
  auto decompose = [m](int a, int b) {
    std::map<int, Rational> out;
    if (a != b) {
      out[a * m + b] = 1;
      return out;
    }
    const Rational inv(1, m);
    out[m * m + m] = inv;
    Rational partial = 0;
    for (int e = 0; e + 1 < m; ++e) {
      partial += (e == a ? Rational(1) : Rational(0)) - inv;
      if (!partial.is_zero()) out[m * m + e] = partial;
    }
    return out;
  };
  std::map<std::tuple<int, int, int, int>, Rational> tensor;  // (mode1, label1, mode2, label2)
  for (const auto& [P, Q, coef] : j_terms(m, j, c, d))
    for (const auto& [l1, c1] : decompose(P.a, P.b))
      for (const auto& [l2, c2] : decompose(Q.a, Q.b)) tensor[{P.j, l1, Q.j, l2}] += coef * c1 * c2;
  for (const auto& [key, v] : tensor) {
    const auto [j1, l1, j2, l2] = key;
    rep.count("q_modes");
    if (j1 >= 0 || j2 >= 0) rep.fail({"q_modes", std::to_string(j1) + "," + std::to_string(j2), "< 0", v.str()});
    if (l1 != trace && l2 != trace) continue;
    rep.count("trace_component");
    if (!v.is_zero())
      rep.fail({"trace_component", std::to_string(j1) + ":" + std::to_string(l1) + "," + std::to_string(j2) + ":" +
                                       std::to_string(l2),
                "0", v.str()});
  }
  return rep;
}

}  // namespace cherednik
