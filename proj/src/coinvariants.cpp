#include "cherednik/coinvariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cherednik/hecke.hpp"
#include "cherednik/laurent.hpp"

namespace cherednik {

namespace {

std::string idx(int p) { return std::to_string(p + 1); }

Vec apply_all(const std::function<Vec(const BasisKey&)>& f, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v.terms()) out.axpy(c, f(k));
  return out;
}

// -sum_q x_q^{-k} F^{(q)} applied to the loop factors of `rest`, F the finite part of `id`
// made traceless when `traceless` (E_aa -> E_aa - I/m).
Vec loop_side(int N, int m, int id, const BasisKey& rest, bool traceless = false) {
  const int k = pbw_mode(id), a = pbw_row(id), b = pbw_col(id);
  std::vector<std::tuple<int, int, Rational>> parts;  // E_cd with coefficient
  if (b == kCartan) {
    parts.emplace_back(a, a, 1);
    parts.emplace_back(a + 1, a + 1, -1);
  } else {
    parts.emplace_back(a, b, 1);
    if (traceless && a == b)
      for (int c = 0; c < m; ++c) parts.emplace_back(c, c, Rational(-1, m));
  }
  Vec out;
  for (int q = 0; q < N; ++q)
    for (const auto& [c, d, s] : parts) {
      if (rest.word[q] != d) continue;
      BasisKey o = rest;
      o.word[q] = c;
      if (!o.x.empty()) o.x[q] -= k;
      out.add_term(std::move(o), -s);
    }
  return out;
}

// Multiplies every key of v by the trace factors `traces` (they commute with q).
Vec with_traces(const Vec& v, const IntSeq& traces) {
  if (traces.empty()) return v;
  Vec out;
  for (const auto& [k, c] : v.terms()) {
    BasisKey o = k;
    for (int id : traces) o.mono.insert(std::upper_bound(o.mono.begin(), o.mono.end(), id), id);
    out.add_term(std::move(o), c);
  }
  return out;
}

Vec nf_affine_key(int N, const InducedModule& M, const BasisKey& k, NfStrategy s);

// Reduces a key free of trace factors.
Vec nf_affine_plain(int N, const InducedModule& M, const BasisKey& k, NfStrategy s) {
  if (k.mono.empty()) return Vec(k, 1);
  const bool gl = M.flavor() == Flavor::gl;
  const int m = M.m();
  BasisKey rest = k;
  Vec out;
  const int id = s == NfStrategy::leftmost ? k.mono.front() : k.mono.back();
  if (s == NfStrategy::leftmost) rest.mono.erase(rest.mono.begin());
  else rest.mono.pop_back();
  auto reduce_into = [&](const Vec& v, const Rational& c) {
    for (const auto& [k2, c2] : v.terms()) out.axpy(c * c2, nf_affine_key(N, M, k2, s));
  };
  // id * rest == -(loop side of the q-part) rest + (1/m) I t^{-k} rest for diagonal gl factors.
  const bool diagonal = gl && pbw_row(id) == pbw_col(id);
  reduce_into(loop_side(N, m, id, rest, diagonal), 1);
  if (diagonal)
    out.axpy(Rational(1, m), with_traces(nf_affine_key(N, M, rest, s), IntSeq{pbw_trace_id(pbw_mode(id))}));
  if (s == NfStrategy::rightmost) {
    // id * rest re-sorts to k plus terms with fewer factors of the same depth.
    Vec corr = M.multiply(id, rest);
    corr.add_term(k, Rational(-1));
    reduce_into(corr, -1);
  }
  return out;
}

Vec nf_affine_key(int N, const InducedModule& M, const BasisKey& k, NfStrategy s) {
  IntSeq traces;
  BasisKey plain = k;
  plain.mono.clear();
  for (int id : k.mono) (pbw_is_trace(id) ? traces : plain.mono).push_back(id);
  return with_traces(nf_affine_plain(N, M, plain, s), traces);
}

}  // namespace

Vec nf_affine(int N, const InducedModule& M, const BasisKey& k, NfStrategy s) { return nf_affine_key(N, M, k, s); }

Vec nf_affine(int N, const InducedModule& M, const Vec& w, NfStrategy s) {
  return apply_all([&](const BasisKey& k) { return nf_affine_key(N, M, k, s); }, w);
}

// ---------------------------------------------------------------- T_N model

LinOp<Rational> tn_x(const TnModel&, int p, int power) {
  return LinOp<Rational>("x" + idx(p) + "^" + std::to_string(power), [p, power](const BasisKey& k) {
    BasisKey o = k;
    o.x[p] += power;
    return Vec(std::move(o), 1);
  });
}

LinOp<Rational> tn_sigma(const TnModel&, const Perm& s) { return sigma_op(s); }

namespace {

// [z_p, x_q] applied to k.
Vec z_x_commutator(const TnModel& T, int p, int q, const BasisKey& k) {
  Vec out;
  auto xp_sigma = [&](int r, const Rational& c) {
    BasisKey o = permute_word(k, Perm::transposition(p, r, T.N));
    ++o.x[p];
    out.add_term(std::move(o), c);
  };
  if (q != p) {
    xp_sigma(q, -1);
    return out;
  }
  BasisKey o = k;
  ++o.x[p];
  out.add_term(std::move(o), T.kappa);
  for (int r = 0; r < T.N; ++r)
    if (r != p) xp_sigma(r, 1);
  return out;
}

Vec shift_x(const Vec& v, int q, int power) {
  Vec out;
  for (const auto& [k, c] : v.terms()) {
    BasisKey o = k;
    o.x[q] += power;
    out.add_term(std::move(o), c);
  }
  return out;
}

Vec tn_z_rec(const TnModel& T, const LinOp<Rational>& fz, int p, const BasisKey& k) {
  int q = 0;
  while (q < T.N && k.x[q] == 0) ++q;
  if (q == T.N) return fz(k);
  BasisKey g = k;
  Vec out;
  if (k.x[q] > 0) {
    --g.x[q];
    out = shift_x(tn_z_rec(T, fz, p, g), q, 1);
    out += z_x_commutator(T, p, q, g);
  } else {
    ++g.x[q];
    out = shift_x(tn_z_rec(T, fz, p, g), q, -1);
    out -= shift_x(z_x_commutator(T, p, q, k), q, -1);
  }
  return out;
}

}  // namespace

LinOp<Rational> tn_z(const TnModel& T, int p) {
  const auto fz = fn_z(T.U, T.N, p);
  return LinOp<Rational>("z" + idx(p), [T, fz, p](const BasisKey& k) { return tn_z_rec(T, fz, p, k); });
}

LinOp<Rational> tn_z_closed(const TnModel& T, int p) {
  const auto fz = fn_z(T.U, T.N, p);
  return LinOp<Rational>("z" + idx(p) + "_closed", [T, fz, p](const BasisKey& k) {
    Vec out = fz(k);
    out.add_term(k, T.kappa * Rational(k.x[p]));
    const Exponent e(k.x.begin(), k.x.end());
    for (int r = 0; r < T.N; ++r) {
      if (r == p) continue;
      BasisKey o = k;
      std::swap(o.word[p], o.word[r]);
      for (const auto& [e2, c] : monomial_divided_difference(p, r, e).terms()) {
        o.x.assign(e2.begin(), e2.end());
        ++o.x[p];
        out.add_term(o, c);
      }
    }
    return out;
  });
}

namespace {

// nf(lhs(k)) against rhs(nf(k)) for every key.
void nf_equivariance(CheckReport& rep, const std::string& check, const std::string& tag,
                     const std::function<Vec(const Vec&)>& nf, const LinOp<Rational>& lhs,
                     const LinOp<Rational>& rhs, std::span<const BasisKey> keys) {
  rep.merge(for_each_key(keys, [&](const BasisKey& k) {
    CheckReport r;
    r.count(check);
    const Vec left = nf(lhs(k));
    const Vec right = rhs.apply(nf(Vec(k, 1)));
    if (!(left == right)) r.fail({check, tag + " " + key_str(k), right.str(), left.str()});
    return r;
  }));
}

}  // namespace

CheckReport check_trig_equivalence(const GlModule& U, int N, const Rational& kappa, std::span<const BasisKey> model_keys,
                         std::span<const BasisKey> w_keys, const Rational& level_offset) {
  const int m = U.m();
  const Rational level = kappa - Rational(m) + level_offset;
  CheckReport rep;
  rep.name = "thm17";
  rep.params["m"] = std::to_string(m);
  rep.params["N"] = std::to_string(N);
  rep.params["kappa"] = kappa.str();
  rep.params["level"] = level.str();
  const WSpace W = make_wspace(N, InducedModule(U, level, Flavor::sl), true, kappa);
  const TnModel T{N, U, kappa};
  auto nf = [&](const Vec& v) { return nf_affine(N, W.M, v); };

  std::vector<std::tuple<std::string, LinOp<Rational>, LinOp<Rational>>> gens;
  for (int p = 0; p < N; ++p) {
    gens.emplace_back("x" + idx(p), op_X(W, p), tn_x(T, p));
    gens.emplace_back("x" + idx(p) + "^-1", op_X(W, p, -1), tn_x(T, p, -1));
    gens.emplace_back("z" + idx(p), cherednik_z(W, p), tn_z(T, p));
  }
  for (int t = 0; t + 1 < N; ++t)
    gens.emplace_back("s" + idx(t), sigma_op(Perm::simple(t, N)), tn_sigma(T, Perm::simple(t, N)));

  for (const auto& k : model_keys)
    if (k.depth() != 0) throw std::invalid_argument("check_trig_equivalence: model keys must have depth 0");
  for (const auto& [name, gw, gm] : gens) {
    nf_equivariance(rep, "model_equivariance", name, nf, gw, gm, model_keys);
    nf_equivariance(rep, "projection_equivariance", name, nf, gw, gm, w_keys);
  }
  for (int p = 0; p < N; ++p) {
    check_into(rep, "model_z_closed_form", "p=" + idx(p), tn_z(T, p), tn_z_closed(T, p), model_keys);
    for (int q = p + 1; q < N; ++q)
      check_into(rep, "model_z_commutator", "p=" + idx(p) + " q=" + idx(q), commutator(tn_z(T, p), tn_z(T, q)),
                 compose(sigma_op(Perm::transposition(p, q, N)), tn_z(T, p) - tn_z(T, q)), model_keys);
  }
  return rep;
}

CheckReport check_qw_preservation(const WSpace& W, std::span<const BasisKey> keys, int q_depth) {
  CheckReport rep;
  rep.name = "prop15_qw";
  rep.params["m"] = std::to_string(W.m());
  rep.params["N"] = std::to_string(W.N);
  rep.params["kappa"] = W.kappa.str();
  rep.params["level"] = W.M.level().str();
  rep.params["flavor"] = flavor_str(W.M.flavor());
  for (const auto& g : q_basis(Flavor::sl, W.m(), q_depth)) {
    const auto th = theta(W.N, W.M, lie(g));
    for (int p = 0; p < W.N; ++p) {
      const auto y = op_Y(W, p);
      const std::string tag = "p=" + idx(p) + " P=" + g.str();
      rep.merge(for_each_key(keys, [&](const BasisKey& k) {
        CheckReport r;
        r.count("qW_preserved");
        const Vec v = nf_affine(W.N, W.M, y.apply(th(k)));
        if (!v.is_zero()) r.fail({"qW_preserved", tag + " " + key_str(k), "0", v.str()});
        return r;
      }));
    }
  }
  return rep;
}

CheckReport nf_affine_soundness(int N, const InducedModule& M, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "nf_affine_soundness";
  const auto gens = q_basis(Flavor::sl, M.m(), 2);
  std::vector<LinOp<Rational>> th;
  for (const auto& g : gens) th.push_back(theta(N, M, lie(g)));
  rep.merge(for_each_key(keys, [&](const BasisKey& k) {
    CheckReport r;
    const Vec left = nf_affine(N, M, k, NfStrategy::leftmost);
    const Vec right = nf_affine(N, M, k, NfStrategy::rightmost);
    r.count("strategies_agree");
    if (!(left == right)) r.fail({"strategies_agree", key_str(k), left.str(), right.str()});
    r.count("idempotent");
    const Vec again = nf_affine(N, M, left);
    if (!(again == left)) r.fail({"idempotent", key_str(k), left.str(), again.str()});
    bool depth0 = true;
    for (const auto& [k2, c] : left.terms())
      for (int id : k2.mono) depth0 = depth0 && pbw_is_trace(id);
    r.count("depth0_output");
    if (!depth0) r.fail({"depth0_output", key_str(k), "depth 0", left.str()});
    if (k.mono.empty()) {
      r.count("identity_on_depth0");
      if (!(left == Vec(k, 1))) r.fail({"identity_on_depth0", key_str(k), key_str(k), left.str()});
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      r.count("kills_qW");
      const Vec v = nf_affine(N, M, th[i](k));
      if (!v.is_zero()) r.fail({"kills_qW", gens[i].str() + " " + key_str(k), "0", v.str()});
    }
    return r;
  }));
  return rep;
}

// ---------------------------------------------------------------- finite setting

FiniteInduced::FiniteInduced(GlModule U, GlModule V) : U_(std::move(U)), V_(std::move(V)) {}

void FiniteInduced::act_rec(int a, int b, const IntSeq& mono, std::size_t from, int base, const Rational& c,
                            const BasisKey& k, Vec& out) const {
  if (in_q(a, b)) {
    BasisKey o = k;
    o.mono = mono;
    const int id = pbw_id(0, a, b);
    o.mono.insert(std::upper_bound(o.mono.begin(), o.mono.end(), id), id);
    o.base = base;
    out.add_term(std::move(o), c);
    return;
  }
  if (from == mono.size()) {
    const int dv = V_.dim();
    const int u = base / dv, v = base % dv;
    auto emit = [&](int nb, const Rational& s) {
      BasisKey o = k;
      o.mono = mono;
      o.base = nb;
      out.add_term(std::move(o), c * s);
    };
    if (a < m() && b < m()) {
      const Matrix& e = U_.E(a, b);
      for (int i = 0; i < U_.dim(); ++i)
        if (!e(i, u).is_zero()) emit(i * dv + v, e(i, u));
    } else if (a >= m() && b >= m()) {
      const Matrix& e = V_.E(a - m(), b - m());
      for (int i = 0; i < dv; ++i)
        if (!e(i, v).is_zero()) emit(u * dv + i, e(i, v));
    }
    return;
  }
  // E_ab P rest = P (E_ab rest) + [E_ab, P] rest
  act_rec(a, b, mono, from + 1, base, c, k, out);
  const int pc = pbw_row(mono[from]), pd = pbw_col(mono[from]);
  IntSeq without = mono;
  without.erase(without.begin() + static_cast<long>(from));
  if (b == pc) act_rec(a, pd, without, from, base, c, k, out);
  if (pd == a) act_rec(pc, b, without, from, base, -c, k, out);
}

Vec FiniteInduced::act(int a, int b, const BasisKey& k) const {
  Vec out;
  act_rec(a, b, k.mono, 0, k.base, 1, k, out);
  return out;
}

std::vector<std::pair<IntSeq, int>> FiniteInduced::keys(int degree) const {
  std::vector<int> ids;
  for (int a = m(); a < size(); ++a)
    for (int b = 0; b < m(); ++b) ids.push_back(pbw_id(0, a, b));
  std::sort(ids.begin(), ids.end());
  std::vector<IntSeq> monos;
  IntSeq cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    monos.push_back(cur);
    if (left == 0) return;
    for (std::size_t i = from; i < ids.size(); ++i) {
      cur.push_back(ids[i]);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  rec(0, degree);
  std::sort(monos.begin(), monos.end());
  std::vector<std::pair<IntSeq, int>> out;
  for (const auto& mo : monos)
    for (int b = 0; b < base_dim(); ++b) out.emplace_back(mo, b);
  return out;
}

LinOp<Rational> finite_u(const FiniteInduced& F, int N, int p) {
  return LinOp<Rational>("u" + idx(p), [F, N, p](const BasisKey& k) {
    Vec out;
    const int b = k.word[p];
    for (int a = 0; a < F.size(); ++a) {
      BasisKey o = k;
      o.word[p] = a;
      out += F.act(b, a, o);
    }
    for (int q = 0; q < p; ++q) out.add_term(permute_word(k, Perm::transposition(q, p, N)), 1);
    return out;
  });
}

namespace {

Vec nf_finite_key(const FiniteInduced& F, const BasisKey& k, NfStrategy s) {
  if (k.mono.empty()) return Vec(k, 1);
  BasisKey rest = k;
  int id;
  if (s == NfStrategy::leftmost) {
    id = k.mono.front();
    rest.mono.erase(rest.mono.begin());
  } else {
    id = k.mono.back();
    rest.mono.pop_back();
  }
  Vec out;
  for (const auto& [k2, c] : loop_side(static_cast<int>(k.word.size()), F.size(), id, rest).terms())
    out.axpy(c, nf_finite_key(F, k2, s));
  return out;
}

}  // namespace

Vec nf_finite(const FiniteInduced& F, const BasisKey& k, NfStrategy s) { return nf_finite_key(F, k, s); }

Vec nf_finite(const FiniteInduced& F, const Vec& v, NfStrategy s) {
  return apply_all([&](const BasisKey& k) { return nf_finite_key(F, k, s); }, v);
}

ParabolicBimodule build_parabolic_bimodule(const GlModule& U, const GlModule& V, int N, int bound_shift) {
  if (N < 1) throw std::invalid_argument("build_parabolic_bimodule: N must be >= 1");
  return ParabolicBimodule{FiniteInduced(U, V), N, bound_shift};
}

namespace {

// z_{p} on a sorted word A^K B^{N-K}: u_p from the subspace formulas minus sum_{q<p} s_qp.
Vec sorted_z(const ParabolicBimodule& B, int K, int p, const BasisKey& x) {
  const auto& F = B.F;
  const int m = F.m(), dv = F.V().dim();
  const int u = x.base / dv, v = x.base % dv;
  Vec out;
  const int b = x.word[p];
  if (p < K) {
    for (int a = 0; a < m; ++a) {
      const Matrix& e = F.U().E(b, a);
      for (int i = 0; i < F.U().dim(); ++i) {
        if (e(i, u).is_zero()) continue;
        BasisKey o = x;
        o.word[p] = a;
        o.base = i * dv + v;
        out.add_term(std::move(o), e(i, u));
      }
    }
  } else {
    for (int a = m; a < F.size(); ++a) {
      const Matrix& e = F.V().E(b - m, a - m);
      for (int i = 0; i < dv; ++i) {
        if (e(i, v).is_zero()) continue;
        BasisKey o = x;
        o.word[p] = a;
        o.base = u * dv + i;
        out.add_term(std::move(o), e(i, v));
      }
    }
    for (int q = 0; q < K; ++q) out.add_term(permute_word(x, Perm::transposition(q, p, B.N)), -1);
    out.add_term(x, Rational(-m));
  }
  out.add_term(x, Rational(B.bound_shift));
  return out;
}

}  // namespace

LinOp<Rational> bimodule_u(const ParabolicBimodule& B, int p) {
  return LinOp<Rational>("u" + idx(p), [B, p](const BasisKey& k) {
    const int N = B.N, m = B.F.m();
    // w = pi . x with x sorted (A letters first, stable) and pi(i) = source position of entry i.
    std::vector<int> src;
    for (int i = 0; i < N; ++i)
      if (k.word[i] < m) src.push_back(i);
    const int K = static_cast<int>(src.size());
    for (int i = 0; i < N; ++i)
      if (k.word[i] >= m) src.push_back(i);
    BasisKey x = k;
    for (int i = 0; i < N; ++i) x.word[i] = k.word[src[i]];
    const Perm pi(src);
    Vec out;
    for (const auto& [k2, c] : sorted_z(B, K, pi.inverse()(p), x).terms()) out.add_term(permute_word(k2, pi), c);
    for (int q = 0; q < p; ++q) out.add_term(permute_word(k, Perm::transposition(q, p, N)), 1);
    return out;
  });
}

std::vector<BasisKey> bimodule_basis(const ParabolicBimodule& B) {
  SpaceDesc s;
  s.word_len = B.N;
  s.alphabet = B.F.size();
  for (int b = 0; b < B.F.base_dim(); ++b) s.module_keys.emplace_back(IntSeq{}, b);
  return sample_basis(s, basis_size(s), 0);
}

CheckReport hecke_presentation_check(int N, const std::vector<LinOp<Rational>>& u, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "hecke_presentation";
  const auto id = identity_op<Rational>();
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q)
      check_into(rep, "u_commute", "p=" + idx(p) + " q=" + idx(q), commutator(u[p], u[q]), zero_op<Rational>(),
                 keys);
  for (int t = 0; t + 1 < N; ++t) {
    const auto s = sigma_op(Perm::simple(t, N));
    for (int q = 0; q < N; ++q)
      if (q != t && q != t + 1)
        check_into(rep, "cross1", "s=" + idx(t) + " q=" + idx(q), compose(s, u[q]), compose(u[q], s), keys);
    check_into(rep, "cross2", "s=" + idx(t), compose(s, u[t]), compose(u[t + 1], s) - id, keys);
  }
  return rep;
}

CheckReport check_parabolic_equivalence(const GlModule& U, const GlModule& V, int N, int degree, int bound_shift) {
  const ParabolicBimodule B = build_parabolic_bimodule(U, V, N, bound_shift);
  const auto& F = B.F;
  const int m = F.m(), n = F.n();
  CheckReport rep;
  rep.name = "thm125";
  rep.params["m"] = std::to_string(m);
  rep.params["n"] = std::to_string(n);
  rep.params["N"] = std::to_string(N);
  rep.params["bound_shift"] = std::to_string(bound_shift);

  const auto model = bimodule_basis(B);
  long binomial_sum = 0, choose = 1;
  for (int K = 0; K <= N; ++K) {
    long term = choose;
    for (int i = 0; i < K; ++i) term *= m;
    for (int i = K; i < N; ++i) term *= n;
    binomial_sum += term;
    choose = choose * (N - K) / (K + 1);
  }
  binomial_sum *= F.base_dim();
  long power = F.base_dim();
  for (int i = 0; i < N; ++i) power *= m + n;
  SpaceDesc depth0;
  depth0.word_len = N;
  depth0.alphabet = m + n;
  for (const auto& mk : F.keys(0)) depth0.module_keys.push_back(mk);
  expect_true(rep, "dimension", binomial_sum == power && power == static_cast<long>(model.size()) &&
                                    power == basis_size(depth0),
              std::to_string(power), std::to_string(binomial_sum) + "/" + std::to_string(model.size()));

  SpaceDesc full = depth0;
  full.module_keys = F.keys(degree);
  const auto keys = sample_basis(full, basis_size(full), 0);

  std::vector<LinOp<Rational>> ue, um;
  for (int p = 0; p < N; ++p) {
    ue.push_back(finite_u(F, N, p));
    um.push_back(bimodule_u(B, p));
  }
  rep.merge_prefixed("bimodule", hecke_presentation_check(N, um, model));

  auto nf = [&](const Vec& v) { return nf_finite(F, v); };
  for (int p = 0; p < N; ++p) {
    nf_equivariance(rep, "u_model", "p=" + idx(p), nf, ue[p], um[p], model);
    nf_equivariance(rep, "u_projection", "p=" + idx(p), nf, ue[p], um[p], keys);
  }
  for (int t = 0; t + 1 < N; ++t) {
    const auto s = sigma_op(Perm::simple(t, N));
    nf_equivariance(rep, "sigma_model", "s=" + idx(t), nf, s, s, model);
    nf_equivariance(rep, "sigma_projection", "s=" + idx(t), nf, s, s, keys);
  }
  rep.merge(for_each_key(keys, [&](const BasisKey& k) {
    CheckReport r;
    const Vec left = nf_finite(F, k, NfStrategy::leftmost);
    r.count("strategies_agree");
    if (!(left == nf_finite(F, k, NfStrategy::rightmost)))
      r.fail({"strategies_agree", key_str(k), left.str(), nf_finite(F, k, NfStrategy::rightmost).str()});
    r.count("idempotent");
    if (!(nf_finite(F, left) == left)) r.fail({"idempotent", key_str(k), left.str(), nf_finite(F, left).str()});
    if (k.mono.empty()) {
      r.count("identity_on_depth0");
      if (!(left == Vec(k, 1))) r.fail({"identity_on_depth0", key_str(k), key_str(k), left.str()});
    }
    for (int a = m; a < m + n; ++a)
      for (int b = 0; b < m; ++b) {
        // P acts diagonally on words (x) module; its image is killed.
        Vec img = F.act(a, b, k);
        for (int q = 0; q < N; ++q)
          if (k.word[q] == b) {
            BasisKey o = k;
            o.word[q] = a;
            img.add_term(std::move(o), 1);
          }
        r.count("kills_q_image");
        const Vec v = nf_finite(F, img);
        if (!v.is_zero()) r.fail({"kills_q_image", "E" + idx(a) + idx(b) + " " + key_str(k), "0", v.str()});
      }
    return r;
  }));
  return rep;
}

}  // namespace cherednik
