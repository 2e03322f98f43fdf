#include "cherednik/affine.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cherednik {

std::string flavor_str(Flavor f) { return f == Flavor::gl ? "gl" : "sl"; }

std::string LoopGen::str() const {
  if (central) return "C";
  std::ostringstream os;
  if (b == kCartan) os << 'H' << a + 1;
  else os << 'E' << a + 1 << b + 1;
  if (j != 0) os << "t^" << j;
  return os.str();
}

LieElem lie(const LoopGen& g, const Rational& c) {
  LieElem x;
  lie_add(x, g, c);
  return x;
}

void lie_add(LieElem& x, const LoopGen& g, const Rational& c) {
  if (c.is_zero()) return;
  auto it = x.find(g);
  if (it == x.end()) {
    x.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

LieElem operator+(LieElem x, const LieElem& y) {
  for (const auto& [g, c] : y) lie_add(x, g, c);
  return x;
}

LieElem operator*(const Rational& c, const LieElem& x) {
  LieElem r;
  for (const auto& [g, v] : x) lie_add(r, g, c * v);
  return r;
}

std::string lie_str(const LieElem& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : x) out += (out.empty() ? "" : " + ") + ("(" + c.str() + ")" + g.str());
  return out;
}

LieElem expand_cartan(const LieElem& x) {
  LieElem r;
  for (const auto& [g, c] : x) {
    if (!g.is_cartan()) {
      lie_add(r, g, c);
      continue;
    }
    lie_add(r, LoopGen::E(g.a, g.a, g.j), c);
    lie_add(r, LoopGen::E(g.a + 1, g.a + 1, g.j), -c);
  }
  return r;
}

LieElem affine_bracket(const LoopGen& x, const LoopGen& y) {
  LieElem out;
  if (x.central || y.central) return out;
  const LieElem ex = expand_cartan(lie(x)), ey = expand_cartan(lie(y));
  for (const auto& [g, cg] : ex)
    for (const auto& [h, ch] : ey) {
      const Rational c = cg * ch;
      const int mode = g.j + h.j;
      if (g.b == h.a) lie_add(out, LoopGen::E(g.a, h.b, mode), c);
      if (h.b == g.a) lie_add(out, LoopGen::E(h.a, g.b, mode), -c);
      if (g.j == -h.j && g.a == h.b && g.b == h.a) lie_add(out, LoopGen::C(), c * Rational(g.j));
    }
  return out;
}

LieElem affine_bracket(const LieElem& x, const LieElem& y) {
  LieElem out;
  for (const auto& [g, cg] : x)
    for (const auto& [h, ch] : y)
      for (const auto& [k, ck] : affine_bracket(g, h)) lie_add(out, k, cg * ch * ck);
  return out;
}

std::vector<LoopGen> q_basis(Flavor flavor, int m, int depth_bound) {
  std::vector<LoopGen> out;
  for (int k = 1; k <= depth_bound; ++k) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (flavor == Flavor::gl || a != b) out.push_back(LoopGen::E(a, b, -k));
    if (flavor == Flavor::sl)
      for (int a = 0; a + 1 < m; ++a) out.push_back(LoopGen::H(a, -k));
  }
  return out;
}

CheckReport affine_jacobi_check(int m, int lo, int hi) {
  CheckReport rep;
  rep.name = "affine_jacobi";
  rep.params["m"] = std::to_string(m);
  rep.params["modes"] = std::to_string(lo) + ".." + std::to_string(hi);
  std::vector<LoopGen> gens{LoopGen::C()};
  for (int j = lo; j <= hi; ++j)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) gens.push_back(LoopGen::E(a, b, j));
  const int n = static_cast<int>(gens.size());
  std::vector<LieElem> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) table[i * n + k] = affine_bracket(gens[i], gens[k]);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      rep.count("antisymmetry");
      const auto s = table[i * n + k] + table[k * n + i];
      if (!s.empty()) rep.fail({"antisymmetry", gens[i].str() + "," + gens[k].str(), "0", lie_str(s)});
    }
  std::vector<CheckReport> parts(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const LieElem x = lie(gens[i]), y = lie(gens[k]), z = lie(gens[l]);
        const auto s = affine_bracket(x, table[k * n + l]) + affine_bracket(y, table[l * n + i]) +
                       affine_bracket(z, table[i * n + k]);
        parts[i].count("jacobi");
        if (!s.empty())
          parts[i].fail({"jacobi", gens[i].str() + "," + gens[k].str() + "," + gens[l].str(), "0", lie_str(s)});
      }
  }
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

InducedModule::InducedModule(GlModule U, Rational level, Flavor flavor)
    : U_(std::move(U)), level_(std::move(level)), flavor_(flavor) {}

bool InducedModule::is_q_id(int id) const {
  const int k = pbw_mode(id), a = pbw_row(id), b = pbw_col(id);
  if (k < 1 || a >= m()) return false;
  if (b == kCartan) return flavor_ == Flavor::sl && a + 1 < m();
  return b < m() && (flavor_ == Flavor::gl || a != b);
}

LieElem InducedModule::to_basis(const LieElem& x) const {
  LieElem r;
  std::map<int, std::vector<Rational>> diag;  // mode -> diagonal coefficients
  for (const auto& [g, c] : expand_cartan(x)) {
    if (g.central || g.j == 0 || flavor_ == Flavor::gl || g.a != g.b) {
      lie_add(r, g, c);
      continue;
    }
    auto& d = diag[g.j];
    d.resize(m());
    d[g.a] += c;
  }
  for (const auto& [j, d] : diag) {
    Rational partial = 0;
    for (int a = 0; a < m(); ++a) {
      partial += d[a];
      if (a + 1 < m()) lie_add(r, LoopGen::H(a, j), partial);
    }
    if (!partial.is_zero())
      throw std::invalid_argument("InducedModule: trace part at mode " + std::to_string(j) +
                                  " is not in the sl loop algebra");
  }
  return r;
}

void InducedModule::bracket(const El& x, const El& y, std::vector<std::pair<El, Rational>>& out,
                            Rational& central) const {
  const LoopGen gx = x.b == kCartan ? LoopGen::H(x.a, x.mode) : LoopGen::E(x.a, x.b, x.mode);
  const LoopGen gy = y.b == kCartan ? LoopGen::H(y.a, y.mode) : LoopGen::E(y.a, y.b, y.mode);
  LieElem br = affine_bracket(gx, gy);
  if (x.mode + y.mode < 0) br = to_basis(br);
  for (const auto& [g, c] : br) {
    if (g.central) central += c;
    else out.push_back({El{g.j, g.a, g.b}, c});
  }
}

void InducedModule::act_terms(const El& g, const Terms& in, const Rational& c, Terms& out) const {
  for (const auto& [mk, v] : in) {
    for (const auto& [mk2, v2] : act_el(g, mk.first, mk.second)) {
      auto& slot = out[mk2];
      slot += v * v2 * c;
      if (slot.is_zero()) out.erase(mk2);
    }
  }
}

InducedModule::Terms InducedModule::act_el(const El& g, const IntSeq& mono, int base) const {
  Terms out;
  if (g.mode < 0 && (mono.empty() || id_of(g) <= mono.front())) {
    IntSeq m2;
    m2.reserve(mono.size() + 1);
    m2.push_back(id_of(g));
    m2.insert(m2.end(), mono.begin(), mono.end());
    out[{std::move(m2), base}] = 1;
    return out;
  }
  if (mono.empty()) {
    // g has mode >= 0 and meets the base module
    if (g.mode > 0) return out;
    Matrix mat = g.b == kCartan ? U_.E(g.a, g.a) - U_.E(g.a + 1, g.a + 1) : U_.E(g.a, g.b);
    for (int i = 0; i < U_.dim(); ++i)
      if (!mat(i, base).is_zero()) out[{IntSeq{}, i}] = mat(i, base);
    return out;
  }
  // g . P1 . rest = P1 . (g . rest) + [g, P1] . rest
  const El p1 = el_of(mono.front());
  const IntSeq rest(mono.begin() + 1, mono.end());
  act_terms(p1, act_el(g, rest, base), 1, out);
  std::vector<std::pair<El, Rational>> br;
  Rational central = 0;
  bracket(g, p1, br, central);
  for (const auto& [e, c] : br) {
    for (const auto& [mk, v] : act_el(e, rest, base)) {
      auto& slot = out[mk];
      slot += c * v;
      if (slot.is_zero()) out.erase(mk);
    }
  }
  if (!central.is_zero()) {
    auto& slot = out[{rest, base}];
    slot += central * level_;
    if (slot.is_zero()) out.erase({rest, base});
  }
  return out;
}

Vec InducedModule::act(const LieElem& x, const BasisKey& k) const {
  Vec out;
  for (const auto& [g, c] : to_basis(x)) {
    if (g.central) {
      out.add_term(k, c * level_);
      continue;
    }
    const El e{g.j, g.a, g.b};
    if (g.j < 0 && !is_q_id(id_of(e)))
      throw std::invalid_argument("InducedModule: " + g.str() + " is outside q");
    for (const auto& [mk, v] : act_el(e, k.mono, k.base)) {
      BasisKey o = k;
      o.mono = mk.first;
      o.base = mk.second;
      out.add_term(std::move(o), v * c);
    }
  }
  return out;
}

Vec InducedModule::act(const LoopGen& g, const BasisKey& k) const { return act(lie(g), k); }

Vec InducedModule::act(const LieElem& x, const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v.terms()) out.axpy(c, act(x, k));
  return out;
}

LinOp<Rational> InducedModule::op(const LieElem& x) const {
  const LieElem basis = to_basis(x);
  return LinOp<Rational>(lie_str(x), [self = *this, basis](const BasisKey& k) { return self.act(basis, k); });
}

Vec InducedModule::multiply(int id, const BasisKey& k) const {
  const El e = el_of(id);
  Vec out;
  for (const auto& [mk, v] : act_el(e, k.mono, k.base)) {
    BasisKey o = k;
    o.mono = mk.first;
    o.base = mk.second;
    out.add_term(std::move(o), v);
  }
  return out;
}

std::vector<std::pair<IntSeq, int>> InducedModule::keys(int depth_bound) const {
  std::vector<int> ids;
  for (const auto& g : q_basis(flavor_, m(), depth_bound)) ids.push_back(id_of(El{g.j, g.a, g.b}));
  std::sort(ids.begin(), ids.end());
  std::vector<IntSeq> monos;
  IntSeq cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    monos.push_back(cur);
    for (std::size_t i = from; i < ids.size(); ++i) {
      const int k = pbw_mode(ids[i]);
      if (k > left) continue;
      cur.push_back(ids[i]);
      rec(i, left - k);
      cur.pop_back();
    }
  };
  rec(0, depth_bound);
  std::sort(monos.begin(), monos.end());
  std::vector<std::pair<IntSeq, int>> out;
  for (const auto& mo : monos)
    for (int b = 0; b < U_.dim(); ++b) out.push_back({mo, b});
  return out;
}

namespace {

// Generators acting on M with modes in [lo, hi], plus C.
std::vector<LieElem> module_generators(const InducedModule& M, int lo, int hi) {
  const int m = M.m();
  std::vector<LieElem> gens{lie(LoopGen::C())};
  for (int j = lo; j <= hi; ++j) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (M.flavor() == Flavor::gl || a != b || j == 0) gens.push_back(lie(LoopGen::E(a, b, j)));
    if (M.flavor() == Flavor::sl && j != 0)
      for (int a = 0; a + 1 < m; ++a) gens.push_back(lie(LoopGen::H(a, j)));
  }
  return gens;
}

}  // namespace

CheckReport affine_rep_check(const InducedModule& M, int lo, int hi, int depth) {
  CheckReport rep;
  rep.name = "affine_rep";
  rep.params["m"] = std::to_string(M.m());
  rep.params["flavor"] = flavor_str(M.flavor());
  rep.params["level"] = M.level().str();
  const auto gens = module_generators(M, lo, hi);
  std::vector<BasisKey> keys;
  for (const auto& [mono, base] : M.keys(depth)) {
    BasisKey k;
    k.mono = mono;
    k.base = base;
    keys.push_back(k);
  }
  std::vector<LinOp<Rational>> ops;
  for (const auto& g : gens) ops.push_back(M.op(g));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = i + 1; k < gens.size(); ++k)
      check_into(rep, "representation", lie_str(gens[i]) + "," + lie_str(gens[k]), commutator(ops[i], ops[k]),
                 M.op(affine_bracket(gens[i], gens[k])), keys);
  return rep;
}

namespace {

// sum over E_cd t^j components: x_r^j E_cd^{(r)} on the r-th loop factor
void loop_part(const LieElem& x, int r, const BasisKey& k, Vec& out) {
  for (const auto& [g, c] : x) {
    if (g.central || k.word[r] != g.b) continue;
    BasisKey o = k;
    o.word[r] = g.a;
    o.x[r] += g.j;
    out.add_term(std::move(o), c);
  }
}

}  // namespace

LinOp<Rational> theta_r(int N, const InducedModule& M, int r, const LieElem& x) {
  if (r < 0 || r > N) throw std::out_of_range("theta_r: factor out of range");
  if (r == N) return M.op(x);
  const LieElem ex = expand_cartan(x);
  return LinOp<Rational>("theta" + std::to_string(r + 1) + "(" + lie_str(x) + ")", [ex, r](const BasisKey& k) {
    Vec out;
    loop_part(ex, r, k, out);
    return out;
  });
}

LinOp<Rational> theta(int N, const InducedModule& M, const LieElem& x) {
  const LieElem ex = expand_cartan(x);
  const LieElem basis = M.to_basis(x);
  return LinOp<Rational>("theta(" + lie_str(x) + ")", [ex, basis, N, M](const BasisKey& k) {
    Vec out = M.act(basis, k);
    for (int r = 0; r < N; ++r) loop_part(ex, r, k, out);
    return out;
  });
}

CheckReport theta_rep_check(int N, const InducedModule& M, int lo, int hi, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "theta_rep";
  rep.params["m"] = std::to_string(M.m());
  rep.params["N"] = std::to_string(N);
  rep.params["flavor"] = flavor_str(M.flavor());
  rep.params["level"] = M.level().str();
  const auto gens = module_generators(M, lo, hi);
  std::vector<LinOp<Rational>> ops;
  for (const auto& g : gens) ops.push_back(theta(N, M, g));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = i + 1; k < gens.size(); ++k)
      check_into(rep, "representation", lie_str(gens[i]) + "," + lie_str(gens[k]), commutator(ops[i], ops[k]),
                 theta(N, M, affine_bracket(gens[i], gens[k])), keys);
  return rep;
}

}  // namespace cherednik
