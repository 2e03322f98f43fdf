#include "cherednik/dunkl.hpp"

#include <string>

#include "cherednik/hecke.hpp"

namespace cherednik {

namespace {

std::string idx(int p) { return std::to_string(p + 1); }

Exponent exponent_of(const BasisKey& k) { return Exponent(k.x.begin(), k.x.end()); }

// Adds c * a to out, each term keyed by `k` with the x-part replaced.
void add_poly(Vec& out, const BasisKey& k, const LaurentPoly& a, const Rational& c = 1) {
  for (const auto& [e, v] : a.terms()) {
    BasisKey o = k;
    o.x.assign(e.begin(), e.end());
    out.add_term(std::move(o), v * c);
  }
}

// sum_{r != p} x_p^shift * divided_difference(p, r, x^e)
void add_divided_differences(Vec& out, const BasisKey& k, int p, int shift) {
  const Exponent e = exponent_of(k);
  const int n = static_cast<int>(e.size());
  LaurentPoly acc(n);
  for (int r = 0; r < n; ++r)
    if (r != p) acc += monomial_divided_difference(p, r, e);
  if (shift != 0) acc = acc * LaurentPoly::variable(n, p, shift);
  add_poly(out, k, acc);
}

}  // namespace

BasisKey x_key(const Exponent& e) {
  BasisKey k;
  k.x.assign(e.begin(), e.end());
  return k;
}

Vec to_vec(const LaurentPoly& a) {
  Vec v;
  for (const auto& [e, c] : a.terms()) v.add_term(x_key(e), c);
  return v;
}

LaurentPoly to_poly(const Vec& v, int nvars) {
  LaurentPoly a(nvars);
  for (const auto& [k, c] : v.terms()) a.add_term(exponent_of(k), c);
  return a;
}

LinOp<Rational> x_op(int p, int power) {
  return LinOp<Rational>("x" + idx(p) + "^" + std::to_string(power), [p, power](const BasisKey& k) {
    BasisKey o = k;
    o.x[p] += power;
    return Vec(std::move(o), Rational(1));
  });
}

LinOp<Rational> dunkl_y(const CherednikParams& c, int p) {
  if (p < 0 || p >= c.N) throw std::out_of_range("dunkl_y: index out of range");
  return LinOp<Rational>("y" + idx(p), [kappa = c.kappa, p](const BasisKey& k) {
    Vec out;
    if (k.x[p] != 0) {
      BasisKey o = k;
      --o.x[p];
      out.add_term(std::move(o), kappa * Rational(k.x[p]));
    }
    add_divided_differences(out, k, p, 0);
    return out;
  });
}

LinOp<Rational> trig_z(const CherednikParams& c, int p) {
  if (p < 0 || p >= c.N) throw std::out_of_range("trig_z: index out of range");
  return LinOp<Rational>("z" + idx(p), [kappa = c.kappa, p](const BasisKey& k) {
    Vec out;
    if (k.x[p] != 0) out.add_term(k, kappa * Rational(k.x[p]));
    add_divided_differences(out, k, p, 1);
    return out;
  });
}

LinOp<Rational> trig_u(const CherednikParams& c, int p) {
  std::vector<LinOp<Rational>> parts{trig_z(c, p)};
  for (int r = 0; r < p; ++r) parts.push_back(sigma_op(Perm::transposition(p, r, c.N)));
  return sum(std::move(parts), "u" + idx(p));
}

std::vector<BasisKey> polynomial_keys(int N, int degree_bound) {
  SpaceDesc s;
  s.nvars = N;
  s.total_degree = degree_bound;
  return sample_basis(s, basis_size(s), 0);
}

std::vector<BasisKey> laurent_keys(int N, int lo, int hi) {
  SpaceDesc s;
  s.nvars = N;
  s.x_lo = lo;
  s.x_hi = hi;
  return sample_basis(s, basis_size(s), 0);
}

namespace {

LinOp<Rational> s_op(int p, int q, int N) { return sigma_op(Perm::transposition(p, q, N)); }

// Multiplication by a scalar times x_r, then the transposition s_pq.
LinOp<Rational> x_then_sigma(int r, int p, int q, int N) { return compose(x_op(r), s_op(p, q, N)); }

}  // namespace

CheckReport rational_relation_suite(const CherednikParams& c, int degree_bound) {
  CheckReport rep;
  rep.name = "dunkl_rational";
  rep.params["N"] = std::to_string(c.N);
  rep.params["kappa"] = c.kappa.str();
  rep.params["degree"] = std::to_string(degree_bound);
  const int N = c.N;
  const auto keys = polynomial_keys(N, degree_bound);
  const auto id = identity_op<Rational>();
  std::vector<LinOp<Rational>> y;
  for (int p = 0; p < N; ++p) y.push_back(dunkl_y(c, p));

  for (int p = 0; p < N; ++p) {
    for (const auto& k : keys) {
      const auto v = y[p](k);
      int deg = 0;
      for (int e : k.x) deg += e;
      bool ok = true;
      for (const auto& [k2, _] : v.terms()) {
        int d2 = 0;
        for (int e : k2.x) {
          ok = ok && e >= 0;
          d2 += e;
        }
        ok = ok && d2 < deg;
      }
      expect_true(rep, "polynomial_output", ok, "p=" + idx(p) + " " + key_str(k), v.str());
    }
    for (int s = 0; s + 1 < N; ++s) {
      const auto sig = s_op(s, s + 1, N);
      check_into(rep, "conjugation", "s=" + idx(s) + " p=" + idx(p), compose(compose(sig, y[p]), sig),
                 y[Perm::simple(s, N)(p)], keys);
    }
    for (int q = 0; q < N; ++q) {
      if (q == p) continue;
      check_into(rep, "cross3", "p=" + idx(p) + " q=" + idx(q), commutator(y[p], x_op(q)),
                 Rational(-1) * s_op(p, q, N), keys);
    }
    std::vector<LinOp<Rational>> rhs{c.kappa * id};
    for (int r = 0; r < N; ++r)
      if (r != p) rhs.push_back(s_op(p, r, N));
    check_into(rep, "cross4", "p=" + idx(p), commutator(y[p], x_op(p)), sum(rhs, "rhs"), keys);
    for (int q = p + 1; q < N; ++q)
      check_into(rep, "y_commute", "p=" + idx(p) + " q=" + idx(q), commutator(y[p], y[q]),
                 zero_op<Rational>(), keys);
  }
  return rep;
}

CheckReport trig_relation_suite(const CherednikParams& c, int lo, int hi) {
  CheckReport rep;
  rep.name = "dunkl_trig";
  rep.params["N"] = std::to_string(c.N);
  rep.params["kappa"] = c.kappa.str();
  rep.params["window"] = std::to_string(lo) + ".." + std::to_string(hi);
  const int N = c.N;
  const auto keys = laurent_keys(N, lo, hi);
  const auto id = identity_op<Rational>();
  std::vector<LinOp<Rational>> z, u;
  for (int p = 0; p < N; ++p) {
    z.push_back(trig_z(c, p));
    u.push_back(trig_u(c, p));
  }
  for (int p = 0; p < N; ++p) {
    const std::string tp = "p=" + idx(p);
    for (int q = 0; q < N; ++q) {
      if (q == p) continue;
      const std::string tq = tp + " q=" + idx(q);
      check_into(rep, "cross8", tq, commutator(z[p], x_op(q)),
                 Rational(-1) * x_then_sigma(p, p, q, N), keys);
      check_into(rep, q < p ? "cross5" : "cross6", tq, commutator(u[p], x_op(q)),
                 Rational(-1) * x_then_sigma(q < p ? q : p, p, q, N), keys);
    }
    std::vector<LinOp<Rational>> rz{c.kappa * x_op(p)}, ru{c.kappa * x_op(p)};
    for (int r = 0; r < N; ++r) {
      if (r == p) continue;
      rz.push_back(x_then_sigma(p, p, r, N));
      ru.push_back(x_then_sigma(r < p ? r : p, p, r, N));
    }
    check_into(rep, "cross9", tp, commutator(z[p], x_op(p)), sum(rz, "rhs"), keys);
    check_into(rep, "cross7", tp, commutator(u[p], x_op(p)), sum(ru, "rhs"), keys);
    for (int q = p + 1; q < N; ++q) {
      const std::string tq = tp + " q=" + idx(q);
      check_into(rep, "u_commute", tq, commutator(u[p], u[q]), zero_op<Rational>(), keys);
      check_into(rep, "z_commutator", tq, commutator(z[p], z[q]),
                 compose(s_op(p, q, N), z[p] - z[q]), keys);
    }
    // H_N relations of the induced action and the defining identities
    for (int s = 0; s + 1 < N; ++s) {
      const auto sig = s_op(s, s + 1, N);
      const std::string ts = "s=" + idx(s) + " " + tp;
      check_into(rep, "conjugation", ts, compose(compose(sig, z[p]), sig), z[Perm::simple(s, N)(p)], keys);
      if (p != s && p != s + 1) check_into(rep, "cross1", ts, compose(sig, u[p]), compose(u[p], sig), keys);
    }
    if (p + 1 < N) {
      const auto sig = s_op(p, p + 1, N);
      check_into(rep, "cross2", tp, compose(sig, u[p]), compose(u[p + 1], sig) - id, keys);
    }
    check_into(rep, "z_is_xy", tp, z[p], compose(x_op(p), dunkl_y(c, p)), keys);
    std::vector<LinOp<Rational>> diff;
    for (int r = 0; r < p; ++r) diff.push_back(s_op(p, r, N));
    check_into(rep, "u_minus_z", tp, u[p] - z[p], sum(diff, "sum"), keys);
  }
  return rep;
}

CheckReport embedding_check(const CherednikParams& c, int degree_bound) {
  CheckReport rep;
  rep.name = "embedding";
  rep.params["N"] = std::to_string(c.N);
  rep.params["kappa"] = c.kappa.str();
  rep.params["degree"] = std::to_string(degree_bound);
  const int N = c.N;
  const auto keys = polynomial_keys(N, degree_bound);
  std::vector<LinOp<Rational>> z;
  for (int p = 0; p < N; ++p) z.push_back(compose(x_op(p), dunkl_y(c, p)));
  for (int p = 0; p < N; ++p) {
    const std::string tp = "p=" + idx(p);
    expect_true(rep, "kills_constants", z[p](x_key(Exponent(N, 0))).is_zero(), tp);
    for (int s = 0; s + 1 < N; ++s) {
      const auto sig = s_op(s, s + 1, N);
      check_into(rep, "yrel", "s=" + idx(s) + " " + tp, compose(compose(sig, z[p]), sig),
                 z[Perm::simple(s, N)(p)], keys);
    }
    for (int q = p + 1; q < N; ++q)
      check_into(rep, "ycom", tp + " q=" + idx(q), commutator(z[p], z[q]),
                 compose(s_op(p, q, N), z[p] - z[q]), keys);
  }
  return rep;
}

}  // namespace cherednik
