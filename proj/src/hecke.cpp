#include "cherednik/hecke.hpp"

#include <string>

namespace cherednik {

namespace {

std::string idx(int p) { return std::to_string(p + 1); }

// Column `u` of a module matrix, as a vector on keys with word `w`.
void add_column(Vec& out, const BasisKey& k, const IntSeq& w, const Matrix& mat, int u,
                const Rational& c) {
  for (int i = 0; i < mat.rows(); ++i) {
    if (mat(i, u).is_zero()) continue;
    BasisKey o;
    o.word = w;
    o.base = i;
    o.x = k.x;
    o.mono = k.mono;
    out.add_term(std::move(o), mat(i, u) * c);
  }
}

}  // namespace

BasisKey permute_word(const BasisKey& k, const Perm& s) {
  BasisKey o = k;
  for (int i = 0; i < static_cast<int>(k.word.size()); ++i) o.word[s(i)] = k.word[i];
  for (int i = 0; i < static_cast<int>(k.x.size()); ++i) o.x[s(i)] = k.x[i];
  return o;
}

LinOp<Rational> sigma_op(const Perm& s) {
  return LinOp<Rational>("s" + s.str(),
                         [s](const BasisKey& k) { return Vec(permute_word(k, s), Rational(1)); });
}

LinOp<Rational> en_z(const GlModule& U, int N, int p) {
  if (p < 0 || p >= N) throw std::out_of_range("en_z: index out of range");
  return LinOp<Rational>("z" + idx(p), [U, p](const BasisKey& k) {
    Vec out;
    const int b = k.word[p];
    for (int a = 0; a < U.m(); ++a) {
      IntSeq w = k.word;
      w[p] = a;
      add_column(out, k, w, U.E(b, a), k.base, 1);
    }
    return out;
  });
}

LinOp<Rational> fn_z(const GlModule& U, int N, int p) {
  const Matrix trace = U.trace_element();
  const Rational c(-1, U.m());
  const auto ez = en_z(U, N, p);
  return LinOp<Rational>("zsl" + idx(p), [ez, trace, c](const BasisKey& k) {
    Vec out = ez(k);
    add_column(out, k, k.word, trace, k.base, c);
    return out;
  });
}

LinOp<Rational> hecke_z(const HeckeFamily& f, int p) {
  return f.sl ? fn_z(f.U, f.N, p) : en_z(f.U, f.N, p);
}

LinOp<Rational> hecke_u(const HeckeFamily& f, int p) {
  std::vector<LinOp<Rational>> parts{hecke_z(f, p)};
  for (int q = 0; q < p; ++q) parts.push_back(sigma_op(Perm::transposition(q, p, f.N)));
  if (!f.shift.is_zero()) parts.push_back(f.shift * identity_op<Rational>());
  return sum(std::move(parts), "u" + idx(p));
}

LinOp<Rational> diag_action(const GlModule& U, int N, const Matrix& x) {
  const int m = U.m();
  Matrix on_u(U.dim(), U.dim());
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d)
      if (!x(c, d).is_zero()) on_u = on_u + x(c, d) * U.E(c, d);
  return LinOp<Rational>("diag", [x, on_u, N, m](const BasisKey& k) {
    Vec out;
    for (int q = 0; q < N; ++q) {
      // X e_b = sum_c x(c, b) e_c
      for (int c = 0; c < m; ++c) {
        if (x(c, k.word[q]).is_zero()) continue;
        BasisKey o = k;
        o.word[q] = c;
        out.add_term(std::move(o), x(c, k.word[q]));
      }
    }
    add_column(out, k, k.word, on_u, k.base, 1);
    return out;
  });
}

GroupAlgElem eval_hom(int N, int p) {
  GroupAlgElem g(N);
  for (int q = 0; q < p; ++q) g.add_term(Perm::transposition(q, p, N), 1);
  return g;
}

std::vector<BasisKey> hecke_basis(const HeckeFamily& f) {
  SpaceDesc s;
  s.word_len = f.N;
  s.alphabet = f.m();
  for (int i = 0; i < f.U.dim(); ++i) s.module_keys.push_back({{}, i});
  return sample_basis(s, basis_size(s), 0);
}

std::vector<std::pair<std::string, Matrix>> lie_generators(int m, bool sl) {
  std::vector<std::pair<std::string, Matrix>> out;
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d)
      if (!sl || c != d) out.push_back({"E" + idx(c) + idx(d), Matrix::unit(m, c, d)});
  if (sl)
    for (int c = 0; c + 1 < m; ++c)
      out.push_back({"H" + idx(c), Matrix::unit(m, c, c) - Matrix::unit(m, c + 1, c + 1)});
  return out;
}

CheckReport hecke_relation_suite(const HeckeFamily& f, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = "hecke_relations";
  rep.params["m"] = std::to_string(f.m());
  rep.params["N"] = std::to_string(f.N);
  rep.params["flavor"] = f.sl ? "sl" : "gl";
  rep.params["shift"] = f.shift.str();
  const int N = f.N;
  std::vector<LinOp<Rational>> z, u, s;
  for (int p = 0; p < N; ++p) {
    z.push_back(hecke_z(f, p));
    u.push_back(hecke_u(f, p));
  }
  for (int p = 0; p + 1 < N; ++p) s.push_back(sigma_op(Perm::simple(p, N)));
  const auto id = identity_op<Rational>();

  for (int p = 0; p < N; ++p) {
    std::vector<LinOp<Rational>> def{z[p]};
    for (int q = 0; q < p; ++q) def.push_back(sigma_op(Perm::transposition(q, p, N)));
    def.push_back(f.shift * id);
    check_into(rep, "u_definition", "p=" + idx(p), u[p], sum(def, "def"), keys);
  }
  for (int p = 0; p + 1 < N; ++p) {
    for (int q = 0; q < N; ++q) {
      if (q == p || q == p + 1) continue;
      check_into(rep, "cross1", "p=" + idx(p) + " q=" + idx(q), compose(s[p], u[q]),
                 compose(u[q], s[p]), keys);
    }
    check_into(rep, "cross2", "p=" + idx(p), compose(s[p], u[p]),
               compose(u[p + 1], s[p]) - id, keys);
    for (int q = 0; q < N; ++q) {
      const int image = Perm::simple(p, N)(q);
      check_into(rep, "conjugation", "s=" + idx(p) + " p=" + idx(q), compose(compose(s[p], z[q]), s[p]),
                 z[image], keys);
    }
  }
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q)
      check_into(rep, "z_commutator", "p=" + idx(p) + " q=" + idx(q), commutator(z[p], z[q]),
                 compose(sigma_op(Perm::transposition(p, q, N)), z[p] - z[q]), keys);
  for (const auto& [name, x] : lie_generators(f.m(), f.sl)) {
    const auto d = diag_action(f.U, N, x);
    for (int p = 0; p < N; ++p)
      check_into(rep, "diag_commute", "p=" + idx(p) + " X=" + name, commutator(z[p], d),
                 zero_op<Rational>(), keys);
  }
  return rep;
}

}  // namespace cherednik
