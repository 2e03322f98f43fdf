#include <doctest.h>

#include <cmath>

#include "cherednik/affine.hpp"
#include "cherednik/hecke.hpp"

using namespace cherednik;

namespace {

BasisKey mkey(IntSeq mono, int base) {
  BasisKey k;
  k.mono = std::move(mono);
  k.base = base;
  return k;
}

BasisKey wkey(IntSeq x, IntSeq word, IntSeq mono, int base) {
  BasisKey k;
  k.x = std::move(x);
  k.word = std::move(word);
  k.mono = std::move(mono);
  k.base = base;
  return k;
}

}  // namespace

TEST_CASE("affine bracket values") {
  auto expect = lie(LoopGen::E(0, 0, 0)) + lie(LoopGen::E(1, 1, 0), -1) + lie(LoopGen::C());
  CHECK(affine_bracket(LoopGen::E(0, 1, 1), LoopGen::E(1, 0, -1)) == expect);
  CHECK(affine_bracket(LoopGen::E(0, 0, 1), LoopGen::E(0, 0, -1)) == lie(LoopGen::C()));
  CHECK(affine_bracket(LoopGen::C(), LoopGen::E(0, 1, 2)).empty());
  CHECK(affine_bracket(LoopGen::E(1, 0, -2), LoopGen::C()).empty());
  // [I t^i, E_cd t^j] = i d_{i,-j} d_cd C
  LieElem I;
  for (int a = 0; a < 3; ++a) lie_add(I, LoopGen::E(a, a, 2), 1);
  CHECK(affine_bracket(I, lie(LoopGen::E(1, 1, -2))) == lie(LoopGen::C(), 2));
  CHECK(affine_bracket(I, lie(LoopGen::E(1, 2, -2))).empty());
  CHECK(affine_bracket(I, lie(LoopGen::E(1, 1, -1))).empty());
}

TEST_CASE("q basis sizes") {
  CHECK(q_basis(Flavor::sl, 2, 1).size() == 3);
  CHECK(q_basis(Flavor::gl, 2, 2).size() == 8);
  CHECK(q_basis(Flavor::sl, 3, 1).size() == 8);
  CHECK(q_basis(Flavor::sl, 3, 2).size() == 16);
}

TEST_CASE("Jacobi identity") {
  for (int m = 1; m <= 3; ++m) {
    const auto rep = affine_jacobi_check(m, -2, 2);
    CHECK(rep.passed());
    CHECK(rep.instances.at("jacobi") == static_cast<long>(std::pow(5 * m * m + 1, 3)));
  }
}

TEST_CASE("induced module actions") {
  const Rational level(7, 3);
  for (Flavor f : {Flavor::gl, Flavor::sl}) {
    const InducedModule M(make_natural(2), level, f);
    const auto one_u = mkey({}, 1);
    CHECK(M.act(LoopGen::E(0, 1, 1), one_u).is_zero());
    CHECK((M.act(LoopGen::C(), mkey({pbw_id(1, 0, 1)}, 0)) - level * Vec(mkey({pbw_id(1, 0, 1)}, 0), 1)).is_zero());
    // mode-0 E_12 on 1 (x) e_2 -> 1 (x) e_1
    CHECK((M.act(LoopGen::E(0, 1, 0), one_u) - Vec(mkey({}, 0), 1)).is_zero());
    // E_12 t on E_21 t^-1 (x) u = (E_11 - E_22 + level) u
    for (int u = 0; u < 2; ++u) {
      const auto v = M.act(LoopGen::E(0, 1, 1), mkey({pbw_id(1, 1, 0)}, u));
      const Rational h = u == 0 ? 1 : -1;
      CHECK((v - (h + level) * Vec(mkey({}, u), 1)).is_zero());
    }
  }
  const InducedModule G(make_natural(2), level, Flavor::gl);
  CHECK((G.act(LoopGen::E(0, 0, 1), mkey({pbw_id(1, 0, 0)}, 1)) - level * Vec(mkey({}, 1), 1)).is_zero());
  const InducedModule S(make_natural(2), level, Flavor::sl);
  CHECK_THROWS_AS(S.act(LoopGen::E(0, 0, -1), mkey({}, 0)), std::invalid_argument);
  CHECK(S.act(LoopGen::H(0, -1), mkey({}, 0)).size() == 1);
}

TEST_CASE("PBW re-sorting") {
  const InducedModule M(make_natural(2), 0, Flavor::gl);
  // E_21 t^-1 . (E_12 t^-1 (x) u): E_21 t^-1 > E_12 t^-1, so the bracket appears.
  const int p12 = pbw_id(1, 0, 1), p21 = pbw_id(1, 1, 0);
  const auto v = M.act(LoopGen::E(1, 0, -1), mkey({p12}, 0));
  Vec expect(mkey({p12, p21}, 0), 1);
  // [E_21, E_12] t^-2 = (E_22 - E_11) t^-2
  expect.add_term(mkey({pbw_id(2, 1, 1)}, 0), 1);
  expect.add_term(mkey({pbw_id(2, 0, 0)}, 0), -1);
  CHECK((v - expect).is_zero());
}

TEST_CASE("grading: positive modes lower depth") {
  for (Flavor f : {Flavor::gl, Flavor::sl}) {
    const InducedModule M(make_natural(2), Rational(5, 2), f);
    for (const auto& [mono, base] : M.keys(3)) {
      const auto k = mkey(mono, base);
      for (int j = 1; j <= 3; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            if (f == Flavor::sl && a == b) continue;
            for (const auto& [k2, _] : M.act(LoopGen::E(a, b, j), k).terms()) CHECK(k2.depth() == k.depth() - j);
          }
    }
  }
}

TEST_CASE("representation property") {
  for (Flavor f : {Flavor::gl, Flavor::sl}) {
    CHECK(affine_rep_check(InducedModule(make_natural(2), Rational(7, 3), f), -2, 2, 2).passed());
    CHECK(affine_rep_check(InducedModule(make_trivial(3), Rational(-1, 2), f), -1, 1, 1).passed());
  }
}

TEST_CASE("theta") {
  const InducedModule M(make_natural(2), Rational(3), Flavor::gl);
  const auto v = theta(1, M, lie(LoopGen::E(0, 1, 1)))(wkey({0}, {1}, {}, 0));
  CHECK((v - Vec(wkey({1}, {0}, {}, 0), 1)).is_zero());
  const auto k = wkey({1, -1}, {0, 1}, {pbw_id(1, 0, 1)}, 1);
  CHECK((theta(2, M, lie(LoopGen::C()))(k) - Rational(3) * Vec(k, 1)).is_zero());

  SpaceDesc w;
  w.nvars = 2;
  w.x_lo = -1;
  w.x_hi = 1;
  w.word_len = 2;
  w.alphabet = 2;
  w.module_keys = M.keys(1);
  const auto keys = sample_basis(w, 60, 5);
  const auto s = sigma_op(Perm::transposition(0, 1, 2));
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d)
      CHECK(check_identity("sigma", commutator(theta(2, M, lie(LoopGen::E(c, d, 0))), s), zero_op<Rational>(), keys)
                .passed());
  for (Flavor f : {Flavor::gl, Flavor::sl}) {
    const InducedModule Mf(make_natural(2), Rational(7, 3), f);
    w.module_keys = Mf.keys(2);
    CHECK(theta_rep_check(2, Mf, -2, 2, subsample(sample_basis(w, 40, 9), 40, 9)).passed());
  }
}
