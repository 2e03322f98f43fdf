#include <doctest.h>

#include "cherednik/linops.hpp"

using namespace cherednik;

namespace {

// Cyclic shift of a word plus a constant; an arbitrary non-trivial operator.
LinOp<Rational> shift_op() {
  return LinOp<Rational>("shift", [](const BasisKey& k) {
    BasisKey out = k;
    for (auto& c : out.word) c = (c + 1) % 2;
    Vec v(out, Rational(2));
    v.add_term(k, Rational(-1, 3));
    return v;
  });
}

}  // namespace

TEST_CASE("operator algebra") {
  SpaceDesc s;
  s.word_len = 2;
  s.alphabet = 2;
  s.module_keys = {{{}, 0}, {{}, 1}};
  const auto keys = sample_basis(s, 100, 1);
  REQUIRE(keys.size() == 8);
  const auto a = shift_op();
  const auto id = identity_op<Rational>();
  for (const auto& k : keys) {
    CHECK(commutator(a, a)(k).is_zero());
    CHECK((a + Rational(-1) * a)(k).is_zero());
    CHECK((compose(id, a)(k) - a(k)).is_zero());
  }
  CHECK(check_identity("zero", zero_op<Rational>(), zero_op<Rational>(), keys).passed());
  const auto bad = check_identity("perturbed", a, a + id, keys);
  CHECK_FALSE(bad.passed());
  CHECK(bad.failure_count == 8);
  CHECK(bad == check_identity_serial("perturbed", a, a + id, keys));
}

TEST_CASE("basis sampling") {
  SpaceDesc w;
  w.nvars = 2;
  w.x_lo = -1;
  w.x_hi = 1;
  w.word_len = 2;
  w.alphabet = 2;
  w.module_keys = {{{}, 0}, {{pbw_id(1, 0, 1)}, 0}};
  CHECK(basis_size(w) == 9 * 4 * 2);
  CHECK(sample_basis(w, 5, 1).size() == 72);
  const auto all = sample_basis(w, 1, 0);
  const auto sub = subsample(all, 30, 4);
  CHECK(sub.size() == 30);
  CHECK(sub == subsample(all, 30, 4));
  CHECK(std::is_sorted(sub.begin(), sub.end()));
  CHECK(subsample(sub, 100, 1) == sub);


  w.x_lo = -4;
  w.x_hi = 4;
  w.word_len = 3;
  w.module_keys.resize(20, {{}, 0});
  REQUIRE(basis_size(w) > kExhaustiveLimit);
  const auto s1 = sample_basis(w, 50, 42), s2 = sample_basis(w, 50, 42);
  CHECK(s1 == s2);
  CHECK(s1.size() == 50);
  CHECK(sample_basis(w, 50, 43) != s1);

  SpaceDesc poly;
  poly.nvars = 2;
  poly.total_degree = 2;
  CHECK(basis_size(poly) == 6);
  CHECK_THROWS(sample_basis(poly, 0, 1));
  SpaceDesc empty;
  empty.nvars = 1;
  empty.x_lo = 1;
  empty.x_hi = 0;
  CHECK_THROWS(sample_basis(empty, 3, 1));
}

TEST_CASE("key rendering is one-based") {
  BasisKey k;
  k.x = {1, -2};
  k.word = {0, 1};
  k.mono = {pbw_id(1, 0, 1), pbw_id(2, 0, kCartan)};
  k.base = 1;
  CHECK(key_str(k) == "x^[1,-2] w[1,2] pbw[E12t^-1,H1t^-2] u2");
  CHECK(k.depth() == 3);
}
