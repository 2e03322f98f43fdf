#include <doctest.h>

#include "cherednik/gl_module.hpp"

using namespace cherednik;

namespace {

Matrix col(std::initializer_list<int> v) {
  Matrix r(static_cast<int>(v.size()), 1);
  int i = 0;
  for (int c : v) r(i++, 0) = c;
  return r;
}

void check_trace_central(const GlModule& u) {
  const Matrix i = u.trace_element();
  for (int a = 0; a < u.m(); ++a)
    for (int b = 0; b < u.m(); ++b) CHECK(i * u.E(a, b) == u.E(a, b) * i);
}

}  // namespace

TEST_CASE("natural module") {
  const auto u = make_natural(2);
  CHECK(u.dim() == 2);
  CHECK(u.E(0, 1) * col({0, 1}) == col({1, 0}));
  CHECK((u.E(0, 1) * col({1, 0})).is_zero());
  CHECK(u.trace_element() == Matrix::identity(2));
  CHECK(validate(make_natural(3)).passed());
  check_trace_central(make_natural(3));
}

TEST_CASE("one-dimensional modules") {
  const auto u = make_onedim(1, {Rational(3)});
  CHECK(u.E(0, 0)(0, 0) == 3);
  const auto t = make_trivial(2);
  for (const auto& a : t.action()) CHECK(a.is_zero());
  CHECK(validate(make_onedim(2, {Rational(1), Rational(1)})).passed());
  // [E_12, E_21] = E_11 - E_22 has to act by 0 on a line, so the weights must agree.
  CHECK_THROWS_WITH_AS(make_onedim(2, {Rational(1), Rational(0)}),
                       doctest::Contains("(1,2,2,1)"), ModuleError);
  CHECK(validate(make_onedim(1, {Rational(-5, 2)})).passed());
  CHECK_THROWS_AS(make_onedim(2, {Rational(1)}), ModuleError);
}

TEST_CASE("tensor products") {
  const auto nn = tensor(make_natural(2), make_natural(2));
  CHECK(nn.dim() == 4);
  CHECK(nn.trace_element() == Rational(2) * Matrix::identity(4));
  CHECK(validate(nn).passed());
  check_trace_central(nn);
  CHECK(tensor(make_trivial(2), make_natural(2)) == make_natural(2));
  CHECK_THROWS_AS(tensor(make_natural(2), make_natural(3)), ModuleError);
}

TEST_CASE("validation negative control") {
  auto act = make_natural(2).action();
  act[0 * 2 + 1] = Matrix::unit(2, 1, 0);  // E_12 replaced by e_21
  const auto bad = GlModule::unchecked(2, 2, act);
  const auto rep = validate(bad);
  CHECK_FALSE(rep.passed());
  bool names_12_21 = false;
  for (const auto& f : rep.failures) names_12_21 = names_12_21 || f.input == "(1,2,2,1)";
  CHECK(names_12_21);
  CHECK_THROWS_AS(GlModule(2, 2, act), ModuleError);
}

TEST_CASE("casimir split") {
  for (int m = 1; m <= 4; ++m) {
    const auto rep = casimir_split_check(m);
    CHECK(rep.passed());
    CHECK(rep.instances.at("reconstruct") == m * m);
  }
}

TEST_CASE("classical Yang-Baxter equation") {
  for (int m = 1; m <= 3; ++m) CHECK(check_cybe(m).passed());
}
