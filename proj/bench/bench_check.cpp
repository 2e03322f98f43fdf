// Serial reference vs OpenMP key-parallel identity checking.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "cherednik/dunkl.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/wspace.hpp"

using namespace cherednik;

namespace {

struct Fixture {
  LinOp<Rational> lhs, rhs;
  std::vector<BasisKey> keys;
};

// [Y_1, Y_2] = 0 on W with m = 2, N = 2.
const Fixture& y_commute() {
  static const Fixture f = [] {
    const WSpace W = make_wspace(2, InducedModule(make_natural(2), Rational(7, 3), Flavor::gl), false, Rational(5, 2));
    return Fixture{commutator(op_Y(W, 0), op_Y(W, 1)), zero_op<Rational>(),
                   subsample(w_keys(W, -2, 2, 2, 400, 1), 400, 1)};
  }();
  return f;
}

// Trigonometric [u_1, u_2] = 0 on Laurent monomials, N = 3.
const Fixture& trig_commute() {
  static const Fixture f = [] {
    const CherednikParams c{3, Rational(-7, 3)};
    return Fixture{commutator(trig_u(c, 0), trig_u(c, 1)), zero_op<Rational>(), laurent_keys(3, -3, 3)};
  }();
  return f;
}

void BM_serial(benchmark::State& st, const Fixture& (*fx)()) {
  const auto& f = fx();
  for (auto _ : st) benchmark::DoNotOptimize(check_identity_serial("bench", f.lhs, f.rhs, f.keys));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(f.keys.size()));
}

void BM_parallel(benchmark::State& st, const Fixture& (*fx)()) {
  const auto& f = fx();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(check_identity("bench", f.lhs, f.rhs, f.keys));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(f.keys.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_serial, y_commute, y_commute)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_parallel, y_commute, y_commute)
    ->Unit(benchmark::kMillisecond)
    ->DenseRange(1, omp_get_num_procs(), 1);
BENCHMARK_CAPTURE(BM_serial, trig_commute, trig_commute)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_parallel, trig_commute, trig_commute)
    ->Unit(benchmark::kMillisecond)
    ->DenseRange(1, omp_get_num_procs(), 1);

BENCHMARK_MAIN();
