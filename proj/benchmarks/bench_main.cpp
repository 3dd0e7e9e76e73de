#include <benchmark/benchmark.h>

#include "nsmooth/conditions.hpp"
#include "nsmooth/lattice.hpp"
#include "nsmooth/newton_data.hpp"
#include "nsmooth/oscillatory.hpp"
#include "nsmooth/parser.hpp"

using namespace nsmooth;

namespace {

NewtonData analyze(const std::string& text) {
  auto [Q, swapped] = swap_normalize(parse_polynomial(text));
  return build_r_enumeration(Q, swapped);
}

void BM_enumeration(benchmark::State& state) {
  Polynomial P = parse_polynomial("t1^2 + t1^4*t2^6 + t2^8");
  for (auto _ : state) {
    NewtonData d = build_r_enumeration(P);
    benchmark::DoNotOptimize(d.delta);
  }
}
BENCHMARK(BM_enumeration);

void BM_conditions(benchmark::State& state) {
  NewtonData d = analyze("t1^6 + t1^2*t2^4 + t1^4*t2^2 + t2^6");
  for (auto _ : state) {
    ConditionReport rep = check_conditions(d.P, d);
    benchmark::DoNotOptimize(rep.all_pass);
  }
}
BENCHMARK(BM_conditions);

void BM_oscillatory(benchmark::State& state) {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  int order = static_cast<int>(state.range(0));
  double xi3 = 64.0;
  for (auto _ : state) {
    OscResult r = oscillatory_integral(P, 1, 1, {-1.5 * xi3, -1.6875 * xi3, xi3},
                                       order, 4096);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_oscillatory)->Arg(64)->Arg(256)->Arg(1024);

void BM_classify(benchmark::State& state) {
  NewtonData d = analyze("t1^2 + t1^4*t2^6 + t2^8");
  LatticeCover cover = build_cover(normal_fan(d));
  long x = 0, y = 1;
  for (auto _ : state) {
    PointClass c = classify(cover, {x, y});
    benchmark::DoNotOptimize(c.i);
    x = (x + 7) % 256;
    y = (y + 13) % 256;
  }
}
BENCHMARK(BM_classify);

}  // namespace

BENCHMARK_MAIN();
