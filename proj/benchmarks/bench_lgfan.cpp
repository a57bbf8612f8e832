#include <benchmark/benchmark.h>

#include <random>

#include "lgfan/problem.hpp"

using namespace lgfan;

namespace {

Ring names(int n, RingKind kind, std::vector<std::string> v) { return make_ring(n, kind, Homogenization::none, std::move(v)); }

WeylElement P(const Ring& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal lauricella(int n) {
  Ring d = make_ring(n, RingKind::weyl);
  if (n == 1) return homogenize_ideal(Ideal(d, {P(d, "dx1 - (x1*dx1 + 1/2)*(x1*dx1 + 1/3)")}), Homogenization::h11);
  return homogenize_ideal(Ideal(d, {P(d, "dx1 - (x1*dx1 + x2*dx2 + 1/2)*(x1*dx1 + 1/3)"),
                                    P(d, "dx2 - (x1*dx1 + x2*dx2 + 1/2)*(x2*dx2 + 1/5)")}),
                          Homogenization::h11);
}

Ideal bernstein_sato() {
  Ring d = names(4, RingKind::weyl, {"t1", "t2", "x", "y"});
  return Ideal(d, {P(d, "t1 - y"), P(d, "t2 - (y - (x-1)^2)"), P(d, "(-2x+2)*dt2 + dx"), P(d, "dt1 + dt2 + dy")});
}

std::vector<QVec> bs_plane() {
  return {{-1, 0, 0, 0, 1, 0, 0, 0}, {0, -1, 0, 0, 0, 1, 0, 0}};
}

}  // namespace

static void BM_DoubleDescription(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> u(-4, 4);
  std::vector<QVec> ineqs;
  for (int i = 0; i < 3 * d; ++i) {
    QVec v;
    for (int j = 0; j < d; ++j) v.emplace_back(u(rng));
    ineqs.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(HCone(d, ineqs).rays().size());
}
BENCHMARK(BM_DoubleDescription)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_BuchbergerCyclic3(benchmark::State& state) {
  Ring r = names(3, RingKind::commutative, {"a", "b", "c"});
  Ideal I(r, {P(r, "a + b + c"), P(r, "a*b + b*c + c*a"), P(r, "a*b*c - 1")});
  MatrixOrder order = from_rows(*r, {QVec{1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, order).elements.size());
}
BENCHMARK(BM_BuchbergerCyclic3)->Unit(benchmark::kMillisecond);

static void BM_BuchbergerWeyl(benchmark::State& state) {
  Ideal I = lauricella(2);
  MatrixOrder order = lifted_order(*I.ring, Weight(4, 0));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, order).elements.size());
}
BENCHMARK(BM_BuchbergerWeyl)->Unit(benchmark::kMillisecond);

static void BM_CuspLocalFan(benchmark::State& state) {
  Ring r = names(2, RingKind::commutative, {"x", "y"});
  Ideal J = local_homogenization(Ideal(r, {P(r, "x^3 - y^2")}));
  WeightSubspace s = make_subspace(*r, Region::uloc);
  for (auto _ : state) {
    Enumeration e = enumerate(J, s);
    LocalContext ctx(J);
    benchmark::DoNotOptimize(assemble_local_fan(merge_classes(e.cones, s, ctx), s, &ctx).fan.cones.size());
  }
}
BENCHMARK(BM_CuspLocalFan)->Unit(benchmark::kMillisecond);

static void BM_BernsteinSatoLocalFan(benchmark::State& state) {
  Ideal I = bernstein_sato();
  WeightSubspace s = make_subspace(*I.ring, Region::wloc, bs_plane());
  for (auto _ : state) {
    Ideal J = local_homogenization(I);
    Enumeration e = enumerate(J, s);
    LocalContext ctx(J);
    benchmark::DoNotOptimize(assemble_local_fan(merge_classes(e.cones, s, ctx), s, &ctx).fan.cones.size());
  }
}
BENCHMARK(BM_BernsteinSatoLocalFan)->Unit(benchmark::kMillisecond);

static void BM_LauricellaGlobalFan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  Ideal I = lauricella(n);
  WeightSubspace s = make_subspace(*with_homogenization(I.ring, Homogenization::none), Region::wglob);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(I, s, {threads, 0}).cones.size());
}
BENCHMARK(BM_LauricellaGlobalFan)->Args({1, 1})->Args({2, 1})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
