#include <benchmark/benchmark.h>

#include <cmath>

#include "fwlab/algebra_suite.hpp"
#include "fwlab/eriksen.hpp"
#include "fwlab/phase_ops.hpp"
#include "fwlab/wavepacket.hpp"
#include "fwlab/zitter.hpp"

using namespace fwlab;

static void BM_BoostCommutator(benchmark::State& state) {
  const auto a = build_operator(Family::boost_fw, Rep::fw, 1.0, 0);
  const auto b = build_operator(Family::boost_fw, Rep::fw, 1.0, 1);
  const Vec3 p{0.3, -1.1, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(op_commutator(a, b, p));
}
BENCHMARK(BM_BoostCommutator);

static void BM_QuantumSuite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_quantum_suite(OperatorSetName::conventional, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuantumSuite)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_EriksenUnitary(benchmark::State& state) {
  const Grid1D g{static_cast<int>(state.range(0)), 32.0};
  const auto h = discretize_dirac_1d(g, 1.0, [](double x) { return 0.01 * std::exp(-x * x / 8.0); });
  for (auto _ : state) benchmark::DoNotOptimize(eriksen_unitary(h));
}
BENCHMARK(BM_EriksenUnitary)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ZitterRecord(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(record_evolution(Rep::dirac, Vec3{1, 0, 0}, 1.0, 0, 10.0, 2001, Route::numeric));
}
BENCHMARK(BM_ZitterRecord)->Unit(benchmark::kMillisecond);

static void BM_PacketPictureChange(benchmark::State& state) {
  const Grid1D g{static_cast<int>(state.range(0)), 64.0};
  PacketSpec s;
  s.p0 = 2.0;
  const WavePacket1D w = make_gaussian_packet(g, s);
  for (auto _ : state) benchmark::DoNotOptimize(picture_change_error(w, Observable::of(ObservableKind::position_sq)));
}
BENCHMARK(BM_PacketPictureChange)->Arg(256)->Arg(1024);
BENCHMARK_MAIN();
