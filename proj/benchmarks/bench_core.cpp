#include <benchmark/benchmark.h>

#include <vector>

#include "cliffq/brauer_severi.hpp"
#include "cliffq/catalog.hpp"
#include "cliffq/clifford.hpp"
#include "cliffq/qform.hpp"

using namespace cliffq;

namespace {

void BM_Det3Symbolic(benchmark::State& state) {
  const QForm q = make_type(DelPezzoTag::F25minus, 3, Field::prime(101));
  for (auto _ : state) benchmark::DoNotOptimize(det3(q.entries()));
}
BENCHMARK(BM_Det3Symbolic);

void BM_Adjugate3Symbolic(benchmark::State& state) {
  const QForm q = make_type(DelPezzoTag::F24, 3, Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(adjugate3(q.entries()));
}
BENCHMARK(BM_Adjugate3Symbolic);

void BM_ReduceWord(benchmark::State& state) {
  const Field f = Field::prime(101);
  ScalarMatrix g(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) g(i, j) = g(j, i) = Scalar(f, static_cast<long>(3 * i + j + 1));
  }
  ScalarWord w{Scalar::one(f), {}};
  for (long k = 0; k < state.range(0); ++k) w.letters.push_back(static_cast<std::uint8_t>((k * 7 + 2) % 3));
  const std::vector<ScalarWord> words{w};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word(words, g));
}
BENCHMARK(BM_ReduceWord)->Arg(4)->Arg(8)->Arg(12);

void BM_ScanClassify(benchmark::State& state) {
  const Field f = Field::prime(static_cast<std::uint64_t>(state.range(0)));
  const QForm q = make_type(DelPezzoTag::F23, 1, f);
  const auto points = projective_plane(f);
  for (auto _ : state) {
    for (const auto& p : points) benchmark::DoNotOptimize(classify(fiber_algebra(evaluate_at(q, p))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}
BENCHMARK(BM_ScanClassify)->Arg(5)->Arg(11);

void BM_VerifyMinorsUniversal(benchmark::State& state) {
  const ConicFamily family = ConicFamily::universal(Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(verify_minors(family, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_VerifyMinorsUniversal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
