// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "antisym/verify.hpp"

using namespace antisym;

namespace {

std::vector<Label> labels(std::initializer_list<const char*> bits) {
  std::vector<Label> out;
  for (const char* b : bits) out.push_back(Label::parse(b));
  return out;
}

kernels::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Execution::Serial : kernels::Execution::Parallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "omp x" + std::to_string(kernels::max_threads()));
}

void BM_ExhaustiveLemma(benchmark::State& state) {
  LemmaCheckConfig config;
  config.execution = mode(state);
  const auto universe = labels({"", "01", "1"});
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto r = exhaustive_lemma_check(universe, 4, config);
    pairs += r.pairs_checked;
    benchmark::DoNotOptimize(r.violations.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs));
  set_label(state);
}

void BM_RandomLemma(benchmark::State& state) {
  LemmaCheckConfig config;
  config.execution = mode(state);
  const auto pool = labels({"", "000000001", "1"});
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto r = random_lemma_campaign(pool, 8, 2000, 1, config);
    pairs += r.pairs_checked;
    benchmark::DoNotOptimize(r.violations.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs));
  set_label(state);
}

void BM_Containment(benchmark::State& state) {
  ContainmentConfig config;
  config.execution = mode(state);
  config.sample_count = 1000;
  const HamelVector x{{Label::parse(""), Rational(1)}, {Label::parse("1"), Rational(1, 2)}};
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto r = containment_campaign(x, config);
    pairs += r.pairs_checked;
    benchmark::DoNotOptimize(r.violations.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_ExhaustiveLemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomLemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Containment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
