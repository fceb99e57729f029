#include <benchmark/benchmark.h>

#include "weibullr/weibullr.hpp"

using namespace weibullr;

namespace {

WeibullR model_for(int family) {
  switch (family) {
    case 0: return WeibullR({2.0, 1.0}, make_lomax(1.0, 1.0));
    case 1: return WeibullR({1.5, 1.0}, make_normal(0.0, 1.0));
    case 2: return WeibullR({2.0, 1.0}, make_cauchy(1.0));
    default: return WeibullR({1.8, 1.2}, make_exponential(3.0));
  }
}

const char* family_label(int family) {
  static const char* labels[] = {"lomax", "normal", "cauchy", "exponential"};
  return labels[family];
}

void BM_Pdf(benchmark::State& state) {
  const auto d = model_for(static_cast<int>(state.range(0)));
  state.SetLabel(family_label(static_cast<int>(state.range(0))));
  double x = d.quantile(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(d.pdf(x));
}
BENCHMARK(BM_Pdf)->DenseRange(0, 3);

void BM_Quantile(benchmark::State& state) {
  const auto d = model_for(static_cast<int>(state.range(0)));
  state.SetLabel(family_label(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(d.quantile(0.987));
}
BENCHMARK(BM_Quantile)->DenseRange(0, 3);

void BM_Sample(benchmark::State& state) {
  const auto d = model_for(0);
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(d.sample(static_cast<std::size_t>(state.range(0)), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(1 << 10)->Arg(1 << 16);

void BM_Entropy(benchmark::State& state) {
  const auto d = model_for(static_cast<int>(state.range(0)));
  state.SetLabel(family_label(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(d).value);
}
BENCHMARK(BM_Entropy)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

// Adaptive fallback: heavy Lomax tail defeats Gauss-Laguerre.
void BM_MomentAdaptive(benchmark::State& state) {
  const WeibullR d({1.0, 1.0}, make_lomax(1.2, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(moment(d, 1).value);
}
BENCHMARK(BM_MomentAdaptive)->Unit(benchmark::kMicrosecond);

void BM_ReliabilitySeries(benchmark::State& state) {
  const ReliabilityQuery q{1.0, state.range(0) / 100.0};
  for (auto _ : state) benchmark::DoNotOptimize(reliability_series(q));
}
BENCHMARK(BM_ReliabilitySeries)->Arg(10)->Arg(50)->Arg(90)->Unit(benchmark::kMicrosecond);

void BM_ReliabilityQuadrature(benchmark::State& state) {
  const ReliabilityQuery q{1.0, state.range(0) / 100.0};
  for (auto _ : state) benchmark::DoNotOptimize(reliability_quadrature(q));
}
BENCHMARK(BM_ReliabilityQuadrature)->Arg(10)->Arg(50)->Arg(250)->Unit(benchmark::kMicrosecond);

void BM_RecordSeries(benchmark::State& state) {
  const auto d = model_for(0);
  const int m = static_cast<int>(state.range(0));
  const double x = d.quantile(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(record_marginal_pdf_series(d, {m, 2 * m + 2}, x));
}
BENCHMARK(BM_RecordSeries)->Arg(1)->Arg(5);

void BM_Fit(benchmark::State& state) {
  const auto truth = model_for(0);
  RandomSource data_rng(3);
  const auto data = truth.sample(static_cast<std::size_t>(state.range(0)), data_rng);
  FitSpec spec;
  spec.family = Family::lomax;
  spec.free = {"c", "k"};
  spec.baseline_init = {std::nullopt, 1.0};
  for (auto _ : state) {
    RandomSource rng(7);
    benchmark::DoNotOptimize(fit_mle(data, spec, rng).log_likelihood);
  }
}
BENCHMARK(BM_Fit)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
