#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "se3tangent/approximations.hpp"
#include "se3tangent/block_form.hpp"
#include "se3tangent/derivatives.hpp"
#include "se3tangent/exp_dexp.hpp"
#include "se3tangent/jacobians.hpp"

namespace {

using se3tan::Vec6;

std::vector<Vec6> inputs(size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Vec6> v(n);
  for (auto& X : v) {
    for (int i = 0; i < 6; ++i) X(i) = d(rng);
  }
  return v;
}

const auto kScrews = inputs(256);

void BM_dexp(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(se3tan::dexp(kScrews[i++ % kScrews.size()]));
  }
}
BENCHMARK(BM_dexp);

void BM_dexpinv(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(se3tan::dexpinv(kScrews[i++ % kScrews.size()]));
  }
}
BENCHMARK(BM_dexpinv);

void BM_dexp_block(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(se3tan::dexp_block(kScrews[i++ % kScrews.size()]).assemble());
  }
}
BENCHMARK(BM_dexp_block);

void BM_ddexp(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& U = kScrews[(i + 1) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::ddexp(X, U));
  }
}
BENCHMARK(BM_ddexp);

void BM_ddexp_block(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& U = kScrews[(i + 1) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::ddexp_block(X, U));
  }
}
BENCHMARK(BM_ddexp_block);

void BM_d2dexp(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& U = kScrews[(i + 1) % kScrews.size()];
    const Vec6& S = kScrews[(i + 2) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::d2dexp(X, U, S));
  }
}
BENCHMARK(BM_d2dexp);

void BM_jac_eval(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& Z = kScrews[(i + 1) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::jac_eval(X, Z));
  }
}
BENCHMARK(BM_jac_eval);

void BM_hessian_eval(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& Q = kScrews[(i + 1) % kScrews.size()];
    const Vec6& Z = kScrews[(i + 2) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::hessian_eval(X, Q, Z));
  }
}
BENCHMARK(BM_hessian_eval);

void BM_ddexp_approx_k2(benchmark::State& state) {
  size_t i = 0;
  for (auto _ : state) {
    const Vec6& X = kScrews[i % kScrews.size()];
    const Vec6& U = kScrews[(i + 1) % kScrews.size()];
    ++i;
    benchmark::DoNotOptimize(se3tan::ddexp_approx(X, U, 2));
  }
}
BENCHMARK(BM_ddexp_approx_k2);

}  // namespace
