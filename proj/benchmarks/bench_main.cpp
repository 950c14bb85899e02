#include <benchmark/benchmark.h>

#include "sunsys/assembly.hpp"
#include "sunsys/certificate.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/prime.hpp"
#include "sunsys/search.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;

namespace {

void zigzag(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prime::zigzag_system(k, true));
}
BENCHMARK(zigzag)->Arg(9)->Arg(25)->Arg(101);

void prime_direct(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prime::direct(p, 5 * p));
}
BENCHMARK(prime_direct)->Arg(13)->Arg(37)->Arg(61);

void hole(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(holes::hole(k, n));
}
BENCHMARK(hole)->Args({9, 21})->Args({13, 100})->Args({25, 201});

void solve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const long long v = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(assembly::solve(k, v));
  state.counters["blocks"] = static_cast<double>(v * (v - 1) / (4 * k));
}
BENCHMARK(solve)->Args({7, 120})->Args({7, 589})->Args({11, 573})->Args({13, 1093})->Unit(benchmark::kMillisecond);

void verify_certificate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const long long v = state.range(1);
  const auto cert = make_certificate(assembly::solve(k, v), k);
  for (auto _ : state) benchmark::DoNotOptimize(verify(cert));
  state.SetItemsProcessed(state.iterations() * v * (v - 1) / 2);
}
BENCHMARK(verify_certificate)->Args({7, 120})->Args({7, 589})->Unit(benchmark::kMillisecond);

void json_round_trip(benchmark::State& state) {
  const auto cert = make_certificate(assembly::solve(7, 232), 7);
  for (auto _ : state) benchmark::DoNotOptimize(certificate_from_json(to_json(cert)));
}
BENCHMARK(json_round_trip)->Unit(benchmark::kMillisecond);

void exact_cover(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int v = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search::search_complete(k, v, search::block_kind::sun));
}
BENCHMARK(exact_cover)->Args({3, 9})->Args({3, 40})->Args({5, 41})->Args({7, 21})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
