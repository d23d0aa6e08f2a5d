#include <benchmark/benchmark.h>

#include <string>

#include "twa/twa.hh"

namespace {

std::string ab_power(std::size_t m) {
  std::string s;
  for (std::size_t i = 0; i < m; ++i) s += "ab";
  return s;
}

void BM_Scan(benchmark::State& state) {
  const twa::Automaton ex = twa::build_a_ex();
  const twa::StateId q2 = *ex.find_state("q2");
  std::string text;
  for (int i = 0; i < state.range(0); ++i) text += "bab";
  text += "a";
  const twa::Word tape = ex.alphabet().parse_word(text);
  for (auto _ : state) benchmark::DoNotOptimize(twa::scan(ex, q2, tape));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Scan)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oN);

void BM_RunDeterministic(benchmark::State& state) {
  const twa::Automaton ex = twa::build_a_ex();
  const twa::Word input = ex.alphabet().parse_word(ab_power(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(twa::run_deterministic(ex, input));
}
BENCHMARK(BM_RunDeterministic)->RangeMultiplier(2)->Range(2, 64);

void BM_RunNondeterministic(benchmark::State& state) {
  const twa::Automaton u = twa::build_l_lin_union();
  const auto n = static_cast<std::size_t>(state.range(0));
  const twa::Word input = u.alphabet().parse_word(std::string(n, 'a') + std::string(n, 'b'));
  for (auto _ : state) benchmark::DoNotOptimize(twa::run_nondeterministic(u, input));
}
BENCHMARK(BM_RunNondeterministic)->RangeMultiplier(2)->Range(2, 32);

void BM_Enumerate(benchmark::State& state) {
  const twa::Automaton a = twa::build_a_2lin1();
  for (auto _ : state)
    benchmark::DoNotOptimize(twa::enumerate_accepted(a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_EnumeratePcpBounded(benchmark::State& state) {
  const twa::Automaton a = twa::compile_pcp_bounded({{{"a", "aa"}}});
  for (auto _ : state) benchmark::DoNotOptimize(twa::enumerate_accepted(a, 10));
}
BENCHMARK(BM_EnumeratePcpBounded)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
