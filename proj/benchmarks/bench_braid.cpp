#include <benchmark/benchmark.h>

#include "wzt/braid.hpp"
#include "wzt/random.hpp"

namespace {

wzt::BraidWord random_word(int strands, int length, wzt::RandomGen& gen) {
  std::vector<wzt::BraidLetter> letters;
  for (int i = 0; i < length; ++i)
    letters.push_back(wzt::BraidLetter{gen.uniform_int(1, strands - 1), gen.coin() ? 1 : -1});
  return wzt::BraidWord(strands, std::move(letters));
}

void BM_handle_reduce(benchmark::State& state) {
  wzt::RandomGen gen(7);
  const int strands = 6;
  const int length = static_cast<int>(state.range(0));
  std::vector<wzt::BraidWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(strands, length, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wzt::handle_reduce(words[i % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_handle_reduce)->Arg(10)->Arg(20)->Arg(40);

void BM_dehornoy_compare(benchmark::State& state) {
  wzt::RandomGen gen(11);
  const int strands = 6;
  const int length = static_cast<int>(state.range(0));
  std::vector<wzt::BraidWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(strands, length, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wzt::dehornoy_compare(words[i % words.size()], words[(i + 1) % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_dehornoy_compare)->Arg(10)->Arg(20);

void BM_artin_equality(benchmark::State& state) {
  wzt::RandomGen gen(13);
  const int strands = 6;
  const int length = static_cast<int>(state.range(0));
  std::vector<wzt::BraidWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(strands, length, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wzt::equal_braids(words[i % words.size()], words[(i + 1) % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_artin_equality)->Arg(10)->Arg(20)->Arg(40);

}  // namespace
