#include <benchmark/benchmark.h>

#include "wzt/magnus.hpp"
#include "wzt/pure_braid.hpp"
#include "wzt/random.hpp"

namespace {

wzt::FreeWord random_word(int rank, int length, wzt::RandomGen& gen) {
  std::vector<wzt::FreeLetter> letters;
  for (int i = 0; i < length; ++i)
    letters.push_back(wzt::FreeLetter{gen.uniform_int(1, rank), gen.coin() ? 1 : -1});
  return wzt::FreeWord(rank, std::move(letters));
}

void BM_magnus_compare(benchmark::State& state) {
  wzt::RandomGen gen(17);
  const int rank = 4;
  const int length = static_cast<int>(state.range(0));
  std::vector<wzt::FreeWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rank, length, gen));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wzt::magnus_compare(words[i % words.size()], words[(i + 1) % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_magnus_compare)->Arg(10)->Arg(20);

void BM_comb(benchmark::State& state) {
  wzt::RandomGen gen(19);
  const int strands = 5;
  std::vector<wzt::BraidWord> words;
  for (int i = 0; i < 32; ++i) {
    wzt::BraidWord w = wzt::BraidWord::identity(strands);
    for (int b = 0; b < static_cast<int>(state.range(0)); ++b) {
      int j = gen.uniform_int(2, strands);
      int k = gen.uniform_int(1, j - 1);
      wzt::BraidWord band = wzt::band_generator(strands, k, j);
      if (gen.coin()) band = wzt::invert(band);
      w = wzt::concat(w, band);
    }
    words.push_back(w);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wzt::comb(words[i % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_comb)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
