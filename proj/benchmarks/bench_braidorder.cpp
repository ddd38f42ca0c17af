// Wall time against word length for word families whose cutting sequences
// grow polynomially. Generic words are pseudo-Anosov with high probability
// and their sequences grow exponentially in the length, so they are kept
// to short lengths in a separate family.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "braidorder/canonical.hpp"
#include "braidorder/order.hpp"

using namespace braidorder;

namespace {

// letter k of the periodic word (pattern)^infinity, cut to `length`
BraidWord cyclic(int strands, const std::vector<int>& pattern, int length) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) out.push_back(pattern[static_cast<std::size_t>(k) % pattern.size()]);
  return BraidWord::from_ints(strands, out);
}

BraidWord family(int which, int length) {
  switch (which) {
    case 0:
      return cyclic(3, {1}, length);  // sigma_1^L
    case 1:
      return cyclic(3, {2, 1, 2}, length);  // powers of Delta in B_3
    case 2:
      return cyclic(4, {1, 2, 3}, length);  // periodic in B_4
    default:
      return cyclic(4, {1, -3}, length);  // commuting, reducible
  }
}

void lengths(benchmark::internal::Benchmark* b) {
  for (int family_id = 0; family_id < 4; ++family_id) {
    for (int l : {10, 25, 50, 100, 200}) b->Args({family_id, l});
  }
}

void BM_Sign(benchmark::State& state) {
  const BraidWord w = family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t letters = 0;
  for (auto _ : state) {
    const CuttingSequence s = word_to_cutseq(w);
    letters = s.size();
    benchmark::DoNotOptimize(sign_of(s));
  }
  state.counters["seq_letters"] = static_cast<double>(letters);
}
BENCHMARK(BM_Sign)->Apply(lengths)->Unit(benchmark::kMicrosecond);

void BM_Compare(benchmark::State& state) {
  const BraidWord a = family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const BraidWord b = a.inserted(a.size() / 2, Generator{1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_Compare)->Apply(lengths)->Unit(benchmark::kMicrosecond);

void BM_CompareSequences(benchmark::State& state) {
  const BraidWord a = family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const CuttingSequence s = word_to_cutseq(a);
  const CuttingSequence t = word_to_cutseq(a.inserted(a.size() / 2, Generator{1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(compare_sequences(s, t));
}
BENCHMARK(BM_CompareSequences)->Apply(lengths)->Unit(benchmark::kMicrosecond);

void BM_Canonical(benchmark::State& state) {
  const BraidWord w = family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t steps = 0;
  for (auto _ : state) {
    const CanonicalResult r = canonical_form(w);
    steps = r.iterations;
    benchmark::DoNotOptimize(r.word.size());
  }
  state.counters["main_steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_Canonical)->Apply(lengths)->Unit(benchmark::kMicrosecond);

void BM_SignRandom(benchmark::State& state) {
  std::mt19937 rng(42);
  const int length = static_cast<int>(state.range(0));
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) {
    const int g = 1 + static_cast<int>(rng() % 3);
    letters.push_back(rng() % 2 ? g : -g);
  }
  const BraidWord w = BraidWord::from_ints(4, letters);
  std::size_t size = 0;
  for (auto _ : state) {
    const CuttingSequence s = word_to_cutseq(w);
    size = s.size();
    benchmark::DoNotOptimize(sign_of(s));
  }
  state.counters["seq_letters"] = static_cast<double>(size);
}
BENCHMARK(BM_SignRandom)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
