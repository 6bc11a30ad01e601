// Copyright 2026 The orthoseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "orthoseg/bleu.hpp"
#include "orthoseg/similarity.hpp"
#include "test_support.hpp"

namespace {

using orthoseg::testing::Family;

void BM_Lcsr(benchmark::State& state) {
  orthoseg::testing::TextGenerator gen(3);
  const auto length = static_cast<std::size_t>(state.range(0));
  std::u32string a, b;
  while (a.size() < length) a += gen.sentence(Family::kDevanagari);
  while (b.size() < length) b += gen.sentence(Family::kDevanagari);
  a.resize(length);
  b.resize(length);
  for (auto _ : state) benchmark::DoNotOptimize(orthoseg::lcsr(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lcsr)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

std::vector<orthoseg::Sentence> corpus(std::uint64_t seed, int lines) {
  orthoseg::testing::TextGenerator gen(seed);
  std::vector<orthoseg::Sentence> out;
  for (int i = 0; i < lines; ++i) out.push_back(orthoseg::tokenize_words(gen.sentence(Family::kLatin)));
  return out;
}

void BM_CorpusBleu(benchmark::State& state) {
  const auto hyps = corpus(4, static_cast<int>(state.range(0)));
  const auto refs = corpus(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orthoseg::bleu(hyps, refs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusBleu)->Arg(100)->Arg(1000);

void BM_CorpusLeBleu(benchmark::State& state) {
  const auto hyps = corpus(4, static_cast<int>(state.range(0)));
  const auto refs = corpus(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orthoseg::lebleu(hyps, refs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusLeBleu)->Arg(100)->Arg(1000);

}  // namespace
