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

#include "orthoseg/segment.hpp"
#include "orthoseg/syllabify.hpp"
#include "test_support.hpp"

namespace {

using orthoseg::testing::Family;

std::vector<std::u32string> sentences(Family family, int count) {
  orthoseg::testing::TextGenerator gen(1);
  std::vector<std::u32string> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.sentence(family));
  return out;
}

void BM_SyllabifyWord(benchmark::State& state) {
  const auto family = static_cast<Family>(state.range(0));
  orthoseg::testing::TextGenerator gen(2);
  std::vector<std::u32string> words;
  for (int i = 0; i < 1024; ++i) words.push_back(gen.word(family));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthoseg::syllabify(words[i++ & 1023]));
  }
  state.SetItemsProcessed(state.iterations());
  state.SetLabel(std::string(orthoseg::testing::family_name(family)));
}
BENCHMARK(BM_SyllabifyWord)->DenseRange(0, 5);

void BM_TokenizeRoundTrip(benchmark::State& state) {
  const auto input = sentences(Family::kDevanagari, 256);
  const orthoseg::UnitScheme scheme = state.range(0) == 0 ? orthoseg::UnitScheme::ortho_syllable()
                                                          : orthoseg::UnitScheme::char_ngram(3);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto t = orthoseg::tokenize_sentence(input[i++ & 255], scheme);
    benchmark::DoNotOptimize(orthoseg::detokenize(t));
  }
  state.SetItemsProcessed(state.iterations());
  state.SetLabel(scheme.name());
}
BENCHMARK(BM_TokenizeRoundTrip)->Arg(0)->Arg(1);

}  // namespace
