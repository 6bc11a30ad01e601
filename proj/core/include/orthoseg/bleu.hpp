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

#ifndef ORTHOSEG_BLEU_HPP_
#define ORTHOSEG_BLEU_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthoseg {

using Sentence = std::vector<std::u32string>;

Sentence tokenize_words(std::u32string_view line);
std::vector<Sentence> tokenize_lines(std::span<const std::u32string> lines);

struct BleuReport {
  int max_n = 4;
  std::vector<double> matches;       // per order; fractional for Le-BLEU
  std::vector<std::size_t> totals;   // hypothesis n-grams per order
  std::vector<double> precisions;    // matches / totals
  double brevity_penalty = 1.0;
  double score = 0.0;                // percentage
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
};

// Corpus-level BLEU against a single reference per hypothesis.
BleuReport bleu(std::span<const Sentence> hyps, std::span<const Sentence> refs, int max_n = 4);

// Sentence BLEU with add-one smoothing of the n >= 2 precisions.
double smoothed_sentence_bleu(const Sentence& hyp, const Sentence& ref, int max_n = 4);

std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

// 1 - edit_distance / max(|a|, |b|).
double word_similarity(std::u32string_view a, std::u32string_view b);

// BLEU with fuzzy word matching. An n-gram pair scores the product of its
// word similarities when each is >= delta; hypothesis and reference n-grams
// are paired one-to-one, greedily by descending score.
BleuReport lebleu(std::span<const Sentence> hyps, std::span<const Sentence> refs,
                  double delta = 0.6, int max_n = 4);

// "key=value" lines for --report files.
std::string format_report(std::string_view metric, const BleuReport& report);

}  // namespace orthoseg

#endif  // ORTHOSEG_BLEU_HPP_
