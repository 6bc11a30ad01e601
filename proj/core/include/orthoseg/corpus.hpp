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

#ifndef ORTHOSEG_CORPUS_HPP_
#define ORTHOSEG_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthoseg/script.hpp"
#include "orthoseg/segment.hpp"

namespace orthoseg {

using Corpus = std::vector<std::u32string>;

// One NFC-normalized sentence per line; BOM and CR/LF terminators stripped.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

// UTF-8, LF after every line.
void write_corpus(std::ostream& out, std::span<const std::u32string> lines);
void write_corpus_file(const std::string& path, std::span<const std::u32string> lines);

struct ParallelCorpus {
  Corpus source_lines;
  Corpus target_lines;
  ScriptId source_script = ScriptId::kUnsupported;
  ScriptId target_script = ScriptId::kUnsupported;

  // Checks alignment and records the dominant script of each side.
  static ParallelCorpus make(Corpus source, Corpus target);
  std::size_t size() const noexcept { return source_lines.size(); }
};

// Most frequent detected script over the words of `lines`; words that are
// mixed-script or letterless are ignored.
ScriptId dominant_script(std::span<const std::u32string> lines);

struct SplitSizes {
  std::size_t train = 0;
  std::size_t tune = 0;
  std::size_t test = 0;

  // "TRAIN,TUNE,TEST"
  static SplitSizes parse(std::string_view text);
  std::size_t total() const noexcept { return train + tune + test; }
};

struct CorpusSplit {
  Corpus train;
  Corpus tune;
  Corpus test;
};

// Line order used by a split: identity, or a seeded Fisher-Yates shuffle
// that is identical across platforms.
std::vector<std::size_t> split_order(std::size_t lines, std::optional<std::uint64_t> seed);

CorpusSplit split_corpus(std::span<const std::u32string> corpus, const SplitSizes& sizes,
                         std::optional<std::uint64_t> seed = std::nullopt);

// Both sides receive the same permutation.
std::array<ParallelCorpus, 3> split_parallel(const ParallelCorpus& corpus, const SplitSizes& sizes,
                                             std::optional<std::uint64_t> seed = std::nullopt);

struct VocabStats {
  UnitScheme scheme = UnitScheme::word();
  std::size_t type_count = 0;
  std::size_t token_count = 0;
  double mean_unit_length = 0.0;  // code points per unit
};

VocabStats vocab_stats(std::span<const std::u32string> corpus, const UnitScheme& scheme,
                       const MorphLexicon* morphs = nullptr,
                       const SyllabifyOptions& syllabify_options = {});

// "scheme TAB types TAB tokens TAB mean_len"
std::string format_vocab_stats(const VocabStats& stats);

// type_count(a) / type_count(b).
double unit_ratio(std::span<const std::u32string> corpus, const UnitScheme& a, const UnitScheme& b,
                  const MorphLexicon* morphs = nullptr,
                  const SyllabifyOptions& syllabify_options = {});

}  // namespace orthoseg

#endif  // ORTHOSEG_CORPUS_HPP_
