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

#ifndef ORTHOSEG_NBEST_HPP_
#define ORTHOSEG_NBEST_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthoseg/bleu.hpp"
#include "orthoseg/segment.hpp"

namespace orthoseg {

// One line of a Moses-style n-best list:
//   sentence_id ||| tokens ||| features ||| model_score [||| extra ...]
struct NBestEntry {
  std::size_t sentence_id = 0;
  std::vector<std::string> fields;  // trimmed UTF-8 fields, id first

  const std::string& tokens() const { return fields[1]; }
  const std::string& features() const { return fields[2]; }
  double model_score() const;

  static NBestEntry parse(std::string_view line);
  std::string format() const;
};

using NBestList = std::vector<NBestEntry>;

// Validates that sentence ids never decrease.
NBestList parse_nbest(std::istream& in);

// Desegments an entry's tokens and scores the words against `ref` with
// smoothed sentence BLEU.
double entry_word_bleu(const NBestEntry& entry, const Sentence& ref, char32_t marker,
                       int max_n = 4);

std::string format_score(double value);

// Copy of `nbest` with " ||| word_bleu" appended to each entry, in order.
NBestList nbest_word_bleu(const NBestList& nbest, std::span<const Sentence> refs,
                          char32_t marker = kDefaultMarker, int max_n = 4);

// Streaming variant; returns the number of entries written.
std::size_t rescore_nbest(std::istream& nbest, std::span<const Sentence> refs, char32_t marker,
                          std::ostream& out, int max_n = 4);

}  // namespace orthoseg

#endif  // ORTHOSEG_NBEST_HPP_
