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

#ifndef ORTHOSEG_SEGMENT_HPP_
#define ORTHOSEG_SEGMENT_HPP_

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "orthoseg/syllabify.hpp"

namespace orthoseg {

class UnitScheme {
 public:
  enum class Kind { kWord, kMorph, kCharUnigram, kCharNgram, kOrthoSyllable };

  static UnitScheme word() { return UnitScheme(Kind::kWord, 0); }
  static UnitScheme morph() { return UnitScheme(Kind::kMorph, 0); }
  static UnitScheme char_unigram() { return UnitScheme(Kind::kCharUnigram, 1); }
  // n >= 2; n == 1 is char_unigram().
  static UnitScheme char_ngram(int n);
  static UnitScheme ortho_syllable() { return UnitScheme(Kind::kOrthoSyllable, 0); }

  // "word", "morph", "char", "char-ngram=N", "os".
  static UnitScheme parse(std::string_view text);
  std::string name() const;

  Kind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  bool is_subword() const noexcept { return kind_ != Kind::kWord; }

  friend bool operator==(const UnitScheme&, const UnitScheme&) = default;

 private:
  UnitScheme(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

// Externally produced morph segmentations. Every entry concatenates back to
// its key.
class MorphLexicon {
 public:
  void add(std::u32string word, std::vector<std::u32string> segments);
  const std::vector<std::u32string>* find(std::u32string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

  // "word TAB seg1 SPACE seg2 ..." per line; blank lines are skipped.
  static MorphLexicon load(std::istream& in);
  static MorphLexicon load_file(const std::string& path);

 private:
  std::map<std::u32string, std::vector<std::u32string>, std::less<>> entries_;
};

inline constexpr char32_t kDefaultMarker = U'_';

enum class MarkerCollision { kError, kReplace };

struct TokenizeOptions {
  char32_t marker = kDefaultMarker;
  MarkerCollision on_collision = MarkerCollision::kError;
  // Substitute for marker code points found inside words; 0 picks U+FF3F
  // for "_" and U+FFFD otherwise.
  char32_t replacement = 0;
  const MorphLexicon* morphs = nullptr;
  SyllabifyOptions syllabify;
  // Peel leading/trailing punctuation off words. Breaks exact round trips.
  bool split_punctuation = false;
};

struct TokenizedSentence {
  std::vector<std::u32string> tokens;
  char32_t marker = kDefaultMarker;
  UnitScheme scheme = UnitScheme::word();

  std::u32string joined() const;  // tokens separated by single spaces
};

std::vector<std::u32string> segment_word(std::u32string_view word, const UnitScheme& scheme,
                                         const MorphLexicon* morphs = nullptr,
                                         const SyllabifyOptions& syllabify_options = {});

TokenizedSentence tokenize_sentence(std::u32string_view sentence, const UnitScheme& scheme,
                                    const TokenizeOptions& options = {});

// Concatenates units between markers; markers become single spaces.
std::u32string detokenize(const std::vector<std::u32string>& tokens,
                          char32_t marker = kDefaultMarker);
// Scheme-aware inverse: word-scheme streams carry no markers and are joined
// with spaces.
std::u32string detokenize(const TokenizedSentence& sentence);
// Text form: tokens separated by spaces/tabs.
std::u32string detokenize_line(std::u32string_view line, char32_t marker = kDefaultMarker,
                               bool word_scheme = false);

struct CorpusRunOptions {
  bool skip_errors = false;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t batch_lines = 4096;
};

struct CorpusRunStats {
  std::size_t lines = 0;
  std::size_t failed_lines = 0;
};

// Streams `in` line by line through `transform` on worker threads,
// preserving order and line count. A failing line raises an Error labelled
// with its line number, or is written empty (and reported on `diagnostics`)
// when skipping.
using LineTransform = std::function<std::u32string(std::u32string_view)>;
CorpusRunStats transform_corpus(std::istream& in, std::ostream& out,
                                const LineTransform& transform, const CorpusRunOptions& run,
                                std::ostream* diagnostics = nullptr);

CorpusRunStats segment_corpus(std::istream& in, std::ostream& out, const UnitScheme& scheme,
                              const TokenizeOptions& options, const CorpusRunOptions& run = {},
                              std::ostream* diagnostics = nullptr);

CorpusRunStats desegment_corpus(std::istream& in, std::ostream& out, char32_t marker,
                                bool word_scheme, const CorpusRunOptions& run = {},
                                std::ostream* diagnostics = nullptr);

}  // namespace orthoseg

#endif  // ORTHOSEG_SEGMENT_HPP_
