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

#include "orthoseg/segment.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <fstream>
#include <thread>

#include "orthoseg/error.hpp"
#include "orthoseg/line_reader.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

std::vector<std::u32string_view> peel_punctuation(std::u32string_view word) {
  std::vector<std::u32string_view> pieces;
  std::size_t begin = 0;
  std::size_t end = word.size();
  while (begin < end && is_punctuation(word[begin])) {
    pieces.push_back(word.substr(begin, 1));
    ++begin;
  }
  std::size_t tail = end;
  while (tail > begin && is_punctuation(word[tail - 1])) --tail;
  if (tail > begin) pieces.push_back(word.substr(begin, tail - begin));
  for (std::size_t i = tail; i < end; ++i) pieces.push_back(word.substr(i, 1));
  return pieces;
}

char32_t replacement_for(const TokenizeOptions& options) {
  if (options.replacement != 0) return options.replacement;
  return options.marker == U'_' ? char32_t{0xFF3F} : char32_t{0xFFFD};
}

}  // namespace

UnitScheme UnitScheme::char_ngram(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kParameter,
                "character n-gram order must be >= 2 (got " + std::to_string(n) + ")");
  }
  return UnitScheme(Kind::kCharNgram, n);
}

UnitScheme UnitScheme::parse(std::string_view text) {
  if (text == "word") return word();
  if (text == "morph") return morph();
  if (text == "char") return char_unigram();
  if (text == "os") return ortho_syllable();
  constexpr std::string_view prefix = "char-ngram=";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return n == 1 ? char_unigram() : char_ngram(n);
    }
  }
  throw Error(ErrorCode::kParameter, "unknown unit scheme \"" + std::string(text) +
                                         "\" (expected word|morph|char|char-ngram=N|os)");
}

std::string UnitScheme::name() const {
  switch (kind_) {
    case Kind::kWord: return "word";
    case Kind::kMorph: return "morph";
    case Kind::kCharUnigram: return "char";
    case Kind::kCharNgram: return "char-ngram=" + std::to_string(n_);
    case Kind::kOrthoSyllable: return "os";
  }
  return "word";
}

void MorphLexicon::add(std::u32string word, std::vector<std::u32string> segments) {
  std::u32string joined;
  for (const auto& s : segments) {
    if (s.empty()) throw Error(ErrorCode::kParse, "empty morph segment for \"" + encode_utf8(word) + "\"");
    joined += s;
  }
  if (joined != word) {
    throw Error(ErrorCode::kParse, "morph segments \"" + encode_utf8(joined) +
                                       "\" do not concatenate to \"" + encode_utf8(word) + "\"");
  }
  entries_.insert_or_assign(std::move(word), std::move(segments));
}

const std::vector<std::u32string>* MorphLexicon::find(std::u32string_view word) const {
  const auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

MorphLexicon MorphLexicon::load(std::istream& in) {
  MorphLexicon lexicon;
  LineReader reader(in);
  std::u32string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const std::size_t tab = line.find(U'\t');
    if (tab == std::u32string::npos) {
      throw Error(ErrorCode::kParse, "morph lexicon entry lacks a TAB").at_line(reader.line_number());
    }
    std::vector<std::u32string> segments;
    for (std::u32string_view s : split_words(std::u32string_view(line).substr(tab + 1))) {
      segments.emplace_back(s);
    }
    try {
      lexicon.add(line.substr(0, tab), std::move(segments));
    } catch (const Error& e) {
      throw e.at_line(reader.line_number());
    }
  }
  return lexicon;
}

MorphLexicon MorphLexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open morph lexicon " + path);
  return load(in);
}

std::u32string TokenizedSentence::joined() const {
  std::u32string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(U' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::u32string> segment_word(std::u32string_view word, const UnitScheme& scheme,
                                         const MorphLexicon* morphs,
                                         const SyllabifyOptions& syllabify_options) {
  switch (scheme.kind()) {
    case UnitScheme::Kind::kWord:
      return {std::u32string(word)};
    case UnitScheme::Kind::kMorph: {
      if (!morphs) throw Error(ErrorCode::kParameter, "morph scheme requires a morph lexicon");
      if (const auto* segments = morphs->find(word)) return *segments;
      return {std::u32string(word)};
    }
    case UnitScheme::Kind::kCharUnigram:
    case UnitScheme::Kind::kCharNgram: {
      const std::size_t n = static_cast<std::size_t>(scheme.n());
      std::vector<std::u32string> units;
      units.reserve((word.size() + n - 1) / n);
      for (std::size_t i = 0; i < word.size(); i += n) units.emplace_back(word.substr(i, n));
      return units;
    }
    case UnitScheme::Kind::kOrthoSyllable:
      if (word.empty()) return {};
      return syllable_texts(syllabify(word, syllabify_options));
  }
  return {std::u32string(word)};
}

TokenizedSentence tokenize_sentence(std::u32string_view sentence, const UnitScheme& scheme,
                                    const TokenizeOptions& options) {
  TokenizedSentence result;
  result.marker = options.marker;
  result.scheme = scheme;

  const std::u32string normalized = to_nfc(sentence);
  std::vector<std::u32string_view> words;
  for (std::u32string_view w : split_words(normalized)) {
    if (options.split_punctuation) {
      for (std::u32string_view piece : peel_punctuation(w)) words.push_back(piece);
    } else {
      words.push_back(w);
    }
  }

  const std::u32string marker_token(1, options.marker);
  std::u32string scratch;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::u32string_view word = words[i];
    if (word.find(options.marker) != std::u32string_view::npos) {
      if (options.on_collision == MarkerCollision::kError) {
        throw Error(ErrorCode::kMarkerCollision, "word \"" + encode_utf8(word) +
                                                     "\" contains the boundary marker \"" +
                                                     encode_utf8(marker_token) + "\"");
      }
      scratch.assign(word);
      std::replace(scratch.begin(), scratch.end(), options.marker, replacement_for(options));
      word = scratch;
    }
    if (scheme.is_subword() && i > 0) result.tokens.push_back(marker_token);
    for (auto& unit : segment_word(word, scheme, options.morphs, options.syllabify)) {
      result.tokens.push_back(std::move(unit));
    }
  }
  return result;
}

std::u32string detokenize(const std::vector<std::u32string>& tokens, char32_t marker) {
  std::u32string out;
  bool previous_was_marker = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::u32string& token = tokens[i];
    const bool is_marker = token.size() == 1 && token[0] == marker;
    if (is_marker) {
      if (i == 0 || i + 1 == tokens.size()) {
        throw Error(ErrorCode::kMalformedStream, "boundary marker at stream edge (token " +
                                                     std::to_string(i + 1) + ")");
      }
      if (previous_was_marker) {
        throw Error(ErrorCode::kMalformedStream,
                    "consecutive boundary markers at token " + std::to_string(i + 1));
      }
      out.push_back(U' ');
    } else {
      if (token.find(marker) != std::u32string::npos) {
        throw Error(ErrorCode::kMalformedStream,
                    "unit \"" + encode_utf8(token) + "\" contains the boundary marker");
      }
      out += token;
    }
    previous_was_marker = is_marker;
  }
  return out;
}

std::u32string detokenize(const TokenizedSentence& sentence) {
  if (sentence.scheme.is_subword()) return detokenize(sentence.tokens, sentence.marker);
  return sentence.joined();
}

std::u32string detokenize_line(std::u32string_view line, char32_t marker, bool word_scheme) {
  std::vector<std::u32string> tokens;
  for (std::u32string_view t : split_words(line)) tokens.emplace_back(t);
  if (word_scheme) {
    TokenizedSentence s;
    s.tokens = std::move(tokens);
    return s.joined();
  }
  return detokenize(tokens, marker);
}

CorpusRunStats transform_corpus(std::istream& in, std::ostream& out,
                                const LineTransform& transform, const CorpusRunOptions& run,
                                std::ostream* diagnostics) {
  const unsigned threads =
      run.threads != 0 ? run.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t batch_size = std::max<std::size_t>(run.batch_lines, 1);

  struct Slot {
    std::u32string output;
    std::optional<Error> error;
    std::exception_ptr fatal;
  };

  CorpusRunStats stats;
  LineReader reader(in);
  std::vector<std::u32string> batch;
  std::vector<Slot> slots;
  bool more = true;
  while (more) {
    batch.clear();
    std::u32string line;
    while (batch.size() < batch_size && (more = reader.next(line))) batch.push_back(line);
    if (batch.empty()) break;

    slots.assign(batch.size(), Slot{});
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        try {
          slots[i].output = transform(batch[i]);
        } catch (const Error& e) {
          slots[i].error = e;
        } catch (...) {
          slots[i].fatal = std::current_exception();
        }
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads, batch.size());
    if (workers <= 1) {
      work(0, batch.size());
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (batch.size() + workers - 1) / workers;
      for (std::size_t begin = 0; begin < batch.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(begin + chunk, batch.size()));
      }
    }

    const std::size_t first_line = stats.lines + 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const std::size_t line_no = first_line + i;
      if (slots[i].fatal) std::rethrow_exception(slots[i].fatal);
      if (slots[i].error) {
        const Error labelled = slots[i].error->at_line(line_no);
        if (!run.skip_errors) {
          out.flush();
          throw labelled;
        }
        if (diagnostics) *diagnostics << labelled.what() << '\n';
        ++stats.failed_lines;
        out << '\n';
      } else {
        out << encode_utf8(slots[i].output) << '\n';
      }
      ++stats.lines;
    }
  }
  out.flush();
  return stats;
}

CorpusRunStats segment_corpus(std::istream& in, std::ostream& out, const UnitScheme& scheme,
                              const TokenizeOptions& options, const CorpusRunOptions& run,
                              std::ostream* diagnostics) {
  return transform_corpus(
      in, out,
      [&](std::u32string_view line) { return tokenize_sentence(line, scheme, options).joined(); },
      run, diagnostics);
}

CorpusRunStats desegment_corpus(std::istream& in, std::ostream& out, char32_t marker,
                                bool word_scheme, const CorpusRunOptions& run,
                                std::ostream* diagnostics) {
  return transform_corpus(
      in, out,
      [&](std::u32string_view line) { return detokenize_line(line, marker, word_scheme); }, run,
      diagnostics);
}

}  // namespace orthoseg
