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

#include "orthoseg/corpus.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "orthoseg/error.hpp"
#include "orthoseg/line_reader.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

Corpus gather(std::span<const std::u32string> lines, std::span<const std::size_t> order) {
  Corpus out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(lines[i]);
  return out;
}

void check_split(std::size_t lines, const SplitSizes& sizes) {
  if (sizes.total() > lines) {
    throw Error(ErrorCode::kSize, "requested " + std::to_string(sizes.total()) +
                                      " lines but the corpus has " + std::to_string(lines));
  }
}

}  // namespace

Corpus load_corpus(std::istream& in) {
  Corpus lines;
  LineReader reader(in);
  std::u32string line;
  while (reader.next(line)) lines.push_back(std::move(line));
  return lines;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return load_corpus(in);
}

void write_corpus(std::ostream& out, std::span<const std::u32string> lines) {
  for (const auto& line : lines) out << encode_utf8(line) << '\n';
  out.flush();
}

void write_corpus_file(const std::string& path, std::span<const std::u32string> lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  write_corpus(out, lines);
  if (!out) throw Error(ErrorCode::kIo, "write to " + path + " failed");
}

ScriptId dominant_script(std::span<const std::u32string> lines) {
  std::map<ScriptId, std::size_t> votes;
  for (const auto& line : lines) {
    for (std::u32string_view word : split_words(line)) {
      try {
        const ScriptId s = detect_script(word);
        if (is_supported(s)) ++votes[s];
      } catch (const Error&) {
      }
    }
  }
  ScriptId best = ScriptId::kUnsupported;
  std::size_t best_votes = 0;
  for (const auto& [script, count] : votes) {
    if (count > best_votes) {
      best = script;
      best_votes = count;
    }
  }
  return best;
}

ParallelCorpus ParallelCorpus::make(Corpus source, Corpus target) {
  if (source.size() != target.size()) {
    throw Error(ErrorCode::kAlignment, "source and target are misaligned: " +
                                           std::to_string(source.size()) + " vs " +
                                           std::to_string(target.size()) + " lines");
  }
  ParallelCorpus corpus;
  corpus.source_script = dominant_script(source);
  corpus.target_script = dominant_script(target);
  corpus.source_lines = std::move(source);
  corpus.target_lines = std::move(target);
  return corpus;
}

SplitSizes SplitSizes::parse(std::string_view text) {
  SplitSizes sizes;
  std::size_t* slots[] = {&sizes.train, &sizes.tune, &sizes.test};
  std::size_t field = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), *slots[field]);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) break;
    ++field;
    if (comma == std::string_view::npos) {
      if (field == 3) return sizes;
      break;
    }
    if (field == 3) break;
    start = comma + 1;
  }
  throw Error(ErrorCode::kParameter,
              "split sizes must be TRAIN,TUNE,TEST non-negative integers, got \"" +
                  std::string(text) + "\"");
}

std::vector<std::size_t> split_order(std::size_t lines, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(lines);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed && lines > 1) {
    std::mt19937_64 rng(*seed);
    for (std::size_t i = lines - 1; i > 0; --i) {
      std::swap(order[i], order[bounded(rng, i + 1)]);
    }
  }
  return order;
}

CorpusSplit split_corpus(std::span<const std::u32string> corpus, const SplitSizes& sizes,
                         std::optional<std::uint64_t> seed) {
  check_split(corpus.size(), sizes);
  const std::vector<std::size_t> order = split_order(corpus.size(), seed);
  const std::span<const std::size_t> all(order);
  CorpusSplit split;
  split.train = gather(corpus, all.subspan(0, sizes.train));
  split.tune = gather(corpus, all.subspan(sizes.train, sizes.tune));
  split.test = gather(corpus, all.subspan(sizes.train + sizes.tune, sizes.test));
  return split;
}

std::array<ParallelCorpus, 3> split_parallel(const ParallelCorpus& corpus, const SplitSizes& sizes,
                                             std::optional<std::uint64_t> seed) {
  const CorpusSplit src = split_corpus(corpus.source_lines, sizes, seed);
  const CorpusSplit tgt = split_corpus(corpus.target_lines, sizes, seed);
  auto piece = [&](const Corpus& s, const Corpus& t) {
    ParallelCorpus p;
    p.source_lines = s;
    p.target_lines = t;
    p.source_script = corpus.source_script;
    p.target_script = corpus.target_script;
    return p;
  };
  return {piece(src.train, tgt.train), piece(src.tune, tgt.tune), piece(src.test, tgt.test)};
}

VocabStats vocab_stats(std::span<const std::u32string> corpus, const UnitScheme& scheme,
                       const MorphLexicon* morphs, const SyllabifyOptions& syllabify_options) {
  VocabStats stats;
  stats.scheme = scheme;
  std::unordered_set<std::u32string> types;
  std::size_t code_points = 0;
  for (const auto& line : corpus) {
    const std::u32string normalized = to_nfc(line);
    for (std::u32string_view word : split_words(normalized)) {
      for (auto& unit : segment_word(word, scheme, morphs, syllabify_options)) {
        ++stats.token_count;
        code_points += unit.size();
        types.insert(std::move(unit));
      }
    }
  }
  stats.type_count = types.size();
  stats.mean_unit_length =
      stats.token_count == 0 ? 0.0
                             : static_cast<double>(code_points) / static_cast<double>(stats.token_count);
  return stats;
}

std::string format_vocab_stats(const VocabStats& stats) {
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.6f", stats.mean_unit_length);
  return stats.scheme.name() + "\t" + std::to_string(stats.type_count) + "\t" +
         std::to_string(stats.token_count) + "\t" + mean;
}

double unit_ratio(std::span<const std::u32string> corpus, const UnitScheme& a, const UnitScheme& b,
                  const MorphLexicon* morphs, const SyllabifyOptions& syllabify_options) {
  const VocabStats denominator = vocab_stats(corpus, b, morphs, syllabify_options);
  if (denominator.type_count == 0) {
    throw Error(ErrorCode::kDegenerateCorpus,
                "no " + b.name() + " units in the corpus; ratio is undefined");
  }
  const VocabStats numerator = a == b ? denominator : vocab_stats(corpus, a, morphs, syllabify_options);
  return static_cast<double>(numerator.type_count) / static_cast<double>(denominator.type_count);
}

}  // namespace orthoseg
