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

#include "orthoseg/nbest.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "orthoseg/error.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

constexpr std::string_view kSeparator = "|||";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

class OrderCheck {
 public:
  void check(const NBestEntry& entry) {
    if (seen_ && entry.sentence_id < last_) {
      throw Error(ErrorCode::kParse, "sentence id " + std::to_string(entry.sentence_id) +
                                         " follows " + std::to_string(last_) +
                                         "; n-best entries must be grouped in nondecreasing order");
    }
    seen_ = true;
    last_ = entry.sentence_id;
  }

 private:
  bool seen_ = false;
  std::size_t last_ = 0;
};

}  // namespace

double NBestEntry::model_score() const {
  const std::string& text = fields[3];
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str()) throw Error(ErrorCode::kParse, "model score \"" + text + "\" is not a number");
  return value;
}

NBestEntry NBestEntry::parse(std::string_view line) {
  NBestEntry entry;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(kSeparator, start);
    entry.fields.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + kSeparator.size();
  }
  if (entry.fields.size() < 4) {
    throw Error(ErrorCode::kParse, "n-best entry needs at least 4 \"|||\"-separated fields, got " +
                                       std::to_string(entry.fields.size()));
  }
  const std::string& id = entry.fields[0];
  const auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), entry.sentence_id);
  if (ec != std::errc() || ptr != id.data() + id.size() || id.empty()) {
    throw Error(ErrorCode::kParse, "bad sentence id \"" + id + "\"");
  }
  entry.model_score();
  return entry;
}

std::string NBestEntry::format() const {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += " ||| ";
    out += fields[i];
  }
  return out;
}

NBestList parse_nbest(std::istream& in) {
  NBestList list;
  OrderCheck order;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      list.push_back(NBestEntry::parse(line));
      order.check(list.back());
    } catch (const Error& e) {
      throw e.at_line(line_no);
    }
  }
  return list;
}

double entry_word_bleu(const NBestEntry& entry, const Sentence& ref, char32_t marker, int max_n) {
  const std::u32string words = detokenize_line(decode_utf8(entry.tokens()), marker);
  return smoothed_sentence_bleu(tokenize_words(words), ref, max_n);
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

namespace {

const Sentence& reference_for(const NBestEntry& entry, std::span<const Sentence> refs) {
  if (entry.sentence_id >= refs.size()) {
    throw Error(ErrorCode::kAlignment, "sentence id " + std::to_string(entry.sentence_id) +
                                           " has no reference (" + std::to_string(refs.size()) +
                                           " references)");
  }
  return refs[entry.sentence_id];
}

}  // namespace

NBestList nbest_word_bleu(const NBestList& nbest, std::span<const Sentence> refs, char32_t marker,
                          int max_n) {
  NBestList out;
  out.reserve(nbest.size());
  for (const NBestEntry& entry : nbest) {
    NBestEntry scored = entry;
    scored.fields.push_back(format_score(entry_word_bleu(entry, reference_for(entry, refs), marker, max_n)));
    out.push_back(std::move(scored));
  }
  return out;
}

std::size_t rescore_nbest(std::istream& nbest, std::span<const Sentence> refs, char32_t marker,
                          std::ostream& out, int max_n) {
  OrderCheck order;
  std::string line;
  std::size_t line_no = 0;
  std::size_t written = 0;
  while (std::getline(nbest, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      NBestEntry entry = NBestEntry::parse(line);
      order.check(entry);
      const double score = entry_word_bleu(entry, reference_for(entry, refs), marker, max_n);
      out << entry.format() << " ||| " << format_score(score) << '\n';
      ++written;
    } catch (const Error& e) {
      throw e.at_line(line_no);
    }
  }
  out.flush();
  return written;
}

}  // namespace orthoseg
