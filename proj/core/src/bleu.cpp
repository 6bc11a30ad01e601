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

#include "orthoseg/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "orthoseg/error.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

using Ids = std::vector<int>;

void check_inputs(std::size_t hyps, std::size_t refs, int max_n) {
  if (max_n < 1) {
    throw Error(ErrorCode::kParameter, "max n-gram order must be >= 1 (got " +
                                           std::to_string(max_n) + ")");
  }
  if (hyps != refs) {
    throw Error(ErrorCode::kAlignment, "hypotheses and references are misaligned: " +
                                           std::to_string(hyps) + " vs " + std::to_string(refs) +
                                           " lines");
  }
  if (hyps == 0) throw Error(ErrorCode::kEmptyInput, "no sentences to score");
}

class Vocabulary {
 public:
  Ids intern(const Sentence& sentence) {
    Ids ids;
    ids.reserve(sentence.size());
    for (const auto& token : sentence) {
      auto [it, inserted] = index_.try_emplace(token, static_cast<int>(index_.size()));
      ids.push_back(it->second);
    }
    return ids;
  }

 private:
  std::unordered_map<std::u32string, int> index_;
};

// Start offsets of the order-n n-grams of `ids`, sorted so equal n-grams are
// adjacent.
std::vector<std::size_t> sorted_ngrams(const Ids& ids, std::size_t order) {
  std::vector<std::size_t> starts;
  if (ids.size() < order) return starts;
  starts.resize(ids.size() - order + 1);
  for (std::size_t i = 0; i < starts.size(); ++i) starts[i] = i;
  std::sort(starts.begin(), starts.end(), [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(ids.begin() + x, ids.begin() + x + order, ids.begin() + y,
                                        ids.begin() + y + order);
  });
  return starts;
}

// Sum over distinct n-grams of min(count in hyp, count in ref).
std::size_t clipped_matches(const Ids& hyp, const Ids& ref, std::size_t order) {
  const auto h = sorted_ngrams(hyp, order);
  const auto r = sorted_ngrams(ref, order);
  auto compare = [&](std::size_t x, std::size_t y) {
    for (std::size_t k = 0; k < order; ++k) {
      if (hyp[x + k] != ref[y + k]) return hyp[x + k] < ref[y + k] ? -1 : 1;
    }
    return 0;
  };
  std::size_t matched = 0, i = 0, j = 0;
  while (i < h.size() && j < r.size()) {
    const int c = compare(h[i], r[j]);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      ++matched;
      ++i;
      ++j;
    }
  }
  return matched;
}

std::size_t ngram_total(std::size_t length, int n) {
  const std::size_t order = static_cast<std::size_t>(n);
  return length >= order ? length - order + 1 : 0;
}

double brevity_penalty(std::size_t hyp_length, std::size_t ref_length) {
  if (hyp_length >= ref_length) return 1.0;
  if (hyp_length == 0) return 0.0;
  return std::exp(1.0 - static_cast<double>(ref_length) / static_cast<double>(hyp_length));
}

void finish(BleuReport& report) {
  report.precisions.assign(static_cast<std::size_t>(report.max_n), 0.0);
  double log_sum = 0.0;
  bool any_zero = false;
  for (std::size_t k = 0; k < report.precisions.size(); ++k) {
    const double p = report.totals[k] == 0
                         ? 0.0
                         : report.matches[k] / static_cast<double>(report.totals[k]);
    report.precisions[k] = p;
    if (p <= 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(p);
    }
  }
  report.brevity_penalty = brevity_penalty(report.hyp_length, report.ref_length);
  report.score = any_zero ? 0.0
                          : 100.0 * report.brevity_penalty *
                                std::exp(log_sum / static_cast<double>(report.max_n));
}

BleuReport empty_report(int max_n) {
  BleuReport report;
  report.max_n = max_n;
  report.matches.assign(static_cast<std::size_t>(max_n), 0.0);
  report.totals.assign(static_cast<std::size_t>(max_n), 0);
  return report;
}

// Clipped exact matches and hypothesis n-gram totals of one sentence pair.
void accumulate_exact(const Ids& hyp, const Ids& ref, BleuReport& report) {
  for (int n = 1; n <= report.max_n; ++n) {
    const std::size_t matched = clipped_matches(hyp, ref, static_cast<std::size_t>(n));
    const auto k = static_cast<std::size_t>(n - 1);
    report.matches[k] += static_cast<double>(matched);
    report.totals[k] += ngram_total(hyp.size(), n);
  }
  report.hyp_length += hyp.size();
  report.ref_length += ref.size();
}

// Greedy one-to-one fuzzy n-gram credit for one sentence pair and order.
double fuzzy_credit(const std::vector<std::vector<double>>& similarity, std::size_t hyp_len,
                    std::size_t ref_len, std::size_t order, double delta) {
  if (hyp_len < order || ref_len < order) return 0.0;
  struct Candidate {
    double credit;
    std::size_t hyp;
    std::size_t ref;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i + order <= hyp_len; ++i) {
    for (std::size_t j = 0; j + order <= ref_len; ++j) {
      double credit = 1.0;
      for (std::size_t k = 0; k < order && credit > 0.0; ++k) {
        const double s = similarity[i + k][j + k];
        credit = s >= delta ? credit * s : 0.0;
      }
      if (credit > 0.0) candidates.push_back({credit, i, j});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.credit > b.credit; });
  std::vector<bool> hyp_used(hyp_len - order + 1, false);
  std::vector<bool> ref_used(ref_len - order + 1, false);
  double total = 0.0;
  for (const Candidate& c : candidates) {
    if (hyp_used[c.hyp] || ref_used[c.ref]) continue;
    hyp_used[c.hyp] = true;
    ref_used[c.ref] = true;
    total += c.credit;
  }
  return total;
}

}  // namespace

Sentence tokenize_words(std::u32string_view line) {
  Sentence words;
  for (std::u32string_view w : split_words(line)) words.emplace_back(w);
  return words;
}

std::vector<Sentence> tokenize_lines(std::span<const std::u32string> lines) {
  std::vector<Sentence> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(tokenize_words(line));
  return out;
}

BleuReport bleu(std::span<const Sentence> hyps, std::span<const Sentence> refs, int max_n) {
  check_inputs(hyps.size(), refs.size(), max_n);
  BleuReport report = empty_report(max_n);
  Vocabulary vocab;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    accumulate_exact(vocab.intern(hyps[s]), vocab.intern(refs[s]), report);
  }
  finish(report);
  return report;
}

double smoothed_sentence_bleu(const Sentence& hyp, const Sentence& ref, int max_n) {
  check_inputs(1, 1, max_n);
  BleuReport report = empty_report(max_n);
  Vocabulary vocab;
  accumulate_exact(vocab.intern(hyp), vocab.intern(ref), report);
  for (std::size_t k = 1; k < report.matches.size(); ++k) {
    report.matches[k] += 1.0;
    report.totals[k] += 1;
  }
  finish(report);
  return report.score;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({up + 1, row[j - 1] + 1, substitute});
      diagonal = up;
    }
  }
  return row[b.size()];
}

double word_similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

BleuReport lebleu(std::span<const Sentence> hyps, std::span<const Sentence> refs, double delta,
                  int max_n) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kParameter, "Le-BLEU threshold must lie in (0, 1]");
  }
  check_inputs(hyps.size(), refs.size(), max_n);
  BleuReport report = empty_report(max_n);
  std::vector<std::vector<double>> similarity;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    const Sentence& hyp = hyps[s];
    const Sentence& ref = refs[s];
    similarity.assign(hyp.size(), std::vector<double>(ref.size()));
    for (std::size_t i = 0; i < hyp.size(); ++i) {
      for (std::size_t j = 0; j < ref.size(); ++j) {
        similarity[i][j] = hyp[i] == ref[j] ? 1.0 : word_similarity(hyp[i], ref[j]);
      }
    }
    for (int n = 1; n <= max_n; ++n) {
      const auto k = static_cast<std::size_t>(n - 1);
      const auto order = static_cast<std::size_t>(n);
      report.matches[k] += fuzzy_credit(similarity, hyp.size(), ref.size(), order, delta);
      report.totals[k] += ngram_total(hyp.size(), n);
    }
    report.hyp_length += hyp.size();
    report.ref_length += ref.size();
  }
  finish(report);
  return report;
}

std::string format_report(std::string_view metric, const BleuReport& report) {
  std::string out;
  char buf[64];
  auto line = [&](const std::string& key, double value) {
    std::snprintf(buf, sizeof buf, "%.6f", value);
    out += key + "=" + buf + "\n";
  };
  out += "metric=" + std::string(metric) + "\n";
  line("score", report.score);
  line("brevity_penalty", report.brevity_penalty);
  out += "hyp_length=" + std::to_string(report.hyp_length) + "\n";
  out += "ref_length=" + std::to_string(report.ref_length) + "\n";
  out += "max_n=" + std::to_string(report.max_n) + "\n";
  for (std::size_t k = 0; k < report.precisions.size(); ++k) {
    line("precision_" + std::to_string(k + 1), report.precisions[k]);
  }
  return out;
}

}  // namespace orthoseg
