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

#include "orthoseg/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "orthoseg/error.hpp"

namespace orthoseg {
namespace {

void require_aligned(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kAlignment, std::string(what) + " are misaligned: " +
                                           std::to_string(a) + " vs " + std::to_string(b) +
                                           " lines");
  }
}

}  // namespace

std::size_t lcs_length(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (char32_t ca : a) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = ca == b[j - 1] ? diagonal + 1 : std::max(up, row[j - 1]);
      diagonal = up;
    }
  }
  return row[b.size()];
}

double lcsr(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return static_cast<double>(lcs_length(a, b)) / static_cast<double>(longest);
}

std::vector<double> pairwise_lcsr(std::span<const std::u32string> a,
                                  std::span<const std::u32string> b) {
  require_aligned(a.size(), b.size(), "sentence lists");
  std::vector<double> scores(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) scores[i] = lcsr(a[i], b[i]);
  return scores;
}

double corpus_lcsr(std::span<const std::u32string> a, std::span<const std::u32string> b) {
  require_aligned(a.size(), b.size(), "sentence lists");
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "corpus LCSR needs at least one sentence pair");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += lcsr(a[i], b[i]);
  return sum / static_cast<double>(a.size());
}

void CorrelationAccumulator::add(double x, double y) {
  ++n_;
  const double n = static_cast<double>(n_);
  const double dx = x - mean_x_;
  mean_x_ += dx / n;
  const double dy = y - mean_y_;
  mean_y_ += dy / n;
  m2_x_ += dx * (x - mean_x_);
  m2_y_ += dy * (y - mean_y_);
  co_moment_ += dx * (y - mean_y_);
}

double CorrelationAccumulator::correlation() const {
  if (n_ < 2) {
    throw Error(ErrorCode::kUndefinedCorrelation, "correlation needs at least two points");
  }
  if (m2_x_ <= 0.0 || m2_y_ <= 0.0) {
    throw Error(ErrorCode::kUndefinedCorrelation, "a sequence has zero variance");
  }
  const double r = co_moment_ / std::sqrt(m2_x_ * m2_y_);
  return std::clamp(r, -1.0, 1.0);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  require_aligned(xs.size(), ys.size(), "value sequences");
  CorrelationAccumulator acc;
  for (std::size_t i = 0; i < xs.size(); ++i) acc.add(xs[i], ys[i]);
  return acc.correlation();
}

double similarity_correlation(std::span<const std::u32string> src,
                              std::span<const std::u32string> tgt,
                              std::span<const std::u32string> hyp,
                              std::span<const std::u32string> ref) {
  require_aligned(src.size(), tgt.size(), "source and target");
  require_aligned(hyp.size(), ref.size(), "hypothesis and reference");
  require_aligned(src.size(), hyp.size(), "source and hypothesis");
  CorrelationAccumulator acc;
  for (std::size_t i = 0; i < src.size(); ++i) acc.add(lcsr(src[i], tgt[i]), lcsr(hyp[i], ref[i]));
  return acc.correlation();
}

}  // namespace orthoseg
