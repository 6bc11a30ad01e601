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

#ifndef ORTHOSEG_SIMILARITY_HPP_
#define ORTHOSEG_SIMILARITY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthoseg {

std::size_t lcs_length(std::u32string_view a, std::u32string_view b);

// Longest common subsequence ratio: lcs / max(|a|, |b|); 1 for two empty
// strings.
double lcsr(std::u32string_view a, std::u32string_view b);

// Per-pair character-level LCSR (spaces count as characters).
std::vector<double> pairwise_lcsr(std::span<const std::u32string> a,
                                  std::span<const std::u32string> b);

// Macro-average of pairwise_lcsr over aligned sentence lists.
double corpus_lcsr(std::span<const std::u32string> a, std::span<const std::u32string> b);

// Streaming product-moment correlation (Welford co-moments).
class CorrelationAccumulator {
 public:
  void add(double x, double y);
  std::size_t count() const noexcept { return n_; }
  // Throws kUndefinedCorrelation for fewer than two points or zero variance.
  double correlation() const;

 private:
  std::size_t n_ = 0;
  double mean_x_ = 0.0;
  double mean_y_ = 0.0;
  double m2_x_ = 0.0;
  double m2_y_ = 0.0;
  double co_moment_ = 0.0;
};

double pearson(std::span<const double> xs, std::span<const double> ys);

// Correlation, over sentence indices, between source/target similarity and
// hypothesis/reference similarity.
double similarity_correlation(std::span<const std::u32string> src,
                              std::span<const std::u32string> tgt,
                              std::span<const std::u32string> hyp,
                              std::span<const std::u32string> ref);

}  // namespace orthoseg

#endif  // ORTHOSEG_SIMILARITY_HPP_
