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

#ifndef ORTHOSEG_ERROR_HPP_
#define ORTHOSEG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthoseg {

enum class ErrorCode {
  kUnsupportedScript,
  kMixedScript,
  kEmptyInput,
  kMarkerCollision,
  kMalformedStream,
  kAlignment,
  kParameter,
  kUndefinedCorrelation,
  kDecode,
  kSize,
  kDegenerateCorpus,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All data errors raised by the library. `line()` is 1-based and 0 when the
// error is not tied to an input line; `byte_offset()` is set for decode errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

  // Same error, re-labelled with the input line it came from.
  Error at_line(std::size_t line) const;

  static Error decode(std::size_t byte_offset, const std::string& detail);

 private:
  ErrorCode code_;
  std::size_t line_ = 0;
  std::size_t byte_offset_ = 0;
  std::string message_;
};

}  // namespace orthoseg

#endif  // ORTHOSEG_ERROR_HPP_
