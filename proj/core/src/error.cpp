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

#include "orthoseg/error.hpp"

namespace orthoseg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedScript: return "unsupported script";
    case ErrorCode::kMixedScript: return "mixed script";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kMarkerCollision: return "marker collision";
    case ErrorCode::kMalformedStream: return "malformed stream";
    case ErrorCode::kAlignment: return "alignment";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kUndefinedCorrelation: return "undefined correlation";
    case ErrorCode::kDecode: return "decode";
    case ErrorCode::kSize: return "size";
    case ErrorCode::kDegenerateCorpus: return "degenerate corpus";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + " error: " + message),
      code_(code),
      message_(message) {}

Error Error::at_line(std::size_t line) const {
  Error e(code_, "line " + std::to_string(line) + ": " + message_);
  e.line_ = line;
  e.byte_offset_ = byte_offset_;
  return e;
}

Error Error::decode(std::size_t byte_offset, const std::string& detail) {
  Error e(ErrorCode::kDecode,
          "invalid UTF-8 at byte offset " + std::to_string(byte_offset) +
              (detail.empty() ? "" : " (" + detail + ")"));
  e.byte_offset_ = byte_offset;
  return e;
}

}  // namespace orthoseg
