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

#ifndef ORTHOSEG_LINE_READER_HPP_
#define ORTHOSEG_LINE_READER_HPP_

#include <cstddef>
#include <istream>
#include <string>

namespace orthoseg {

// Reads UTF-8 lines: strips a leading byte-order mark and the line
// terminator (LF or CRLF), validates, and NFC-normalizes. Decode errors carry
// the absolute byte offset and the line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::u32string& line);
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_number_ = 0;
  std::size_t offset_ = 0;
};

}  // namespace orthoseg

#endif  // ORTHOSEG_LINE_READER_HPP_
