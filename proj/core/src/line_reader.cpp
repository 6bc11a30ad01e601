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

#include "orthoseg/line_reader.hpp"

#include "orthoseg/error.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {

bool LineReader::next(std::u32string& line) {
  if (!std::getline(in_, buffer_)) return false;
  const std::size_t raw_size = buffer_.size() + (in_.eof() ? 0 : 1);
  ++line_number_;
  std::string_view bytes = buffer_;
  std::size_t base = offset_;
  if (line_number_ == 1 && bytes.starts_with("\xEF\xBB\xBF")) {
    bytes.remove_prefix(3);
    base += 3;
  }
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
  try {
    line = to_nfc(decode_utf8(bytes, base));
  } catch (const Error& e) {
    throw e.at_line(line_number_);
  }
  offset_ += raw_size;
  return true;
}

}  // namespace orthoseg
