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

#ifndef ORTHOSEG_UNICODE_HPP_
#define ORTHOSEG_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orthoseg {

// Strict UTF-8 decoding: overlong forms, surrogates and values above U+10FFFF
// are rejected. Offsets in errors are relative to `base_offset`.
std::u32string decode_utf8(std::string_view bytes, std::size_t base_offset = 0);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

// Canonical composition (NFC). Text below U+0300 is returned untouched.
std::u32string to_nfc(std::u32string_view text);
bool is_nfc(std::u32string_view text);

char32_t fold_case(char32_t cp);

// First code point of the canonical decomposition, or `cp` itself.
char32_t canonical_base(char32_t cp);

bool is_punctuation(char32_t cp);

// "U+0915" style rendering.
std::string format_codepoint(char32_t cp);

inline bool is_separator_space(char32_t cp) { return cp == U' ' || cp == U'\t'; }

// Splits on runs of ASCII space and tab; no empty pieces.
std::vector<std::u32string_view> split_words(std::u32string_view text);

}  // namespace orthoseg

#endif  // ORTHOSEG_UNICODE_HPP_
