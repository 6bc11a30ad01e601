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

#ifndef ORTHOSEG_SCRIPT_HPP_
#define ORTHOSEG_SCRIPT_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace orthoseg {

enum class ScriptId : std::uint8_t {
  kDevanagari,
  kBengali,
  kGurmukhi,
  kGujarati,
  kOriya,
  kTamil,
  kTelugu,
  kKannada,
  kMalayalam,
  kLatin,
  kCyrillic,
  kUnsupported,
};

inline constexpr std::array<ScriptId, 11> kSupportedScripts = {
    ScriptId::kDevanagari, ScriptId::kBengali, ScriptId::kGurmukhi, ScriptId::kGujarati,
    ScriptId::kOriya,      ScriptId::kTamil,   ScriptId::kTelugu,   ScriptId::kKannada,
    ScriptId::kMalayalam,  ScriptId::kLatin,   ScriptId::kCyrillic,
};

enum class CharClass : std::uint8_t {
  kIndependentVowel,
  kDependentVowel,
  kConsonant,
  kHalanta,
  kAnusvara,
  kChandrabindu,
  kVisarga,
  kNukta,
  kOtherSign,
  kNonScript,
};

std::string_view to_string(ScriptId script);
std::string_view to_string(CharClass cls);

// Case-insensitive; accepts the names printed by to_string plus "odia".
std::optional<ScriptId> parse_script(std::string_view name);

constexpr bool is_abugida(ScriptId s) {
  return s <= ScriptId::kMalayalam;
}
constexpr bool is_alphabetic(ScriptId s) {
  return s == ScriptId::kLatin || s == ScriptId::kCyrillic;
}
constexpr bool is_supported(ScriptId s) { return s != ScriptId::kUnsupported; }

// Letters decide script detection; marks and signs never do.
constexpr bool is_letter(CharClass c) {
  return c == CharClass::kIndependentVowel || c == CharClass::kConsonant;
}

// Immutable per-script classification table. Indic tables are one shared
// 128-entry layout instantiated at each block with per-script exceptions;
// alphabetic tables carry a case-folded vowel set instead.
class ScriptTable {
 public:
  static const ScriptTable& get(ScriptId script);

  ScriptId script() const noexcept { return script_; }
  char32_t block_start() const noexcept { return block_start_; }
  char32_t block_end() const noexcept { return block_end_; }
  bool contains(char32_t cp) const noexcept { return cp >= block_start_ && cp <= block_end_; }

  CharClass classify(char32_t cp) const;
  bool is_plosive(char32_t cp) const;

  // Alphabetic scripts only; case-insensitive.
  bool is_vowel(char32_t cp) const;
  std::span<const char32_t> vowel_set() const noexcept { return vowels_; }

  // Empty for alphabetic scripts.
  std::span<const CharClass> class_by_offset() const noexcept {
    return is_abugida(script_) ? std::span<const CharClass>(class_by_offset_)
                               : std::span<const CharClass>();
  }
  const std::bitset<128>& plosive_offsets() const noexcept { return plosive_offsets_; }

  ScriptTable(const ScriptTable&) = delete;
  ScriptTable& operator=(const ScriptTable&) = delete;

 private:
  explicit ScriptTable(ScriptId script);
  CharClass classify_alphabetic(char32_t cp) const;

  ScriptId script_;
  char32_t block_start_ = 0;
  char32_t block_end_ = 0;
  std::array<CharClass, 128> class_by_offset_{};
  std::bitset<128> plosive_offsets_;
  std::vector<char32_t> vowels_;  // sorted, case-folded
};

// Offset -> class for the layout the nine Indic blocks share.
CharClass shared_indic_class(unsigned offset);

struct ClassException {
  std::uint8_t offset;
  CharClass cls;
};
// Offsets where `script` departs from the shared layout (assigned characters
// only; unassigned offsets are listed separately).
std::span<const ClassException> indic_exceptions(ScriptId script);
std::span<const std::uint8_t> indic_unassigned(ScriptId script);

// ZWJ/ZWNJ classify as OtherSign under every script.
CharClass classify(char32_t cp, ScriptId script);

// The supported script whose block holds `cp`, if any.
std::optional<ScriptId> block_script(char32_t cp);

// Script of the first letter; mixed-script words throw, letterless words
// return kUnsupported.
ScriptId detect_script(std::u32string_view word);

bool is_nasalizer(char32_t c1, std::optional<char32_t> c2, ScriptId script);

}  // namespace orthoseg

#endif  // ORTHOSEG_SCRIPT_HPP_
