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

#include "orthoseg/script.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "orthoseg/error.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

using C = CharClass;

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

struct Block {
  ScriptId script;
  char32_t start;
  char32_t end;
};

constexpr std::array<Block, 11> kBlocks = {{
    {ScriptId::kDevanagari, 0x0900, 0x097F},
    {ScriptId::kBengali, 0x0980, 0x09FF},
    {ScriptId::kGurmukhi, 0x0A00, 0x0A7F},
    {ScriptId::kGujarati, 0x0A80, 0x0AFF},
    {ScriptId::kOriya, 0x0B00, 0x0B7F},
    {ScriptId::kTamil, 0x0B80, 0x0BFF},
    {ScriptId::kTelugu, 0x0C00, 0x0C7F},
    {ScriptId::kKannada, 0x0C80, 0x0CFF},
    {ScriptId::kMalayalam, 0x0D00, 0x0D7F},
    {ScriptId::kLatin, 0x0000, 0x024F},
    {ScriptId::kCyrillic, 0x0400, 0x04FF},
}};

const Block& block_of(ScriptId script) {
  return kBlocks[static_cast<std::size_t>(script)];
}

// Stops of the velar, palatal, retroflex, dental and labial rows; each row's
// nasal (offsets 0x19, 0x1E, 0x23, 0x28, 0x2E) is excluded.
constexpr bool is_plosive_offset(unsigned o) {
  return (o >= 0x15 && o <= 0x18) || (o >= 0x1A && o <= 0x1D) || (o >= 0x1F && o <= 0x22) ||
         (o >= 0x24 && o <= 0x27) || (o >= 0x2A && o <= 0x2D);
}

constexpr ClassException kBengaliExceptions[] = {
    {0x00, C::kOtherSign},  // anji
    {0x4E, C::kConsonant},  // khanda ta
    {0x70, C::kConsonant}, {0x71, C::kConsonant},
    {0x72, C::kNonScript}, {0x73, C::kNonScript}, {0x74, C::kNonScript}, {0x75, C::kNonScript},
    {0x76, C::kNonScript}, {0x77, C::kNonScript}, {0x78, C::kNonScript}, {0x79, C::kNonScript},
    {0x7A, C::kNonScript}, {0x7B, C::kNonScript},
    {0x7C, C::kAnusvara},   // vedic anusvara
    {0x7D, C::kNonScript},
    {0x7E, C::kOtherSign},  // sandhi mark
};

constexpr ClassException kGurmukhiExceptions[] = {
    {0x70, C::kAnusvara},  // tippi
    {0x74, C::kOtherSign},
    {0x75, C::kOtherSign},
    {0x76, C::kNonScript},
};

constexpr ClassException kGujaratiExceptions[] = {
    {0x71, C::kNonScript},
    {0x7A, C::kOtherSign}, {0x7B, C::kOtherSign}, {0x7C, C::kOtherSign},
    {0x7D, C::kNukta}, {0x7E, C::kNukta}, {0x7F, C::kNukta},  // nuktas above
};

constexpr ClassException kOriyaExceptions[] = {
    {0x71, C::kConsonant},  // wa
    {0x72, C::kNonScript}, {0x73, C::kNonScript}, {0x74, C::kNonScript},
    {0x75, C::kNonScript}, {0x76, C::kNonScript}, {0x77, C::kNonScript},
};

constexpr ClassException kTamilExceptions[] = {
    {0x71, C::kNonScript}, {0x72, C::kNonScript}, {0x73, C::kNonScript}, {0x74, C::kNonScript},
    {0x75, C::kNonScript}, {0x76, C::kNonScript}, {0x77, C::kNonScript}, {0x78, C::kNonScript},
    {0x79, C::kNonScript}, {0x7A, C::kNonScript},
};

constexpr ClassException kTeluguExceptions[] = {
    {0x04, C::kAnusvara},  // combining anusvara above
    {0x77, C::kNonScript}, {0x78, C::kNonScript}, {0x79, C::kNonScript}, {0x7A, C::kNonScript},
    {0x7B, C::kNonScript}, {0x7C, C::kNonScript}, {0x7D, C::kNonScript}, {0x7E, C::kNonScript},
    {0x7F, C::kNonScript},
};

constexpr ClassException kKannadaExceptions[] = {
    {0x04, C::kNonScript},  // siddham
    {0x72, C::kOtherSign},  // upadhmaniya
    {0x73, C::kAnusvara},   // combining anusvara above right
};

constexpr ClassException kMalayalamExceptions[] = {
    {0x00, C::kAnusvara}, {0x04, C::kAnusvara},
    {0x3A, C::kConsonant},  // ttta
    {0x3B, C::kHalanta}, {0x3C, C::kHalanta},
    {0x4E, C::kOtherSign},  // dot reph
    {0x4F, C::kNonScript},
    {0x54, C::kConsonant}, {0x55, C::kConsonant}, {0x56, C::kConsonant},  // chillus
    {0x58, C::kNonScript}, {0x59, C::kNonScript}, {0x5A, C::kNonScript}, {0x5B, C::kNonScript},
    {0x5C, C::kNonScript}, {0x5D, C::kNonScript}, {0x5E, C::kNonScript},
    {0x5F, C::kIndependentVowel},  // archaic ii
    {0x71, C::kNonScript}, {0x72, C::kNonScript}, {0x73, C::kNonScript}, {0x74, C::kNonScript},
    {0x75, C::kNonScript}, {0x76, C::kNonScript}, {0x77, C::kNonScript}, {0x78, C::kNonScript},
    {0x79, C::kNonScript},
};

constexpr std::uint8_t kBengaliUnassigned[] = {
    0x04, 0x0D, 0x0E, 0x11, 0x12, 0x29, 0x31, 0x33, 0x34, 0x35, 0x3A, 0x3B, 0x45, 0x46, 0x49, 0x4A,
    0x4F, 0x50, 0x51, 0x52, 0x53, 0x54, 0x55, 0x56, 0x58, 0x59, 0x5A, 0x5B, 0x5E, 0x64, 0x65, 0x7F};
constexpr std::uint8_t kGurmukhiUnassigned[] = {
    0x00, 0x04, 0x0B, 0x0C, 0x0D, 0x0E, 0x11, 0x12, 0x29, 0x31, 0x34, 0x37, 0x3A, 0x3B, 0x3D, 0x43,
    0x44, 0x45, 0x46, 0x49, 0x4A, 0x4E, 0x4F, 0x50, 0x52, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x5D,
    0x5F, 0x60, 0x61, 0x62, 0x63, 0x64, 0x65, 0x77, 0x78, 0x79, 0x7A, 0x7B, 0x7C, 0x7D, 0x7E, 0x7F};
constexpr std::uint8_t kGujaratiUnassigned[] = {
    0x00, 0x04, 0x0E, 0x12, 0x29, 0x31, 0x34, 0x3A, 0x3B, 0x46, 0x4A, 0x4E, 0x4F, 0x51, 0x52, 0x53,
    0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A, 0x5B, 0x5C, 0x5D, 0x5E, 0x5F, 0x64, 0x65, 0x72, 0x73,
    0x74, 0x75, 0x76, 0x77, 0x78};
constexpr std::uint8_t kOriyaUnassigned[] = {
    0x00, 0x04, 0x0D, 0x0E, 0x11, 0x12, 0x29, 0x31, 0x34, 0x3A, 0x3B, 0x45, 0x46, 0x49, 0x4A, 0x4E,
    0x4F, 0x50, 0x51, 0x52, 0x53, 0x54, 0x58, 0x59, 0x5A, 0x5B, 0x5E, 0x64, 0x65, 0x78, 0x79, 0x7A,
    0x7B, 0x7C, 0x7D, 0x7E, 0x7F};
constexpr std::uint8_t kTamilUnassigned[] = {
    0x00, 0x01, 0x04, 0x0B, 0x0C, 0x0D, 0x11, 0x16, 0x17, 0x18, 0x1B, 0x1D, 0x20, 0x21, 0x22, 0x25,
    0x26, 0x27, 0x2B, 0x2C, 0x2D, 0x3A, 0x3B, 0x3C, 0x3D, 0x43, 0x44, 0x45, 0x49, 0x4E, 0x4F, 0x51,
    0x52, 0x53, 0x54, 0x55, 0x56, 0x58, 0x59, 0x5A, 0x5B, 0x5C, 0x5D, 0x5E, 0x5F, 0x60, 0x61, 0x62,
    0x63, 0x64, 0x65, 0x7B, 0x7C, 0x7D, 0x7E, 0x7F};
constexpr std::uint8_t kTeluguUnassigned[] = {
    0x0D, 0x11, 0x29, 0x3A, 0x3B, 0x45, 0x49, 0x4E, 0x4F, 0x50, 0x51, 0x52, 0x53, 0x54,
    0x57, 0x5B, 0x5C, 0x5E, 0x5F, 0x64, 0x65, 0x70, 0x71, 0x72, 0x73, 0x74, 0x75, 0x76};
constexpr std::uint8_t kKannadaUnassigned[] = {
    0x0D, 0x11, 0x29, 0x34, 0x3A, 0x3B, 0x45, 0x49, 0x4E, 0x4F, 0x50, 0x51, 0x52, 0x53,
    0x54, 0x57, 0x58, 0x59, 0x5A, 0x5B, 0x5C, 0x5F, 0x64, 0x65, 0x70, 0x74, 0x75, 0x76,
    0x77, 0x78, 0x79, 0x7A, 0x7B, 0x7C, 0x7D, 0x7E, 0x7F};
constexpr std::uint8_t kMalayalamUnassigned[] = {0x0D, 0x11, 0x45, 0x49, 0x50,
                                                 0x51, 0x52, 0x53, 0x64, 0x65};

bool is_latin_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
         (cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xF6) ||
         (cp >= 0xF8 && cp <= 0x24F);
}

bool is_cyrillic_letter(char32_t cp) {
  return (cp >= 0x400 && cp <= 0x481) || (cp >= 0x48A && cp <= 0x4FF);
}

bool is_alphabetic_letter(ScriptId script, char32_t cp) {
  return script == ScriptId::kLatin ? is_latin_letter(cp) : is_cyrillic_letter(cp);
}

bool is_combining_diacritic(char32_t cp) {
  return (cp >= 0x300 && cp <= 0x36F) || (cp >= 0x483 && cp <= 0x489);
}

// Case-folded base letters counted as vowels. Precomposed letters are
// reduced to their canonical base before lookup.
constexpr char32_t kLatinBaseVowels[] = {U'a', U'e', U'i', U'o', U'u', 0xE6 /* æ */,
                                         0xF8 /* ø */, 0x131 /* ı */, 0x153 /* œ */,
                                         0x259 /* ə */};
constexpr char32_t kCyrillicBaseVowels[] = {
    0x430 /* а */, 0x435 /* е */, 0x438 /* и */, 0x43E /* о */, 0x443 /* у */,
    0x44B /* ы */, 0x44D /* э */, 0x44E /* ю */, 0x44F /* я */, 0x454 /* є */,
    0x456 /* і */, 0x461 /* ѡ */, 0x463 /* ѣ */, 0x465 /* ѥ */, 0x467 /* ѧ */,
    0x469 /* ѩ */, 0x46B /* ѫ */, 0x46D /* ѭ */, 0x475 /* ѵ */, 0x479 /* ѹ */,
    0x47B /* ѻ */, 0x47D /* ѽ */, 0x47F /* ѿ */, 0x4AF /* ү */, 0x4B1 /* ұ */,
    0x4D5 /* ӕ */, 0x4D9 /* ә */, 0x4E9 /* ө */};
// Semivowels whose canonical base is a vowel.
constexpr char32_t kCyrillicSemivowels[] = {0x439 /* й */, 0x45E /* ў */};

bool contains(std::span<const char32_t> set, char32_t cp) {
  return std::find(set.begin(), set.end(), cp) != set.end();
}

bool default_alphabetic_vowel(ScriptId script, char32_t cp) {
  const char32_t folded = fold_case(cp);
  if (script == ScriptId::kCyrillic && contains(kCyrillicSemivowels, folded)) return false;
  const char32_t base = fold_case(canonical_base(folded));
  if (script == ScriptId::kLatin) return contains(kLatinBaseVowels, base);
  return contains(kCyrillicBaseVowels, base);
}

}  // namespace

std::string_view to_string(ScriptId script) {
  switch (script) {
    case ScriptId::kDevanagari: return "Devanagari";
    case ScriptId::kBengali: return "Bengali";
    case ScriptId::kGurmukhi: return "Gurmukhi";
    case ScriptId::kGujarati: return "Gujarati";
    case ScriptId::kOriya: return "Oriya";
    case ScriptId::kTamil: return "Tamil";
    case ScriptId::kTelugu: return "Telugu";
    case ScriptId::kKannada: return "Kannada";
    case ScriptId::kMalayalam: return "Malayalam";
    case ScriptId::kLatin: return "Latin";
    case ScriptId::kCyrillic: return "Cyrillic";
    case ScriptId::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

std::string_view to_string(CharClass cls) {
  switch (cls) {
    case C::kIndependentVowel: return "IndependentVowel";
    case C::kDependentVowel: return "DependentVowel";
    case C::kConsonant: return "Consonant";
    case C::kHalanta: return "Halanta";
    case C::kAnusvara: return "Anusvara";
    case C::kChandrabindu: return "Chandrabindu";
    case C::kVisarga: return "Visarga";
    case C::kNukta: return "Nukta";
    case C::kOtherSign: return "OtherSign";
    case C::kNonScript: return "NonScript";
  }
  return "NonScript";
}

std::optional<ScriptId> parse_script(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "odia") return ScriptId::kOriya;
  for (ScriptId s : kSupportedScripts) {
    std::string candidate(to_string(s));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lower) return s;
  }
  return std::nullopt;
}

CharClass shared_indic_class(unsigned o) {
  if (o <= 0x01) return C::kChandrabindu;
  if (o == 0x02) return C::kAnusvara;
  if (o == 0x03) return C::kVisarga;
  if (o <= 0x14) return C::kIndependentVowel;
  if (o <= 0x39) return C::kConsonant;
  if (o <= 0x3B) return C::kDependentVowel;
  if (o == 0x3C) return C::kNukta;
  if (o == 0x3D) return C::kOtherSign;  // avagraha
  if (o <= 0x4C) return C::kDependentVowel;
  if (o == 0x4D) return C::kHalanta;
  if (o <= 0x4F) return C::kDependentVowel;
  if (o <= 0x54) return C::kOtherSign;  // om, stress and accent marks
  if (o <= 0x57) return C::kDependentVowel;
  if (o <= 0x5F) return C::kConsonant;
  if (o <= 0x61) return C::kIndependentVowel;
  if (o <= 0x63) return C::kDependentVowel;
  if (o <= 0x70) return C::kNonScript;  // dandas, digits, abbreviation sign
  if (o == 0x71) return C::kOtherSign;
  if (o <= 0x77) return C::kIndependentVowel;
  if (o <= 0x7F) return C::kConsonant;
  return C::kNonScript;
}

std::span<const ClassException> indic_exceptions(ScriptId script) {
  switch (script) {
    case ScriptId::kBengali: return kBengaliExceptions;
    case ScriptId::kGurmukhi: return kGurmukhiExceptions;
    case ScriptId::kGujarati: return kGujaratiExceptions;
    case ScriptId::kOriya: return kOriyaExceptions;
    case ScriptId::kTamil: return kTamilExceptions;
    case ScriptId::kTelugu: return kTeluguExceptions;
    case ScriptId::kKannada: return kKannadaExceptions;
    case ScriptId::kMalayalam: return kMalayalamExceptions;
    default: return {};
  }
}

std::span<const std::uint8_t> indic_unassigned(ScriptId script) {
  switch (script) {
    case ScriptId::kBengali: return kBengaliUnassigned;
    case ScriptId::kGurmukhi: return kGurmukhiUnassigned;
    case ScriptId::kGujarati: return kGujaratiUnassigned;
    case ScriptId::kOriya: return kOriyaUnassigned;
    case ScriptId::kTamil: return kTamilUnassigned;
    case ScriptId::kTelugu: return kTeluguUnassigned;
    case ScriptId::kKannada: return kKannadaUnassigned;
    case ScriptId::kMalayalam: return kMalayalamUnassigned;
    default: return {};
  }
}

ScriptTable::ScriptTable(ScriptId script) : script_(script) {
  const Block& block = block_of(script);
  block_start_ = block.start;
  block_end_ = block.end;
  if (is_abugida(script)) {
    for (unsigned o = 0; o < 128; ++o) class_by_offset_[o] = shared_indic_class(o);
    for (const ClassException& e : indic_exceptions(script)) class_by_offset_[e.offset] = e.cls;
    for (std::uint8_t o : indic_unassigned(script)) class_by_offset_[o] = C::kNonScript;
    for (unsigned o = 0; o < 128; ++o) {
      plosive_offsets_[o] = is_plosive_offset(o) && class_by_offset_[o] == C::kConsonant;
    }
  } else {
    for (char32_t cp = block_start_; cp <= block_end_; ++cp) {
      if (!is_alphabetic_letter(script, cp)) continue;
      if (default_alphabetic_vowel(script, cp)) vowels_.push_back(fold_case(cp));
    }
    std::sort(vowels_.begin(), vowels_.end());
    vowels_.erase(std::unique(vowels_.begin(), vowels_.end()), vowels_.end());
  }
}

const ScriptTable& ScriptTable::get(ScriptId script) {
  if (!is_supported(script)) {
    throw Error(ErrorCode::kUnsupportedScript, "no classification table for this script");
  }
  static const std::array<const ScriptTable*, 11> tables = [] {
    std::array<const ScriptTable*, 11> t{};
    for (ScriptId s : kSupportedScripts) t[static_cast<std::size_t>(s)] = new ScriptTable(s);
    return t;
  }();
  return *tables[static_cast<std::size_t>(script)];
}

CharClass ScriptTable::classify(char32_t cp) const {
  if (cp == kZwj || cp == kZwnj) return C::kOtherSign;
  if (is_alphabetic(script_)) return classify_alphabetic(cp);
  if (!contains(cp)) return C::kNonScript;
  return class_by_offset_[cp - block_start_];
}

CharClass ScriptTable::classify_alphabetic(char32_t cp) const {
  if (is_combining_diacritic(cp)) return C::kOtherSign;
  if (!contains(cp) || !is_alphabetic_letter(script_, cp)) return C::kNonScript;
  return is_vowel(cp) ? C::kIndependentVowel : C::kConsonant;
}

bool ScriptTable::is_plosive(char32_t cp) const {
  if (!is_abugida(script_) || !contains(cp)) return false;
  return plosive_offsets_[cp - block_start_];
}

bool ScriptTable::is_vowel(char32_t cp) const {
  if (!is_alphabetic(script_)) return false;
  return std::binary_search(vowels_.begin(), vowels_.end(), fold_case(cp));
}

CharClass classify(char32_t cp, ScriptId script) {
  return ScriptTable::get(script).classify(cp);
}

std::optional<ScriptId> block_script(char32_t cp) {
  for (const Block& b : kBlocks) {
    if (cp >= b.start && cp <= b.end) return b.script;
  }
  return std::nullopt;
}

ScriptId detect_script(std::u32string_view word) {
  if (word.empty()) throw Error(ErrorCode::kEmptyInput, "cannot detect the script of an empty word");
  std::optional<ScriptId> found;
  for (char32_t cp : word) {
    const std::optional<ScriptId> s = block_script(cp);
    if (!s || !is_letter(classify(cp, *s))) continue;
    if (!found) {
      found = s;
    } else if (*found != *s) {
      throw Error(ErrorCode::kMixedScript, "word \"" + encode_utf8(word) + "\" mixes " +
                                               std::string(to_string(*found)) + " and " +
                                               std::string(to_string(*s)) + " letters");
    }
  }
  return found.value_or(ScriptId::kUnsupported);
}

bool is_nasalizer(char32_t c1, std::optional<char32_t> c2, ScriptId script) {
  if (!is_abugida(script)) return false;
  const ScriptTable& table = ScriptTable::get(script);
  const CharClass cls = table.classify(c1);
  if (cls != C::kAnusvara && cls != C::kChandrabindu) return false;
  return !c2 || !table.is_plosive(*c2);
}

}  // namespace orthoseg
