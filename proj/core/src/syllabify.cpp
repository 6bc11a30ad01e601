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

#include "orthoseg/syllabify.hpp"

#include <algorithm>

#include "orthoseg/error.hpp"
#include "orthoseg/unicode.hpp"

namespace orthoseg {
namespace {

// Where the abugida scanner stands relative to the unit being built.
enum class State {
  kOpen,          // nothing pending; the next starter opens a unit
  kBare,          // consonant with its implicit schwa still pending
  kCluster,       // halanta or nasal-consonant sign: next consonant joins
  kVowel,         // nucleus present; only nasalizers and signs attach
  kForeign,       // inside a run of non-script code points
};

class UnitBuilder {
 public:
  explicit UnitBuilder(std::vector<OrthoSyllable>& out) : out_(out) {}

  void start(SyllableKind kind, char32_t cp) {
    flush();
    current_.kind = kind;
    current_.text.push_back(cp);
  }
  void append(char32_t cp) {
    if (current_.text.empty()) current_.kind = SyllableKind::kOther;
    current_.text.push_back(cp);
  }
  bool empty() const { return current_.text.empty(); }
  void flush() {
    if (current_.text.empty()) return;
    out_.push_back(std::move(current_));
    current_ = OrthoSyllable{};
  }

 private:
  std::vector<OrthoSyllable>& out_;
  OrthoSyllable current_;
};

void require_nonempty(std::u32string_view word) {
  if (word.empty()) throw Error(ErrorCode::kEmptyInput, "cannot syllabify an empty word");
}

bool letter_is_vowel(const ScriptTable& table, char32_t cp,
                     const std::optional<std::u32string>& vowels) {
  if (!vowels) return table.is_vowel(cp);
  const char32_t folded = fold_case(cp);
  return std::any_of(vowels->begin(), vowels->end(),
                     [folded](char32_t v) { return fold_case(v) == folded; });
}

}  // namespace

std::string_view to_string(SyllableKind kind) {
  switch (kind) {
    case SyllableKind::kConsonantCore: return "ConsonantCore";
    case SyllableKind::kIndependentVowel: return "IndependentVowel";
    case SyllableKind::kNasalConsonant: return "NasalConsonant";
    case SyllableKind::kOther: return "Other";
  }
  return "Other";
}

std::vector<OrthoSyllable> syllabify_indic(std::u32string_view word, ScriptId script) {
  require_nonempty(word);
  if (!is_abugida(script)) {
    throw Error(ErrorCode::kUnsupportedScript,
                std::string(to_string(script)) + " is not an abugida script");
  }
  const ScriptTable& table = ScriptTable::get(script);

  std::vector<OrthoSyllable> units;
  UnitBuilder unit(units);
  State state = State::kOpen;

  for (std::size_t i = 0; i < word.size(); ++i) {
    const char32_t cp = word[i];
    switch (table.classify(cp)) {
      case CharClass::kConsonant:
        if (state == State::kCluster) {
          unit.append(cp);
        } else {
          unit.start(SyllableKind::kConsonantCore, cp);
        }
        state = State::kBare;
        break;

      case CharClass::kHalanta:
        unit.append(cp);
        if (state == State::kBare) state = State::kCluster;
        break;

      case CharClass::kDependentVowel:
        if (state == State::kBare || state == State::kCluster) {
          unit.append(cp);
        } else {
          unit.start(SyllableKind::kOther, cp);
        }
        state = State::kVowel;
        break;

      case CharClass::kIndependentVowel:
        unit.start(SyllableKind::kIndependentVowel, cp);
        state = State::kVowel;
        break;

      case CharClass::kAnusvara:
      case CharClass::kChandrabindu: {
        const std::optional<char32_t> next =
            i + 1 < word.size() ? std::optional<char32_t>(word[i + 1]) : std::nullopt;
        if (is_nasalizer(cp, next, script)) {
          unit.append(cp);
          state = State::kVowel;
        } else {
          // Homorganic nasal before a stop: opens the next cluster.
          unit.start(SyllableKind::kNasalConsonant, cp);
          state = State::kCluster;
        }
        break;
      }

      case CharClass::kNukta:
      case CharClass::kVisarga:
      case CharClass::kOtherSign:
        unit.append(cp);
        break;

      case CharClass::kNonScript:
        if (state == State::kForeign) {
          unit.append(cp);
        } else {
          unit.start(SyllableKind::kOther, cp);
        }
        state = State::kForeign;
        break;
    }
  }
  unit.flush();
  return units;
}

std::vector<OrthoSyllable> syllabify_alpha(std::u32string_view word, ScriptId script,
                                           const std::optional<std::u32string>& vowels) {
  require_nonempty(word);
  if (!is_alphabetic(script)) {
    throw Error(ErrorCode::kUnsupportedScript,
                std::string(to_string(script)) + " is not an alphabetic script");
  }
  const ScriptTable& table = ScriptTable::get(script);

  std::vector<OrthoSyllable> units;
  // Units of the current letter run start at this index of `units`.
  std::size_t run_begin = 0;
  OrthoSyllable current;
  bool current_has_vowel = false;
  bool in_foreign = false;

  auto close_current = [&] {
    if (current.text.empty()) return;
    if (!current_has_vowel && units.size() > run_begin) {
      // Trailing consonants belong to the preceding syllable.
      units.back().text += current.text;
    } else {
      units.push_back(std::move(current));
    }
    current = OrthoSyllable{};
    current_has_vowel = false;
  };

  for (char32_t cp : word) {
    const CharClass cls = table.classify(cp);
    if (cls == CharClass::kNonScript) {
      if (!in_foreign) {
        close_current();
        units.push_back(OrthoSyllable{std::u32string(1, cp), SyllableKind::kOther});
        in_foreign = true;
      } else {
        units.back().text.push_back(cp);
      }
      run_begin = units.size();
      continue;
    }
    in_foreign = false;
    if (cls == CharClass::kOtherSign) {
      current.text.push_back(cp);
      continue;
    }
    if (letter_is_vowel(table, cp, vowels)) {
      if (current.text.empty()) current.kind = SyllableKind::kIndependentVowel;
      current.text.push_back(cp);
      current_has_vowel = true;
    } else {
      if (current_has_vowel) {
        units.push_back(std::move(current));
        current = OrthoSyllable{};
        current_has_vowel = false;
      }
      if (current.text.empty() || current.kind == SyllableKind::kOther) {
        current.kind = SyllableKind::kConsonantCore;
      }
      current.text.push_back(cp);
    }
  }
  close_current();
  return units;
}

std::vector<OrthoSyllable> syllabify(std::u32string_view word, const SyllabifyOptions& options) {
  require_nonempty(word);
  const std::u32string normalized = to_nfc(word);
  const ScriptId script = options.script ? *options.script : detect_script(normalized);
  if (is_abugida(script)) return syllabify_indic(normalized, script);
  if (is_alphabetic(script)) return syllabify_alpha(normalized, script, options.vowels);
  return {OrthoSyllable{normalized, SyllableKind::kOther}};
}

std::vector<std::u32string> syllable_texts(const std::vector<OrthoSyllable>& units) {
  std::vector<std::u32string> texts;
  texts.reserve(units.size());
  for (const OrthoSyllable& u : units) texts.push_back(u.text);
  return texts;
}

}  // namespace orthoseg
