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

#ifndef ORTHOSEG_SYLLABIFY_HPP_
#define ORTHOSEG_SYLLABIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthoseg/script.hpp"

namespace orthoseg {

enum class SyllableKind { kConsonantCore, kIndependentVowel, kNasalConsonant, kOther };

std::string_view to_string(SyllableKind kind);

struct OrthoSyllable {
  std::u32string text;
  SyllableKind kind = SyllableKind::kOther;

  friend bool operator==(const OrthoSyllable&, const OrthoSyllable&) = default;
};

struct SyllabifyOptions {
  // Forces a script instead of per-word detection. Letters outside the
  // forced script's block become Other units.
  std::optional<ScriptId> script;
  // Replaces the alphabetic vowel set (matched case-insensitively).
  std::optional<std::u32string> vowels;
};

// Orthographic syllables of an abugida word. Input is taken as-is (callers
// normalize); the concatenation of the result equals `word`.
std::vector<OrthoSyllable> syllabify_indic(std::u32string_view word, ScriptId script);

std::vector<OrthoSyllable> syllabify_alpha(std::u32string_view word, ScriptId script,
                                           const std::optional<std::u32string>& vowels = {});

// NFC-normalizes, detects the script (unless forced) and dispatches. Words
// without letters of a supported script come back as one Other unit.
std::vector<OrthoSyllable> syllabify(std::u32string_view word, const SyllabifyOptions& options = {});

std::vector<std::u32string> syllable_texts(const std::vector<OrthoSyllable>& units);

}  // namespace orthoseg

#endif  // ORTHOSEG_SYLLABIFY_HPP_
