// Copyright 2026 The fonodict Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fonodict {

/// One spelling unit: a single letter or one of the grouped units
/// "ch", "ll", "rr", "qu", "gu", "gü". Surfaces are UTF-8.
struct LetterToken {
  std::string surface;
  bool is_silent = false;    // true only for "h"
  std::size_t position = 0;  // code-point offset into the normalized word

  bool operator==(const LetterToken&) const = default;
};

struct AccentInfo {
  bool has_accent = false;
  std::size_t letter_index = 0;  // index into the letter tokens; valid iff has_accent

  bool operator==(const AccentInfo&) const = default;
};

struct OrthoWord {
  std::string raw;
  std::string normalized;
  std::vector<LetterToken> letters;
  AccentInfo accent;
};

// Lowercases, trims and validates against the accepted alphabet
// (a-z, á é í ó ú, ü inside "gü", ñ, hyphen). Combining acute, tilde and
// diaeresis are composed onto their base letter first. Throws
// Error(EmptyWord) or Error(IllegalCharacter) with the code-point index.
OrthoWord normalize(std::string_view raw);

// Greedy left-to-right grouping; "qu"/"gu" are grouped only before e/i.
std::vector<LetterToken> tokenize_letters(const OrthoWord& word);

// Throws Error(MultipleAccents) when more than one acute vowel is present.
AccentInfo find_accent(std::span<const LetterToken> letters);

// normalize + tokenize_letters + find_accent. A hyphenated word is tokenized
// whole (the hyphen is its own token) and its accent is left unset; use
// split_compound to get per-part words.
OrthoWord read_word(std::string_view raw);

// Splits at hyphens into independently analysed parts. A word without a
// hyphen yields itself. Empty parts are rejected as IllegalCharacter at the
// offending hyphen.
std::vector<OrthoWord> split_compound(const OrthoWord& word);

// Concatenation of token surfaces; equals `normalized` for every accepted word.
std::string detokenize(std::span<const LetterToken> letters);

bool is_accented_vowel(std::string_view surface);
bool is_vowel_letter(std::string_view surface);
bool is_front_vowel_letter(std::string_view surface);

}  // namespace fonodict
