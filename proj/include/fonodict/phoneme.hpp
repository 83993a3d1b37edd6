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

#include <string>
#include <string_view>
#include <vector>

namespace fonodict {

// The built-in alphabet. Lenited stops and dialect outputs are included even
// though no letter rule produces them directly.
inline constexpr std::string_view kPhonemeAlphabet = "ptkbdgBDGfsTxhCmnNlLyrRieaoujw";

enum class PhonemeClass { Vowel, Semivowel, Consonant };

// One segment of the internal one-character-per-phoneme alphabet.
struct Phoneme {
  char symbol = '?';
  PhonemeClass klass = PhonemeClass::Consonant;
  bool stressed = false;  // vowels only
  bool lenited = false;   // B, D, G only

  bool is_vowel() const { return klass == PhonemeClass::Vowel; }
  bool is_semivowel() const { return klass == PhonemeClass::Semivowel; }
  bool is_consonant() const { return klass == PhonemeClass::Consonant; }
  bool is_vocalic() const { return klass != PhonemeClass::Consonant; }

  bool operator==(const Phoneme&) const = default;
};

// a e i o u are vowels, j w semivowels, every other symbol a consonant.
PhonemeClass class_of(char symbol);
Phoneme make_phoneme(char symbol);

// Upper-cases stressed vowels ('a' -> 'A'); everything else verbatim.
char display_symbol(const Phoneme& p);

struct PhonemeSequence {
  std::vector<Phoneme> phonemes;
  std::string source_word;

  std::size_t size() const { return phonemes.size(); }
  bool operator==(const PhonemeSequence&) const = default;
};

// Space-free rendering: one character per phoneme.
std::string render_compact(const std::vector<Phoneme>& phonemes);
// Space-separated rendering with stressed vowels upper-cased.
std::string render_spaced(const std::vector<Phoneme>& phonemes);

}  // namespace fonodict
