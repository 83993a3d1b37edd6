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

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fonodict/orthography.hpp"
#include "fonodict/phoneme.hpp"

namespace fonodict {

// Neighbour condition on one side of a letter token.
struct ContextCondition {
  enum class Kind { Any, Boundary, Vowel, FrontVowel, Consonant, OneOf };
  Kind kind = Kind::Any;
  std::u32string letters;  // for OneOf

  bool matches(const LetterToken* neighbour) const;
};

struct MappingRule {
  std::string token;
  ContextCondition left;
  ContextCondition right;
  std::string symbols;  // empty for silent tokens
  std::size_t line = 0;
};

// Letter-token to phoneme rules plus the internal alphabet. Rules for a token
// are tried in file order; the first whose context matches wins.
//
// Text format, one rule per line, whitespace separated:
//
//   token  context  symbol [symbol...]
//
// `context` is `*` or `L_R` where each side is empty (any), `#` (word
// boundary), `V` (vowel letter), `F` (e/i, plain or accented), `C`
// (consonant letter) or a bracketed letter set such as `[nls]`. A single
// `-` as the symbol list marks a silent token. Lines starting with `#` are
// comments.
class PhonemeInventory {
 public:
  static const PhonemeInventory& defaults();
  static PhonemeInventory parse(std::string_view text,
                                std::string_view origin = "<inventory>");
  static PhonemeInventory load(const std::filesystem::path& path);

  // Symbols for letters[index], or nullptr when no rule applies.
  const std::string* lookup(std::span<const LetterToken> letters,
                            std::size_t index) const;

  const std::set<char>& alphabet() const { return alphabet_; }
  bool contains(char symbol) const { return alphabet_.count(symbol) != 0; }
  const std::vector<MappingRule>& rules() const { return rules_; }

 private:
  std::vector<MappingRule> rules_;
  std::map<std::string, std::vector<std::size_t>> by_token_;
  std::set<char> alphabet_;
};

// Letters to phonemes. Silent tokens emit nothing, adjacent identical vowels
// collapse into one, and the accented letter's vowel is flagged stressed.
// Throws Error(UnmappableToken).
PhonemeSequence map_letters(std::span<const LetterToken> letters,
                            const AccentInfo& accent,
                            const PhonemeInventory& inventory =
                                PhonemeInventory::defaults());

// Unstressed i/u next to a nucleus vowel become j/w. Within a run of vowels
// the nuclei are the strong (a e o) and stressed vowels; an all-weak run
// takes its last vowel as nucleus.
PhonemeSequence classify_vowels(PhonemeSequence seq);

// b/d/g flanked by vowels or semivowels become B/D/G. Identity when
// `enabled` is false.
PhonemeSequence apply_lenition(PhonemeSequence seq, bool enabled = true);

// map_letters + classify_vowels + apply_lenition on an analysed word.
PhonemeSequence transcribe(const OrthoWord& word,
                           const PhonemeInventory& inventory =
                               PhonemeInventory::defaults());

// Parses an explicit space-separated symbol string (override entries).
// Upper-case vowels mark stress; B/D/G are taken as lenited. Throws
// Error(InvalidOverride) for symbols outside the inventory alphabet.
PhonemeSequence parse_phonemes(std::string_view symbols,
                               const PhonemeInventory& inventory =
                                   PhonemeInventory::defaults());

}  // namespace fonodict
