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
#include <string_view>

#include "fonodict/orthography.hpp"
#include "fonodict/syllabifier.hpp"

namespace fonodict {

// Final, penultimate and antepenultimate stress.
enum class StressCategory { Aguda, Grave, Esdrujula };

std::string_view to_string(StressCategory category);

struct StressedWord {
  SyllabifiedWord syllabified;
  std::size_t stressed_index = 0;  // counted from the first syllable
  StressCategory category = StressCategory::Aguda;

  std::size_t syllable_count() const { return syllabified.syllables.size(); }
  bool operator==(const StressedWord&) const = default;
};

// With a written accent, stresses the syllable whose nucleus vowel carries
// the accent flag. Otherwise a word ending in n, s or a vowel letter is
// stressed on the penultimate, anything else on the final syllable
// (monosyllables take their only syllable). The test reads the final letter
// of `source_word`; when that is empty (explicit phoneme overrides) it reads
// the final phoneme instead. Words in -mente keep the suffix stress.
//
// Throws Error(AccentOutsideNucleus) when the accent flag is missing from
// every nucleus vowel, and Error(StressOutOfRange) when the accent lies
// before the antepenultimate syllable.
StressedWord assign_stress(SyllabifiedWord word, const AccentInfo& accent);

StressCategory classify_stress(const StressedWord& word);

}  // namespace fonodict
