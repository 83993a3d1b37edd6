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

#include "fonodict/stress.hpp"

#include <optional>
#include <string>

#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// n, s or vowel at the end of the word selects penultimate stress.
bool ends_penultimate_trigger(const SyllabifiedWord& word) {
  if (!word.source_word.empty()) {
    const auto cps = text::decode_utf8(word.source_word).value_or(U"");
    if (cps.empty()) return false;
    const std::string last = text::encode_utf8(cps.back());
    return last == "n" || last == "s" || is_vowel_letter(last);
  }
  const auto ph = word.phonemes();
  if (ph.empty()) return false;
  const Phoneme& p = ph.back();
  return p.symbol == 'n' || p.symbol == 's' || p.is_vowel();
}

}  // namespace

std::string_view to_string(StressCategory category) {
  switch (category) {
    case StressCategory::Aguda: return "Aguda";
    case StressCategory::Grave: return "Grave";
    case StressCategory::Esdrujula: return "Esdrujula";
  }
  return "Unknown";
}

StressedWord assign_stress(SyllabifiedWord word, const AccentInfo& accent) {
  auto& syllables = word.syllables;
  const std::size_t count = syllables.size();
  if (count == 0) {
    throw Error(ErrorKind::NoNucleus, "word has no syllables");
  }

  std::size_t index = 0;
  const bool mente = count >= 3 && ends_with(word.source_word, "mente");
  if (accent.has_accent && !mente) {
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < count; ++k) {
      for (const auto& p : syllables[k].nucleus) {
        if (p.stressed && p.is_vowel()) found = k;
      }
    }
    if (!found) {
      throw Error(ErrorKind::AccentOutsideNucleus,
                  "written accent not on a nucleus vowel in '" +
                      render_compact(word.phonemes()) + "'");
    }
    if (count - *found > 3) {
      throw Error(ErrorKind::StressOutOfRange,
                  "accent on syllable " + std::to_string(*found + 1) + " of " +
                      std::to_string(count) + " in '" + word.source_word +
                      "'");
    }
    index = *found;
  } else if (count == 1) {
    index = 0;
  } else if (ends_penultimate_trigger(word)) {
    index = count - 2;
  } else {
    index = count - 1;
  }

  for (auto& s : syllables) {
    for (auto& p : s.onset) p.stressed = false;
    for (auto& p : s.nucleus) p.stressed = false;
    for (auto& p : s.coda) p.stressed = false;
  }
  syllables[index].vowel().stressed = true;

  StressedWord out;
  out.syllabified = std::move(word);
  out.stressed_index = index;
  out.category = classify_stress(out);
  return out;
}

StressCategory classify_stress(const StressedWord& word) {
  const std::size_t from_end = word.syllable_count() - word.stressed_index;
  switch (from_end) {
    case 1: return StressCategory::Aguda;
    case 2: return StressCategory::Grave;
    case 3: return StressCategory::Esdrujula;
    default:
      throw Error(ErrorKind::StressOutOfRange,
                  "stress on syllable " + std::to_string(word.stressed_index + 1) +
                      " of " + std::to_string(word.syllable_count()));
  }
}

}  // namespace fonodict
