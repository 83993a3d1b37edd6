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

#include "fonodict/annotate.hpp"

#include "fonodict/default_data.hpp"
#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

const std::string& ipa_of(const Phoneme& p, const IpaTable& table) {
  const std::string* ipa = table.find(p.symbol);
  if (!ipa) {
    throw Error(ErrorKind::MissingIpaMapping,
                "no IPA for symbol '" + std::string(1, p.symbol) + "'");
  }
  return *ipa;
}

}  // namespace

std::string_view to_string(Slot slot) {
  switch (slot) {
    case Slot::Onset1: return "Onset1";
    case Slot::Onset2: return "Onset2";
    case Slot::PreNuclearGlide: return "PreNuclearGlide";
    case Slot::Nucleus: return "Nucleus";
    case Slot::PostNuclearGlide: return "PostNuclearGlide";
    case Slot::Coda1: return "Coda1";
    case Slot::Coda2: return "Coda2";
  }
  return "Unknown";
}

const IpaTable& IpaTable::defaults() {
  static const IpaTable table = parse(default_data::ipa(), "<default ipa>");
  return table;
}

IpaTable IpaTable::parse(std::string_view textual, std::string_view origin,
                         const IpaTable* base) {
  IpaTable table = base ? *base : IpaTable{};
  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto trimmed = text::trim(lines[n]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text::split_ws(trimmed);
    if (fields.size() != 2 || fields[0].size() != 1) {
      throw Error(ErrorKind::MalformedTable,
                  std::string(origin) + ": expected 'symbol ipa' on line " +
                      std::to_string(line_no),
                  line_no);
    }
    table.set(fields[0][0], fields[1]);
  }
  return table;
}

IpaTable IpaTable::load(const std::filesystem::path& path) {
  const auto lines = text::read_lines(path);
  return parse(text::join(lines, "\n"), path.string(), &defaults());
}

const std::string* IpaTable::find(char symbol) const {
  const auto it = table_.find(symbol);
  return it == table_.end() ? nullptr : &it->second;
}

std::string render_base(const StressedWord& word) {
  return render_spaced(word.syllabified.phonemes());
}

std::string render_phonotactics(const StressedWord& word) {
  std::string out;
  for (const auto& s : word.syllabified.syllables) {
    if (!out.empty()) out.push_back(' ');
    for (const auto& p : s.phonemes()) out.push_back(p.is_vowel() ? 'V' : 'C');
  }
  return out;
}

std::string render_ipa(const StressedWord& word, bool divided, bool stress_mark,
                       const IpaTable& table) {
  std::string out;
  bool first = true;
  for (const auto& s : word.syllabified.syllables) {
    if (divided && !first) out.push_back(' ');
    first = false;
    for (const auto& p : s.phonemes()) {
      if (stress_mark && p.stressed && p.is_vowel()) out += kIpaStressMark;
      out += ipa_of(p, table);
    }
  }
  return out;
}

std::vector<std::string> ipa_segments(const StressedWord& word,
                                      const IpaTable& table) {
  std::vector<std::string> out;
  for (const auto& p : word.syllabified.phonemes()) out.push_back(ipa_of(p, table));
  return out;
}

std::vector<PositionTag> index_positions(const StressedWord& word) {
  std::vector<PositionTag> tags;
  std::size_t index = 0;
  const auto& syllables = word.syllabified.syllables;
  for (std::size_t k = 0; k < syllables.size(); ++k) {
    const auto& s = syllables[k];
    auto push = [&](const Phoneme& p, Slot slot) {
      tags.push_back({index++, k, slot, p.symbol});
    };
    for (std::size_t i = 0; i < s.onset.size(); ++i) {
      push(s.onset[i], i == 0 ? Slot::Onset1 : Slot::Onset2);
    }
    bool seen_vowel = false;
    for (const auto& p : s.nucleus) {
      if (p.is_vowel()) {
        push(p, Slot::Nucleus);
        seen_vowel = true;
      } else {
        push(p, seen_vowel ? Slot::PostNuclearGlide : Slot::PreNuclearGlide);
      }
    }
    for (std::size_t i = 0; i < s.coda.size(); ++i) {
      push(s.coda[i], i == 0 ? Slot::Coda1 : Slot::Coda2);
    }
  }
  return tags;
}

std::vector<PositionTag> select_slot(std::span<const PositionTag> tags, Slot slot) {
  std::vector<PositionTag> out;
  for (const auto& t : tags) {
    if (t.slot == slot) out.push_back(t);
  }
  return out;
}

AnnotationBundle annotate(const StressedWord& word, const IpaTable& table,
                          bool ipa_stress_mark) {
  AnnotationBundle bundle;
  bundle.base = render_base(word);
  bundle.phonotactics = render_phonotactics(word);
  bundle.ipa = render_ipa(word, true, ipa_stress_mark, table);
  bundle.ipa_flat = render_ipa(word, false, ipa_stress_mark, table);
  bundle.ipa_segments = ipa_segments(word, table);
  bundle.positions = index_positions(word);
  return bundle;
}

}  // namespace fonodict
