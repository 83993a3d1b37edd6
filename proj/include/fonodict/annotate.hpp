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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fonodict/stress.hpp"

namespace fonodict {

enum class Slot {
  Onset1,
  Onset2,
  PreNuclearGlide,
  Nucleus,
  PostNuclearGlide,
  Coda1,
  Coda2,
};

std::string_view to_string(Slot slot);

struct PositionTag {
  std::size_t phoneme_index = 0;
  std::size_t syllable_index = 0;
  Slot slot = Slot::Nucleus;
  char symbol = '?';

  bool operator==(const PositionTag&) const = default;
};

struct AnnotationBundle {
  std::string base;          // "m E s a"
  std::string phonotactics;  // "CV CV"
  std::string ipa;           // "me sa"
  std::string ipa_flat;      // "mesa"
  std::vector<std::string> ipa_segments;
  std::vector<PositionTag> positions;

  bool operator==(const AnnotationBundle&) const = default;
};

// Internal symbol to IPA string. Text format: `symbol<whitespace>ipa` per line.
class IpaTable {
 public:
  static const IpaTable& defaults();
  // Entries in `text` override those of `base`.
  static IpaTable parse(std::string_view text,
                        std::string_view origin = "<ipa>",
                        const IpaTable* base = nullptr);
  // Loads a file on top of the defaults.
  static IpaTable load(const std::filesystem::path& path);

  const std::string* find(char symbol) const;
  void set(char symbol, std::string ipa) { table_[symbol] = std::move(ipa); }
  const std::map<char, std::string>& entries() const { return table_; }

 private:
  std::map<char, std::string> table_;
};

inline constexpr std::string_view kIpaStressMark = "ˈ";

std::string render_base(const StressedWord& word);
std::string render_phonotactics(const StressedWord& word);

// Throws Error(MissingIpaMapping) for a symbol without an IPA entry.
std::string render_ipa(const StressedWord& word, bool divided, bool stress_mark,
                       const IpaTable& table = IpaTable::defaults());

// One IPA string per phoneme, without stress marks.
std::vector<std::string> ipa_segments(const StressedWord& word,
                                      const IpaTable& table = IpaTable::defaults());

std::vector<PositionTag> index_positions(const StressedWord& word);

std::vector<PositionTag> select_slot(std::span<const PositionTag> tags, Slot slot);

AnnotationBundle annotate(const StressedWord& word,
                          const IpaTable& table = IpaTable::defaults(),
                          bool ipa_stress_mark = false);

}  // namespace fonodict
