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

#include "fonodict/stress.hpp"

namespace fonodict {

enum class LlRealization { PalatalLateral, PalatalFricative };
enum class ThetaMode { Distincion, Seseo };
enum class VelarFricative { X, H };

// The eight dialect switches. Defaults are the Castilian-based base form.
struct DialectConfig {
  bool mark_stress = true;
  bool lenition = true;
  bool semivowels = true;
  LlRealization ll_realization = LlRealization::PalatalLateral;
  ThetaMode theta = ThetaMode::Distincion;
  VelarFricative velar_fricative = VelarFricative::X;
  bool s_debuccalization = false;
  bool lambdacism = false;

  bool operator==(const DialectConfig&) const = default;
};

// Field names in preset-file order.
const std::vector<std::string>& dialect_field_names();

// Sets one field from its textual form (`on`/`off`, `palatal_lateral`,
// `seseo`, `h`, ...). Throws Error(MalformedTable) on an unknown key or value.
void set_field(DialectConfig& cfg, std::string_view key, std::string_view value);
std::string get_field(const DialectConfig& cfg, std::string_view key);

// `key=value` pairs in field order, space separated.
std::string describe(const DialectConfig& cfg);

// The sixteen country codes wordlists may be tagged with.
const std::vector<std::string>& known_countries();
// A known country or "generic".
bool is_known_country(std::string_view code);

struct DialectPreset {
  std::string name;
  DialectConfig config;
  std::set<std::string> countries;
};

// Preset file: `[name]` opens a block, followed by `key = value` lines for
// all eight fields plus `countries = a, b, c`.
class PresetTable {
 public:
  static const PresetTable& defaults();
  static PresetTable parse(std::string_view text,
                           std::string_view origin = "<presets>");
  static PresetTable load(const std::filesystem::path& path);

  const DialectPreset* find(std::string_view name) const;
  const std::vector<DialectPreset>& presets() const { return presets_; }

 private:
  std::vector<DialectPreset> presets_;
};

// Throws Error(UnknownPreset).
DialectConfig resolve_preset(std::string_view name,
                             const PresetTable& presets = PresetTable::defaults());

// Merges several presets. All must agree field by field, otherwise
// Error(MergeConflict) names the disagreeing fields.
DialectConfig resolve_presets(std::span<const std::string> names,
                              const PresetTable& presets = PresetTable::defaults());

// Applies the rewrites in fixed order: seseo, /x/ to /h/, ll realisation,
// coda /s/ debuccalisation, coda tap lambdacism, lenition off, semivowels
// off, stress marks off. Every rewrite is segment-for-segment, so syllable
// structure and the stressed syllable index are preserved.
StressedWord transform(StressedWord word, const DialectConfig& cfg);

}  // namespace fonodict
