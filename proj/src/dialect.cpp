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

#include "fonodict/dialect.hpp"

#include <algorithm>

#include "fonodict/default_data.hpp"
#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorKind::MalformedTable,
              "invalid value '" + std::string(value) + "' for '" +
                  std::string(key) + "'");
}

bool parse_flag(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "yes" || value == "1") {
    return true;
  }
  if (value == "off" || value == "false" || value == "no" || value == "0") {
    return false;
  }
  bad_value(key, value);
}

std::string flag(bool v) { return v ? "on" : "off"; }

template <typename F>
void for_each_phoneme(StressedWord& word, F&& f) {
  for (auto& s : word.syllabified.syllables) {
    for (auto& p : s.onset) f(p);
    for (auto& p : s.nucleus) f(p);
    for (auto& p : s.coda) f(p);
  }
}

template <typename F>
void for_each_coda(StressedWord& word, F&& f) {
  for (auto& s : word.syllabified.syllables) {
    for (auto& p : s.coda) f(p);
  }
}

void relabel(Phoneme& p, char from, char to) {
  if (p.symbol == from) p.symbol = to;
}

}  // namespace

const std::vector<std::string>& dialect_field_names() {
  static const std::vector<std::string> names = {
      "mark_stress",    "lenition",        "semivowels",
      "ll_realization", "theta",           "velar_fricative",
      "s_debuccalization", "lambdacism"};
  return names;
}

void set_field(DialectConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "mark_stress") {
    cfg.mark_stress = parse_flag(key, value);
  } else if (key == "lenition") {
    cfg.lenition = parse_flag(key, value);
  } else if (key == "semivowels") {
    cfg.semivowels = parse_flag(key, value);
  } else if (key == "ll_realization") {
    if (value == "palatal_lateral" || value == "lateral") {
      cfg.ll_realization = LlRealization::PalatalLateral;
    } else if (value == "palatal_fricative" || value == "fricative") {
      cfg.ll_realization = LlRealization::PalatalFricative;
    } else {
      bad_value(key, value);
    }
  } else if (key == "theta") {
    if (value == "distincion") {
      cfg.theta = ThetaMode::Distincion;
    } else if (value == "seseo") {
      cfg.theta = ThetaMode::Seseo;
    } else {
      bad_value(key, value);
    }
  } else if (key == "velar_fricative") {
    if (value == "x") {
      cfg.velar_fricative = VelarFricative::X;
    } else if (value == "h") {
      cfg.velar_fricative = VelarFricative::H;
    } else {
      bad_value(key, value);
    }
  } else if (key == "s_debuccalization") {
    cfg.s_debuccalization = parse_flag(key, value);
  } else if (key == "lambdacism") {
    cfg.lambdacism = parse_flag(key, value);
  } else {
    throw Error(ErrorKind::MalformedTable,
                "unknown dialect field '" + std::string(key) + "'");
  }
}

std::string get_field(const DialectConfig& cfg, std::string_view key) {
  if (key == "mark_stress") return flag(cfg.mark_stress);
  if (key == "lenition") return flag(cfg.lenition);
  if (key == "semivowels") return flag(cfg.semivowels);
  if (key == "ll_realization") {
    return cfg.ll_realization == LlRealization::PalatalLateral
               ? "palatal_lateral"
               : "palatal_fricative";
  }
  if (key == "theta") {
    return cfg.theta == ThetaMode::Distincion ? "distincion" : "seseo";
  }
  if (key == "velar_fricative") {
    return cfg.velar_fricative == VelarFricative::X ? "x" : "h";
  }
  if (key == "s_debuccalization") return flag(cfg.s_debuccalization);
  if (key == "lambdacism") return flag(cfg.lambdacism);
  throw Error(ErrorKind::MalformedTable,
              "unknown dialect field '" + std::string(key) + "'");
}

std::string describe(const DialectConfig& cfg) {
  std::string out;
  for (const auto& key : dialect_field_names()) {
    if (!out.empty()) out += ' ';
    out += key + "=" + get_field(cfg, key);
  }
  return out;
}

const std::vector<std::string>& known_countries() {
  static const std::vector<std::string> countries = {
      "argentina", "bolivia",   "chile",   "colombia",
      "costa_rica", "cuba",     "dominican_republic", "ecuador",
      "guatemala", "honduras",  "mexico",  "panama",
      "peru",      "puerto_rico", "spain", "venezuela"};
  return countries;
}

bool is_known_country(std::string_view code) {
  if (code == "generic") return true;
  const auto& all = known_countries();
  return std::find(all.begin(), all.end(), code) != all.end();
}

const PresetTable& PresetTable::defaults() {
  static const PresetTable table =
      parse(default_data::presets(), "<default presets>");
  return table;
}

PresetTable PresetTable::parse(std::string_view textual, std::string_view origin) {
  PresetTable table;
  std::set<std::string> seen_keys;
  std::size_t block_line = 0;
  auto malformed = [&](const std::string& what, std::size_t line) -> Error {
    return Error(ErrorKind::MalformedTable,
                 std::string(origin) + ": " + what + " on line " +
                     std::to_string(line),
                 line);
  };
  auto close_block = [&]() {
    if (table.presets_.empty()) return;
    const auto& fields = dialect_field_names();
    for (const auto& f : fields) {
      if (!seen_keys.count(f)) {
        throw malformed("preset '" + table.presets_.back().name +
                            "' lacks field '" + f + "'",
                        block_line);
      }
    }
  };

  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto trimmed = text::trim(lines[n]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (trimmed.front() == '[') {
      if (trimmed.back() != ']' || trimmed.size() < 3) {
        throw malformed("bad preset header", line_no);
      }
      close_block();
      DialectPreset preset;
      preset.name = std::string(text::trim(trimmed.substr(1, trimmed.size() - 2)));
      if (table.find(preset.name)) {
        throw malformed("duplicate preset '" + preset.name + "'", line_no);
      }
      table.presets_.push_back(std::move(preset));
      seen_keys.clear();
      block_line = line_no;
      continue;
    }
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos || table.presets_.empty()) {
      throw malformed("expected 'key = value'", line_no);
    }
    const std::string key(text::trim(trimmed.substr(0, eq)));
    const std::string value(text::trim(trimmed.substr(eq + 1)));
    auto& preset = table.presets_.back();
    if (key == "countries") {
      for (const auto& c : text::split(value, ',')) {
        const std::string code(text::trim(c));
        if (code.empty()) continue;
        if (!is_known_country(code)) {
          throw Error(ErrorKind::UnknownCountry,
                      std::string(origin) + ": unknown country '" + code +
                          "' on line " + std::to_string(line_no),
                      line_no);
        }
        preset.countries.insert(code);
      }
      continue;
    }
    try {
      set_field(preset.config, key, value);
    } catch (const Error& e) {
      throw malformed(e.detail(), line_no);
    }
    seen_keys.insert(key);
  }
  close_block();
  return table;
}

PresetTable PresetTable::load(const std::filesystem::path& path) {
  const auto lines = text::read_lines(path);
  return parse(text::join(lines, "\n"), path.string());
}

const DialectPreset* PresetTable::find(std::string_view name) const {
  for (const auto& p : presets_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

DialectConfig resolve_preset(std::string_view name, const PresetTable& presets) {
  const auto* preset = presets.find(name);
  if (!preset) {
    throw Error(ErrorKind::UnknownPreset,
                "no preset named '" + std::string(name) + "'");
  }
  return preset->config;
}

DialectConfig resolve_presets(std::span<const std::string> names,
                              const PresetTable& presets) {
  if (names.empty()) return DialectConfig{};
  const DialectConfig first = resolve_preset(names.front(), presets);
  std::vector<std::string> conflicts;
  for (std::size_t i = 1; i < names.size(); ++i) {
    const DialectConfig other = resolve_preset(names[i], presets);
    for (const auto& key : dialect_field_names()) {
      if (get_field(first, key) != get_field(other, key) &&
          std::find(conflicts.begin(), conflicts.end(), key) == conflicts.end()) {
        conflicts.push_back(key);
      }
    }
  }
  if (!conflicts.empty()) {
    throw Error(ErrorKind::MergeConflict,
                "presets disagree on " + text::join(conflicts, ", "));
  }
  return first;
}

StressedWord transform(StressedWord word, const DialectConfig& cfg) {
  if (cfg.theta == ThetaMode::Seseo) {
    for_each_phoneme(word, [](Phoneme& p) { relabel(p, 'T', 's'); });
  }
  if (cfg.velar_fricative == VelarFricative::H) {
    for_each_phoneme(word, [](Phoneme& p) { relabel(p, 'x', 'h'); });
  }
  if (cfg.ll_realization == LlRealization::PalatalFricative) {
    for_each_phoneme(word, [](Phoneme& p) { relabel(p, 'L', 'y'); });
  }
  if (cfg.s_debuccalization) {
    for_each_coda(word, [](Phoneme& p) { relabel(p, 's', 'h'); });
  }
  if (cfg.lambdacism) {
    for_each_coda(word, [](Phoneme& p) { relabel(p, 'r', 'l'); });
  }
  if (!cfg.lenition) {
    for_each_phoneme(word, [](Phoneme& p) {
      if (!p.lenited) return;
      p.symbol = static_cast<char>(p.symbol - 'A' + 'a');
      p.lenited = false;
    });
  }
  if (!cfg.semivowels) {
    // Relabel only; the glide keeps its place in the syllable.
    for_each_phoneme(word, [](Phoneme& p) {
      if (!p.is_semivowel()) return;
      relabel(p, 'j', 'i');
      relabel(p, 'w', 'u');
    });
  }
  if (!cfg.mark_stress) {
    for_each_phoneme(word, [](Phoneme& p) { p.stressed = false; });
  }
  return word;
}

}  // namespace fonodict
