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

#include "fonodict/lexicon.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <thread>
#include <unordered_set>

#include "fonodict/text.hpp"

namespace fonodict {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::IoFailure, "cannot write '" + path.string() + "'");
  }
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw Error(ErrorKind::IoFailure, "write failed on '" + path.string() + "'");
  }
}

}  // namespace

WordlistSource load_wordlist(const std::filesystem::path& path,
                             std::string_view country) {
  if (!is_known_country(country)) {
    throw Error(ErrorKind::UnknownCountry,
                "unknown country '" + std::string(country) + "'");
  }
  const auto lines = text::read_lines(path);
  WordlistSource source;
  source.country = std::string(country);
  source.origin = path;

  std::unordered_set<std::string> seen;
  bool any_word = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto trimmed = text::trim(lines[n]);
    if (trimmed.empty()) continue;
    any_word = true;
    try {
      auto word = normalize(trimmed);
      if (seen.insert(word.normalized).second) {
        source.entries.push_back(std::move(word.normalized));
      }
    } catch (const Error& e) {
      source.rejects.push_back({std::string(trimmed), e.kind(), e.detail(), n + 1});
    }
  }
  if (!any_word) {
    throw Error(ErrorKind::EmptySource, "'" + path.string() + "' has no words");
  }
  return source;
}

MergedWordlist merge_sources(std::span<const WordlistSource> sources) {
  MergedWordlist merged;
  for (const auto& src : sources) {
    merged.per_country[src.country] += src.entries.size();
    for (const auto& word : src.entries) merged.provenance[word].insert(src.country);
  }
  return merged;
}

OverrideTable OverrideTable::parse(std::string_view textual,
                                   const PhonemeInventory& inventory,
                                   std::string_view origin) {
  OverrideTable table;
  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::InvalidOverride,
                  std::string(origin) + ": expected 'word<TAB>symbols' on line " +
                      std::to_string(line_no),
                  line_no);
    }
    try {
      table.add(fields[0], fields[1], inventory);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  std::string(origin) + " line " + std::to_string(line_no) +
                      ": " + e.detail(),
                  line_no);
    }
  }
  return table;
}

OverrideTable OverrideTable::load(const std::filesystem::path& path,
                                  const PhonemeInventory& inventory) {
  const auto lines = text::read_lines(path);
  return parse(text::join(lines, "\n"), inventory, path.string());
}

void OverrideTable::add(std::string_view word, std::string_view symbols,
                        const PhonemeInventory& inventory) {
  auto key = normalize(word).normalized;
  auto seq = parse_phonemes(symbols, inventory);
  entries_.insert_or_assign(std::move(key), std::move(seq));
}

const PhonemeSequence* OverrideTable::find(std::string_view normalized) const {
  const auto it = entries_.find(normalized);
  return it == entries_.end() ? nullptr : &it->second;
}

PosTable parse_pos_table(std::string_view textual) {
  PosTable table;
  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2 || text::trim(fields[0]).empty() ||
        text::trim(fields[1]).empty()) {
      throw Error(ErrorKind::MalformedPosFile,
                  "expected 'word<TAB>label' on line " + std::to_string(line_no),
                  line_no);
    }
    std::string key;
    try {
      key = normalize(fields[0]).normalized;
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedPosFile,
                  "line " + std::to_string(line_no) + ": " + e.detail(), line_no);
    }
    table.insert_or_assign(std::move(key), std::string(text::trim(fields[1])));
  }
  return table;
}

PosTable load_pos_table(const std::filesystem::path& path) {
  return parse_pos_table(text::join(text::read_lines(path), "\n"));
}

const DictionaryEntry* Dictionary::find(std::string_view entry) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), entry,
      [](const DictionaryEntry& e, std::string_view key) { return e.entry < key; });
  if (it == entries.end() || it->entry != entry) return nullptr;
  return &*it;
}

void attach_pos(std::vector<DictionaryEntry>& entries, const PosTable& table) {
  for (auto& e : entries) {
    const auto it = table.find(e.entry);
    if (it != table.end()) e.pos = it->second;
  }
}

Pipeline::Pipeline(DialectConfig config, const PhonemeInventory& inventory,
                   const ClusterTables& clusters, const IpaTable& ipa,
                   const OverrideTable* overrides)
    : config_(config),
      inventory_(&inventory),
      clusters_(&clusters),
      ipa_(&ipa),
      overrides_(overrides) {}

StressedWord Pipeline::stressed_form(const OrthoWord& word) const {
  const auto parts = split_compound(word);
  std::vector<StressedWord> analysed;
  analysed.reserve(parts.size());
  for (const auto& part : parts) {
    auto syllabified = syllabify(transcribe(part, *inventory_), *clusters_);
    analysed.push_back(assign_stress(std::move(syllabified), part.accent));
  }
  if (analysed.size() == 1) return std::move(analysed.front());

  // Compounds keep the primary stress of their last element.
  StressedWord merged;
  merged.syllabified.source_word = word.normalized;
  for (std::size_t i = 0; i < analysed.size(); ++i) {
    auto& syllables = analysed[i].syllabified.syllables;
    if (i + 1 < analysed.size()) {
      for (auto& s : syllables) s.vowel().stressed = false;
    } else {
      merged.stressed_index =
          merged.syllabified.syllables.size() + analysed[i].stressed_index;
    }
    for (auto& s : syllables) merged.syllabified.syllables.push_back(std::move(s));
  }
  merged.category = classify_stress(merged);
  return merged;
}

Pipeline::Result Pipeline::compile(std::string_view raw) const {
  const OrthoWord ortho = read_word(raw);
  Result result;
  result.entry = ortho.normalized;

  const PhonemeSequence* forced =
      overrides_ ? overrides_->find(ortho.normalized) : nullptr;
  if (forced) {
    PhonemeSequence seq = *forced;
    seq.source_word.clear();
    AccentInfo accent;
    accent.has_accent = std::any_of(seq.phonemes.begin(), seq.phonemes.end(),
                                    [](const Phoneme& p) { return p.stressed; });
    result.base_form = assign_stress(syllabify(seq, *clusters_), accent);
    result.overridden = true;
  } else {
    result.base_form = stressed_form(ortho);
  }
  result.word = transform(result.base_form, config_);
  result.bundle = annotate(result.word, *ipa_);
  return result;
}

BuildResult build_dictionary(const MergedWordlist& words, const DialectConfig& config,
                             const OverrideTable& overrides,
                             const ClusterTables& tables,
                             const BuildOptions& options) {
  const Pipeline pipeline(config, *options.inventory, tables, *options.ipa,
                          &overrides);

  std::vector<const std::pair<const std::string, std::set<std::string>>*> items;
  items.reserve(words.provenance.size());
  for (const auto& item : words.provenance) items.push_back(&item);

  struct Slot {
    std::optional<DictionaryEntry> entry;
    std::optional<Reject> reject;
  };
  std::vector<Slot> slots(items.size());

  auto work = [&](std::size_t i) {
    const auto& [word, countries] = *items[i];
    try {
      auto compiled = pipeline.compile(word);
      DictionaryEntry e;
      e.entry = std::move(compiled.entry);
      e.bundle = std::move(compiled.bundle);
      e.countries = countries;
      e.overridden = compiled.overridden;
      slots[i].entry = std::move(e);
    } catch (const Error& err) {
      slots[i].reject = Reject{word, err.kind(), err.detail(), 0};
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) work(i);
      });
    }
  }

  BuildResult result;
  result.dictionary.config = config;
  result.dictionary.metadata = options.metadata;
  for (auto& slot : slots) {
    if (slot.entry) result.dictionary.entries.push_back(std::move(*slot.entry));
    if (slot.reject) result.errors.push_back(std::move(*slot.reject));
  }
  auto& entries = result.dictionary.entries;
  std::sort(entries.begin(), entries.end(),
            [](const DictionaryEntry& a, const DictionaryEntry& b) {
              return a.entry < b.entry;
            });
  // Distinct raw spellings can normalize to one entry; keep the first.
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const DictionaryEntry& a, const DictionaryEntry& b) {
                              return a.entry == b.entry;
                            }),
                entries.end());
  if (options.pos) attach_pos(entries, *options.pos);
  if (entries.empty()) result.warnings.push_back("0 entries");
  return result;
}

DictionaryStats stats(const Dictionary& dict) {
  DictionaryStats s;
  s.total = dict.entries.size();
  for (const auto& e : dict.entries) {
    for (const auto& c : e.countries) ++s.per_country[c];
    ++s.per_pos[e.pos.empty() ? "_" : e.pos];
  }
  if (!s.per_country.empty()) {
    std::size_t sum = 0;
    for (const auto& [country, count] : s.per_country) sum += count;
    s.mean_per_country =
        static_cast<double>(sum) / static_cast<double>(s.per_country.size());
  }
  return s;
}

void write_reject_report(const std::filesystem::path& path,
                         std::span<const Reject> rejects) {
  auto out = open_output(path);
  for (const auto& r : rejects) {
    out << r.word << '\t' << to_string(r.kind) << '\t' << r.detail << '\n';
  }
  finish_output(out, path);
}

void write_provenance(const std::filesystem::path& path, const Dictionary& dict) {
  auto out = open_output(path);
  out << "# tool_version\t" << dict.metadata.tool_version << '\n';
  out << "# preset\t" << dict.metadata.preset << '\n';
  out << "# config\t" << describe(dict.config) << '\n';
  for (const auto& src : dict.metadata.sources) out << "# source\t" << src << '\n';
  out << "Entry\tCountries\n";
  for (const auto& e : dict.entries) {
    out << e.entry << '\t'
        << text::join(std::vector<std::string>(e.countries.begin(), e.countries.end()),
                      ",")
        << '\n';
  }
  finish_output(out, path);
}

void read_provenance(const std::filesystem::path& path, Dictionary& dict) {
  const auto lines = text::read_lines(path);
  bool header = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto& line = lines[n];
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto fields = text::split(std::string_view(line).substr(2), '\t');
      if (fields.size() < 2) continue;
      if (fields[0] == "tool_version") {
        dict.metadata.tool_version = fields[1];
      } else if (fields[0] == "preset") {
        dict.metadata.preset = fields[1];
      } else if (fields[0] == "config") {
        for (const auto& kv : text::split_ws(fields[1])) {
          const auto eq = kv.find('=');
          if (eq != std::string::npos) {
            set_field(dict.config, kv.substr(0, eq), kv.substr(eq + 1));
          }
        }
      } else if (fields[0] == "source") {
        std::vector<std::string> rest(fields.begin() + 1, fields.end());
        dict.metadata.sources.push_back(text::join(rest, "\t"));
      }
      continue;
    }
    if (!header) {
      if (line != "Entry\tCountries") {
        throw Error(ErrorKind::HeaderMismatch,
                    "'" + path.string() + "' is not a provenance file", n + 1);
      }
      header = true;
      continue;
    }
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::MalformedRow,
                  "line " + std::to_string(n + 1) + " of '" + path.string() +
                      "' has " + std::to_string(fields.size()) + " columns",
                  n + 1);
    }
    const auto it = std::lower_bound(
        dict.entries.begin(), dict.entries.end(), fields[0],
        [](const DictionaryEntry& e, const std::string& key) { return e.entry < key; });
    if (it == dict.entries.end() || it->entry != fields[0]) continue;
    it->countries.clear();
    for (const auto& c : text::split(fields[1], ',')) {
      if (!c.empty()) it->countries.insert(c);
    }
  }
}

}  // namespace fonodict
