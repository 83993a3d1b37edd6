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
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fonodict/annotate.hpp"
#include "fonodict/dialect.hpp"
#include "fonodict/error.hpp"
#include "fonodict/g2p.hpp"
#include "fonodict/orthography.hpp"
#include "fonodict/syllabifier.hpp"

namespace fonodict {

inline constexpr std::string_view kToolVersion = "0.1.0";

// A word that could not be ingested or compiled.
struct Reject {
  std::string word;
  ErrorKind kind = ErrorKind::IllegalCharacter;
  std::string detail;
  std::size_t line = 0;  // 0 when not file-based

  bool operator==(const Reject&) const = default;
};

struct WordlistSource {
  std::string country;
  std::vector<std::string> entries;  // normalized, deduplicated, file order
  std::filesystem::path origin;
  std::vector<Reject> rejects;
};

// One word per line, UTF-8. Blank lines are skipped and malformed words are
// collected into `rejects`. Throws Error(FileUnreadable), Error(EmptySource)
// for a file with no words at all, and Error(UnknownCountry).
WordlistSource load_wordlist(const std::filesystem::path& path,
                             std::string_view country = "generic");

struct MergedWordlist {
  std::map<std::string, std::set<std::string>> provenance;  // word -> countries
  std::map<std::string, std::size_t> per_country;            // deduplicated counts
};

MergedWordlist merge_sources(std::span<const WordlistSource> sources);

// Word -> explicit phoneme string. File format: `word<TAB>symbols`.
class OverrideTable {
 public:
  static OverrideTable parse(std::string_view text,
                             const PhonemeInventory& inventory =
                                 PhonemeInventory::defaults(),
                             std::string_view origin = "<overrides>");
  static OverrideTable load(const std::filesystem::path& path,
                            const PhonemeInventory& inventory =
                                PhonemeInventory::defaults());

  // Throws Error(InvalidOverride) if a symbol is outside the inventory.
  void add(std::string_view word, std::string_view symbols,
           const PhonemeInventory& inventory = PhonemeInventory::defaults());
  const PhonemeSequence* find(std::string_view normalized) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, PhonemeSequence, std::less<>> entries_;
};

using PosTable = std::map<std::string, std::string, std::less<>>;

// Two tab-separated columns per line: word, label. Throws
// Error(MalformedPosFile) with the line number.
PosTable parse_pos_table(std::string_view text);
PosTable load_pos_table(const std::filesystem::path& path);

struct DictionaryEntry {
  std::string entry;
  std::string pos;
  AnnotationBundle bundle;
  std::set<std::string> countries;
  bool overridden = false;

  bool operator==(const DictionaryEntry&) const = default;
};

struct BuildMetadata {
  std::vector<std::string> sources;  // "country<TAB>path"
  std::string preset;
  std::string tool_version{kToolVersion};

  bool operator==(const BuildMetadata&) const = default;
};

// Entries sorted by the code points of `entry`.
struct Dictionary {
  std::vector<DictionaryEntry> entries;
  DialectConfig config;
  BuildMetadata metadata;

  const DictionaryEntry* find(std::string_view entry) const;
};

void attach_pos(std::vector<DictionaryEntry>& entries, const PosTable& table);

// The word-level compiler: orthography, g2p, syllabification, stress, dialect
// rewrites and annotation. Holds non-owning references to its tables.
class Pipeline {
 public:
  explicit Pipeline(DialectConfig config,
                    const PhonemeInventory& inventory = PhonemeInventory::defaults(),
                    const ClusterTables& clusters = ClusterTables::defaults(),
                    const IpaTable& ipa = IpaTable::defaults(),
                    const OverrideTable* overrides = nullptr);

  struct Result {
    std::string entry;        // normalized spelling
    StressedWord base_form;   // before dialect rewrites
    StressedWord word;        // after dialect rewrites
    AnnotationBundle bundle;
    bool overridden = false;
  };

  // Throws the word-level error of whichever stage fails.
  Result compile(std::string_view raw) const;

  // Everything up to and including stress assignment for a normalized word.
  StressedWord stressed_form(const OrthoWord& word) const;

  const DialectConfig& config() const { return config_; }

 private:
  DialectConfig config_;
  const PhonemeInventory* inventory_;
  const ClusterTables* clusters_;
  const IpaTable* ipa_;
  const OverrideTable* overrides_;
};

struct BuildOptions {
  const PhonemeInventory* inventory = &PhonemeInventory::defaults();
  const IpaTable* ipa = &IpaTable::defaults();
  const PosTable* pos = nullptr;
  unsigned jobs = 1;
  BuildMetadata metadata;
};

struct BuildResult {
  Dictionary dictionary;
  std::vector<Reject> errors;
  std::vector<std::string> warnings;
};

// Per-word failures land in `errors`; the build itself never aborts on a
// word. Output order is independent of `jobs`.
BuildResult build_dictionary(const MergedWordlist& words, const DialectConfig& config,
                             const OverrideTable& overrides,
                             const ClusterTables& tables,
                             const BuildOptions& options = {});

struct DictionaryStats {
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_country;
  std::map<std::string, std::size_t> per_pos;  // empty POS counted as "_"
  double mean_per_country = 0.0;
};

DictionaryStats stats(const Dictionary& dict);

// word<TAB>kind<TAB>detail, one line per reject.
void write_reject_report(const std::filesystem::path& path,
                         std::span<const Reject> rejects);

// Sidecar next to an exported dictionary recording provenance and build
// settings. Lines: `# key<TAB>value` metadata, a header `Entry<TAB>Countries`,
// then one row per entry with comma-separated countries.
void write_provenance(const std::filesystem::path& path, const Dictionary& dict);
// Fills countries and metadata into `dict` for matching entries.
void read_provenance(const std::filesystem::path& path, Dictionary& dict);

}  // namespace fonodict
