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

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fonodict/annotate.hpp"
#include "fonodict/dialect.hpp"
#include "fonodict/error.hpp"
#include "fonodict/export.hpp"
#include "fonodict/lexicon.hpp"
#include "fonodict/text.hpp"

namespace fs = std::filesystem;
using namespace fonodict;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct DialectFlags {
  std::vector<std::string> presets;
  std::string presets_file;
  std::optional<std::string> mark_stress;
  std::optional<std::string> lenition;
  std::optional<std::string> semivowels;
  std::optional<std::string> ll;
  std::optional<std::string> theta;
  std::optional<std::string> velar;
  std::optional<std::string> s_debuccalization;
  std::optional<std::string> lambdacism;
};

void add_dialect_flags(CLI::App* cmd, DialectFlags& f) {
  const auto on_off = CLI::IsMember({"on", "off"});
  cmd->add_option("--preset", f.presets, "Dialect preset(s); several must agree")
      ->delimiter(',');
  cmd->add_option("--presets-file", f.presets_file, "Preset table to use instead of the built-in one")
      ->check(CLI::ExistingFile);
  cmd->add_option("--mark-stress", f.mark_stress)->check(on_off);
  cmd->add_option("--lenition", f.lenition)->check(on_off);
  cmd->add_option("--semivowels", f.semivowels)->check(on_off);
  cmd->add_option("--ll", f.ll)->check(CLI::IsMember({"lateral", "fricative"}));
  cmd->add_option("--theta", f.theta)->check(CLI::IsMember({"distincion", "seseo"}));
  cmd->add_option("--velar", f.velar)->check(CLI::IsMember({"x", "h"}));
  cmd->add_option("--s-debuccalization", f.s_debuccalization)->check(on_off);
  cmd->add_option("--lambdacism", f.lambdacism)->check(on_off);
}

DialectConfig resolve_config(const DialectFlags& f) {
  DialectConfig cfg;
  if (!f.presets.empty()) {
    if (f.presets_file.empty()) {
      cfg = resolve_presets(f.presets);
    } else {
      cfg = resolve_presets(f.presets, PresetTable::load(f.presets_file));
    }
  }
  auto apply = [&](const std::optional<std::string>& v, std::string_view key) {
    if (v) set_field(cfg, key, *v);
  };
  apply(f.mark_stress, "mark_stress");
  apply(f.lenition, "lenition");
  apply(f.semivowels, "semivowels");
  apply(f.ll, "ll_realization");
  apply(f.theta, "theta");
  apply(f.velar, "velar_fricative");
  apply(f.s_debuccalization, "s_debuccalization");
  apply(f.lambdacism, "lambdacism");
  return cfg;
}

struct Tables {
  PhonemeInventory inventory = PhonemeInventory::defaults();
  ClusterTables clusters = ClusterTables::defaults();
  IpaTable ipa = IpaTable::defaults();
};

struct TableFlags {
  std::string inventory;
  std::string clusters;
  std::string ipa;
};

void add_table_flags(CLI::App* cmd, TableFlags& f) {
  cmd->add_option("--inventory", f.inventory, "Grapheme-to-phoneme rule file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--clusters", f.clusters, "Legal onset/coda cluster table")
      ->check(CLI::ExistingFile);
  cmd->add_option("--ipa-table", f.ipa, "Symbol-to-IPA table (overlays the default)")
      ->check(CLI::ExistingFile);
}

Tables load_tables(const TableFlags& f) {
  Tables t;
  if (!f.inventory.empty()) t.inventory = PhonemeInventory::load(f.inventory);
  if (!f.clusters.empty()) t.clusters = ClusterTables::load(f.clusters);
  if (!f.ipa.empty()) t.ipa = IpaTable::load(f.ipa);
  return t;
}

// "country:path" or a bare path (country "generic").
std::pair<std::string, fs::path> split_source(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon != std::string::npos && colon > 0) {
    const std::string country = arg.substr(0, colon);
    if (is_known_country(country)) return {country, arg.substr(colon + 1)};
    if (!fs::exists(arg)) {
      throw Error(ErrorKind::UnknownCountry, "unknown country '" + country + "'");
    }
  }
  return {"generic", arg};
}

struct BuildArgs {
  std::vector<std::string> sources;
  DialectFlags dialect;
  TableFlags tables;
  std::string pos_table;
  std::string overrides;
  std::string format = "espada-tsv";
  std::string out;
  unsigned jobs = 1;
};

int run_build(const BuildArgs& a) {
  const DialectConfig cfg = resolve_config(a.dialect);
  const Tables tables = load_tables(a.tables);
  const auto format = parse_format(a.format);

  std::vector<WordlistSource> sources;
  std::vector<Reject> rejects;
  BuildOptions options;
  options.jobs = a.jobs;
  options.inventory = &tables.inventory;
  options.ipa = &tables.ipa;
  options.metadata.preset = a.dialect.presets.empty()
                                ? std::string("custom")
                                : text::join(a.dialect.presets, ",");
  for (const auto& arg : a.sources) {
    const auto [country, path] = split_source(arg);
    try {
      sources.push_back(load_wordlist(path, country));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptySource) throw;
      std::cerr << "warning: " << path.string() << ": no words\n";
      continue;
    }
    options.metadata.sources.push_back(country + "\t" + path.filename().string());
    for (const auto& r : sources.back().rejects) {
      rejects.push_back(r);
      std::cerr << path.string() << ":" << r.line << ": " << to_string(r.kind)
                << ": " << r.detail << '\n';
    }
  }

  OverrideTable overrides;
  if (!a.overrides.empty()) overrides = OverrideTable::load(a.overrides, tables.inventory);
  PosTable pos;
  if (!a.pos_table.empty()) {
    pos = load_pos_table(a.pos_table);
    options.pos = &pos;
  }

  const auto merged = merge_sources(sources);
  auto result = build_dictionary(merged, cfg, overrides, tables.clusters, options);
  for (const auto& r : result.errors) {
    std::cerr << "rejected '" << r.word << "': " << to_string(r.kind) << ": "
              << r.detail << '\n';
    rejects.push_back(r);
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  const fs::path out(a.out);
  export_dictionary(result.dictionary, *format, out, tables.ipa);
  write_reject_report(out.string() + ".rejects.tsv", rejects);
  write_provenance(out.string() + ".provenance.tsv", result.dictionary);

  std::cout << "entries\t" << result.dictionary.entries.size() << '\n'
            << "rejected\t" << rejects.size() << '\n'
            << "sources\t" << sources.size() << '\n';
  return kExitOk;
}

struct LookupArgs {
  std::string word;
  DialectFlags dialect;
  TableFlags tables;
  std::string overrides;
};

int run_lookup(const LookupArgs& a) {
  const DialectConfig cfg = resolve_config(a.dialect);
  const Tables tables = load_tables(a.tables);
  OverrideTable overrides;
  if (!a.overrides.empty()) overrides = OverrideTable::load(a.overrides, tables.inventory);
  const Pipeline pipeline(cfg, tables.inventory, tables.clusters, tables.ipa, &overrides);
  const auto r = pipeline.compile(a.word);

  std::vector<std::string> syllables = text::split_ws(r.bundle.ipa);
  std::vector<std::string> tags;
  for (const auto& t : r.bundle.positions) {
    tags.push_back(std::string(1, t.symbol) + ":" + std::to_string(t.syllable_index) +
                   ":" + std::string(to_string(t.slot)));
  }
  std::cout << "entry\t" << r.entry << '\n'
            << "base\t" << r.bundle.base << '\n'
            << "phonotactics\t" << r.bundle.phonotactics << '\n'
            << "ipa\t" << r.bundle.ipa << '\n'
            << "ipa_flat\t" << r.bundle.ipa_flat << '\n'
            << "syllables\t" << text::join(syllables, "|") << '\n'
            << "stress\t" << to_string(r.word.category) << '\n'
            << "positions\t" << text::join(tags, " ") << '\n';
  return kExitOk;
}

struct ConvertArgs {
  std::string in;
  std::string from = "espada-tsv";
  std::string to;
  std::string out;
  std::string ipa;
};

int run_convert(const ConvertArgs& a) {
  if (a.from != "espada-tsv") {
    std::cerr << "error: only espada-tsv can be imported\n";
    return kExitUsage;
  }
  const IpaTable ipa = a.ipa.empty() ? IpaTable::defaults() : IpaTable::load(a.ipa);
  const Dictionary dict = load_espada_tsv(a.in);
  export_dictionary(dict, *parse_format(a.to), fs::path(a.out), ipa);
  std::cout << "entries\t" << dict.entries.size() << '\n';
  return kExitOk;
}

int run_stats(const std::string& in) {
  Dictionary dict = load_espada_tsv(in);
  const fs::path sidecar = in + ".provenance.tsv";
  if (fs::exists(sidecar)) read_provenance(sidecar, dict);
  const auto s = stats(dict);
  std::cout << "total\t" << s.total << '\n';
  for (const auto& [country, n] : s.per_country) {
    std::cout << "country\t" << country << '\t' << n << '\n';
  }
  std::ostringstream mean;
  mean << std::fixed << std::setprecision(2) << s.mean_per_country;
  std::cout << "mean_per_country\t" << mean.str() << '\n';
  for (const auto& [pos, n] : s.per_pos) std::cout << "pos\t" << pos << '\t' << n << '\n';
  return kExitOk;
}

int run_presets(const std::string& file) {
  const PresetTable table = file.empty() ? PresetTable::defaults() : PresetTable::load(file);
  for (const auto& p : table.presets()) {
    std::vector<std::string> countries(p.countries.begin(), p.countries.end());
    std::cout << p.name << '\t' << describe(p.config) << '\t'
              << text::join(countries, ",") << '\n';
  }
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoFailure:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

std::vector<std::string> format_names() {
  return {"espada-tsv", "aligner-dict", "taln-gpa", "fasealign", "taln-ipa"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile Spanish wordlists into annotated pronunciation dictionaries"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kToolVersion));

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Compile wordlists into a dictionary");
  build_cmd->add_option("sources", build.sources, "Wordlists, optionally as country:path")
      ->required();
  add_dialect_flags(build_cmd, build.dialect);
  add_table_flags(build_cmd, build.tables);
  build_cmd->add_option("--pos-table", build.pos_table, "word<TAB>POS file")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--overrides", build.overrides, "word<TAB>symbols file")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--format", build.format)->check(CLI::IsMember(format_names()));
  build_cmd->add_option("--out,-o", build.out, "Output dictionary path")->required();
  build_cmd->add_option("--jobs,-j", build.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  LookupArgs lookup;
  auto* lookup_cmd = app.add_subcommand("lookup", "Annotate a single word");
  lookup_cmd->add_option("word", lookup.word)->required();
  add_dialect_flags(lookup_cmd, lookup.dialect);
  add_table_flags(lookup_cmd, lookup.tables);
  lookup_cmd->add_option("--overrides", lookup.overrides)->check(CLI::ExistingFile);

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Re-export an espada-tsv dictionary");
  convert_cmd->add_option("in", convert.in)->required();
  convert_cmd->add_option("--from", convert.from)->check(CLI::IsMember(format_names()));
  convert_cmd->add_option("--to", convert.to)->required()->check(CLI::IsMember(format_names()));
  convert_cmd->add_option("--out,-o", convert.out)->required();
  convert_cmd->add_option("--ipa-table", convert.ipa)->check(CLI::ExistingFile);

  std::string stats_in;
  auto* stats_cmd = app.add_subcommand("stats", "Summarise an espada-tsv dictionary");
  stats_cmd->add_option("in", stats_in)->required();

  std::string presets_file;
  auto* presets_cmd = app.add_subcommand("presets", "List dialect presets");
  presets_cmd->add_option("--presets-file", presets_file)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*lookup_cmd) return run_lookup(lookup);
    if (*convert_cmd) return run_convert(convert);
    if (*stats_cmd) return run_stats(stats_in);
    if (*presets_cmd) return run_presets(presets_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
