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

#include "fonodict/export.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

std::map<char, std::string> identity_table() {
  std::map<char, std::string> table;
  for (char c : kPhonemeAlphabet) table[c] = std::string(1, c);
  return table;
}

struct BaseSymbol {
  char symbol;
  bool stressed;
};

BaseSymbol split_stress(const std::string& token) {
  if (token.size() != 1) {
    throw Error(ErrorKind::UntranslatableSymbol,
                "'" + token + "' is not a single-character symbol");
  }
  const char c = token[0];
  if (c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U') {
    return {static_cast<char>(c - 'A' + 'a'), true};
  }
  return {c, false};
}

[[noreturn]] void untranslatable(char symbol, ExportFormat format) {
  throw Error(ErrorKind::UntranslatableSymbol,
              "symbol '" + std::string(1, symbol) + "' has no " +
                  std::string(to_string(format)) + " translation");
}

}  // namespace

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::EspadaTsv: return "espada-tsv";
    case ExportFormat::AlignerDict: return "aligner-dict";
    case ExportFormat::TalnGpa: return "taln-gpa";
    case ExportFormat::FaseAlign: return "fasealign";
    case ExportFormat::TalnIpa: return "taln-ipa";
  }
  return "unknown";
}

std::optional<ExportFormat> parse_format(std::string_view name) {
  for (auto f : {ExportFormat::EspadaTsv, ExportFormat::AlignerDict,
                 ExportFormat::TalnGpa, ExportFormat::FaseAlign,
                 ExportFormat::TalnIpa}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

const SymbolTranslation& SymbolTranslation::taln_gpa() {
  static const SymbolTranslation t = [] {
    auto table = identity_table();
    table['N'] = "n~";
    table['C'] = "tS";
    table['B'] = "V";
    table['R'] = "r";
    table['r'] = "rf";
    table['x'] = "X";
    return SymbolTranslation(std::move(table));
  }();
  return t;
}

const SymbolTranslation& SymbolTranslation::fase_align() {
  static const SymbolTranslation t = [] {
    auto table = identity_table();
    table['T'] = "s";
    table['C'] = "C H";
    table['N'] = "N Y";
    table['L'] = "y";
    table['B'] = "b";
    table['D'] = "d";
    table['G'] = "g";
    table['j'] = "i";
    table['w'] = "u";
    table['x'] = "h";
    return SymbolTranslation(std::move(table));
  }();
  return t;
}

const std::string* SymbolTranslation::find(char symbol) const {
  const auto it = table_.find(symbol);
  return it == table_.end() ? nullptr : &it->second;
}

std::string translate_pronunciation(std::string_view base, ExportFormat format,
                                    const IpaTable& ipa) {
  if (format == ExportFormat::EspadaTsv || format == ExportFormat::AlignerDict) {
    return std::string(base);
  }
  std::vector<std::string> out;
  for (const auto& token : text::split_ws(base)) {
    const auto [symbol, stressed] = split_stress(token);
    switch (format) {
      case ExportFormat::TalnGpa:
      case ExportFormat::FaseAlign: {
        const auto& table = format == ExportFormat::TalnGpa
                                ? SymbolTranslation::taln_gpa()
                                : SymbolTranslation::fase_align();
        const std::string* t = table.find(symbol);
        if (!t) untranslatable(symbol, format);
        out.push_back(*t);
        break;
      }
      case ExportFormat::TalnIpa: {
        const std::string* t = ipa.find(symbol);
        if (!t) untranslatable(symbol, format);
        out.push_back(stressed ? std::string(kIpaStressMark) + *t : *t);
        break;
      }
      default:
        break;
    }
  }
  return text::join(out, " ");
}

void export_dictionary(const Dictionary& dict, ExportFormat format,
                       std::ostream& out, const IpaTable& ipa) {
  if (format == ExportFormat::EspadaTsv) {
    out << kEspadaHeader << '\n';
    for (const auto& e : dict.entries) {
      out << e.entry << '\t' << e.pos << '\t' << e.bundle.base << '\t'
          << e.bundle.phonotactics << '\t' << e.bundle.ipa << '\n';
    }
    return;
  }
  for (const auto& e : dict.entries) {
    out << e.entry << '\t' << translate_pronunciation(e.bundle.base, format, ipa)
        << '\n';
  }
}

void export_dictionary(const Dictionary& dict, ExportFormat format,
                       const std::filesystem::path& path, const IpaTable& ipa) {
  std::ostringstream buffer;
  export_dictionary(dict, format, buffer, ipa);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write '" + path.string() + "'");
  const auto data = buffer.str();
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::IoFailure, "write failed on '" + path.string() + "'");
}

Dictionary import_espada_tsv(std::string_view contents) {
  auto lines = text::split(contents, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kEspadaHeader) {
    throw Error(ErrorKind::HeaderMismatch,
                "expected header '" + std::string(kEspadaHeader) + "'", 1);
  }
  Dictionary dict;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto fields = text::split(lines[n], '\t');
    if (fields.size() != 5) {
      throw Error(ErrorKind::MalformedRow,
                  "line " + std::to_string(n + 1) + " has " +
                      std::to_string(fields.size()) + " columns, expected 5",
                  n + 1);
    }
    DictionaryEntry e;
    e.entry = fields[0];
    e.pos = fields[1];
    e.bundle.base = fields[2];
    e.bundle.phonotactics = fields[3];
    e.bundle.ipa = fields[4];
    for (char c : e.bundle.ipa) {
      if (c != ' ') e.bundle.ipa_flat.push_back(c);
    }
    dict.entries.push_back(std::move(e));
  }
  return dict;
}

Dictionary load_espada_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileUnreadable, "cannot open '" + path.string() + "'");
  const std::string contents((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return import_espada_tsv(std::string_view(contents));
}

}  // namespace fonodict
