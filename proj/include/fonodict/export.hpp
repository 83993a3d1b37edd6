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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fonodict/annotate.hpp"
#include "fonodict/lexicon.hpp"

namespace fonodict {

enum class ExportFormat { EspadaTsv, AlignerDict, TalnGpa, FaseAlign, TalnIpa };

// CLI names: espada-tsv, aligner-dict, taln-gpa, fasealign, taln-ipa.
std::string_view to_string(ExportFormat format);
std::optional<ExportFormat> parse_format(std::string_view name);

inline constexpr std::string_view kEspadaHeader =
    "Entry\tPOS\tBase\tPhonotactics\tIPA";

// Internal symbol to target-format token(s), total over the default alphabet.
// Multi-token targets are space separated ("C H").
class SymbolTranslation {
 public:
  static const SymbolTranslation& taln_gpa();
  static const SymbolTranslation& fase_align();

  const std::string* find(char symbol) const;
  const std::map<char, std::string>& entries() const { return table_; }

 private:
  explicit SymbolTranslation(std::map<char, std::string> table)
      : table_(std::move(table)) {}
  std::map<char, std::string> table_;
};

// Translates a space-separated base annotation ("m E s a") into the
// pronunciation column of `format`. Throws Error(UntranslatableSymbol).
std::string translate_pronunciation(std::string_view base, ExportFormat format,
                                    const IpaTable& ipa = IpaTable::defaults());

void export_dictionary(const Dictionary& dict, ExportFormat format,
                       std::ostream& out,
                       const IpaTable& ipa = IpaTable::defaults());

// Writes with LF line endings and no BOM. Throws Error(IoFailure).
void export_dictionary(const Dictionary& dict, ExportFormat format,
                       const std::filesystem::path& path,
                       const IpaTable& ipa = IpaTable::defaults());

// Reads an EspadaTsv file, trusting its annotations. Entry order is kept as
// in the file so that exporting again reproduces it byte for byte. Throws
// Error(HeaderMismatch) and Error(MalformedRow) with the 1-based line number.
Dictionary import_espada_tsv(std::string_view contents);
Dictionary load_espada_tsv(const std::filesystem::path& path);

}  // namespace fonodict
