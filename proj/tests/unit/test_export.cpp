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

#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "fonodict/error.hpp"
#include "fonodict/export.hpp"

using namespace fonodict;
using testing_support::TempDir;

namespace {

std::string pron(std::string_view word, ExportFormat format) {
  const Pipeline pipeline{DialectConfig{}};
  return translate_pronunciation(pipeline.compile(word).bundle.base, format);
}

std::string slurp(const std::filesystem::path& p) {
  return text::join(text::read_lines(p), "\n");
}

Dictionary golden() {
  return load_espada_tsv(testing_support::data_dir() / "golden.tsv");
}

}  // namespace

TEST_CASE("format names") {
  for (auto f : {ExportFormat::EspadaTsv, ExportFormat::AlignerDict, ExportFormat::TalnGpa,
                 ExportFormat::FaseAlign, ExportFormat::TalnIpa}) {
    CHECK(parse_format(to_string(f)) == f);
  }
  CHECK_FALSE(parse_format("cmudict").has_value());
}

TEST_CASE("aligner emulations") {
  CHECK(pron("zúñiga", ExportFormat::TalnGpa) == "T u n~ i G a");
  CHECK(pron("zúñiga", ExportFormat::FaseAlign) == "s u N Y i g a");
  CHECK(pron("guasave", ExportFormat::TalnGpa) == "g w a s a V e");
  CHECK(pron("guasave", ExportFormat::FaseAlign) == "g u a s a b e");
  CHECK(pron("torreón", ExportFormat::FaseAlign) == "t o R e o n");
  CHECK(pron("caro", ExportFormat::TalnGpa) == "k a rf o");
  CHECK(pron("campeche", ExportFormat::FaseAlign) == "k a m p e C H e");
  CHECK(pron("jamón", ExportFormat::TalnGpa) == "X a m o n");
  CHECK(pron("mesa", ExportFormat::AlignerDict) == "m E s a");
  CHECK(pron("torreón", ExportFormat::TalnIpa) == "t o r e ˈo n");
}

TEST_CASE("fasealign output has no lenition, glides or stress") {
  const Pipeline pipeline{DialectConfig{}};
  for (const auto& word : testing_support::load_corpus()) {
    const auto out = translate_pronunciation(pipeline.compile(word).bundle.base,
                                             ExportFormat::FaseAlign);
    for (char c : std::string("BDGjwAEIOU")) {
      CHECK_MESSAGE(out.find(c) == std::string::npos, word << " -> " << out);
    }
  }
}

TEST_CASE("every default symbol translates") {
  for (char c : std::string("ptkbdgBDGfsTxhCmnNlLyrRieaoujw")) {
    CHECK(SymbolTranslation::taln_gpa().find(c));
    CHECK(SymbolTranslation::fase_align().find(c));
    CHECK(IpaTable::defaults().find(c));
  }
  try {
    translate_pronunciation("m E Q a", ExportFormat::TalnGpa);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UntranslatableSymbol);
  }
}

TEST_CASE("golden five-word dictionary") {
  const auto dict = golden();
  CHECK(dict.entries.size() == 5);
  std::ostringstream out;
  export_dictionary(dict, ExportFormat::EspadaTsv, out);
  CHECK(out.str() == slurp(testing_support::data_dir() / "golden.tsv") + "\n");
  CHECK(dict.entries[4].bundle.ipa_flat == "mesa");
}

TEST_CASE("round trip and line counts") {
  TempDir dir("export");
  const auto dict = golden();
  export_dictionary(dict, ExportFormat::EspadaTsv, dir / "a.tsv");
  export_dictionary(load_espada_tsv(dir / "a.tsv"), ExportFormat::EspadaTsv, dir / "b.tsv");
  CHECK(slurp(dir / "a.tsv") == slurp(dir / "b.tsv"));
  export_dictionary(dict, ExportFormat::AlignerDict, dir / "c.dict");
  const auto lines = text::read_lines(dir / "c.dict");
  CHECK(lines.size() == dict.entries.size());
  CHECK(lines[0] == "aarón\ta r O n");
  CHECK_THROWS_AS(export_dictionary(dict, ExportFormat::AlignerDict,
                                    dir / "no" / "such" / "dir.txt"),
                  Error);
}

TEST_CASE("import errors") {
  try {
    import_espada_tsv(std::string_view("Entry\tPOS\n"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HeaderMismatch);
    CHECK(e.position() == std::optional<std::size_t>(1));
  }
  try {
    load_espada_tsv(testing_support::data_dir() / "malformed.tsv");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedRow);
    CHECK(e.position() == std::optional<std::size_t>(3));
  }
}
