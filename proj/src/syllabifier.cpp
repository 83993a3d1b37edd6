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

#include "fonodict/syllabifier.hpp"

#include <optional>

#include "fonodict/default_data.hpp"
#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

std::string symbols_of(const std::vector<Phoneme>& ph, std::size_t begin,
                       std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(ph[i].symbol);
  return out;
}

[[noreturn]] void fail_cluster(const PhonemeSequence& seq, std::size_t begin,
                               std::size_t end, std::string_view where) {
  throw Error(ErrorKind::UnsyllabifiableCluster,
              "cannot split " + std::string(where) + " cluster '" +
                  symbols_of(seq.phonemes, begin, end) + "' in '" +
                  render_compact(seq.phonemes) + "'");
}

}  // namespace

std::vector<Phoneme> Syllable::phonemes() const {
  std::vector<Phoneme> out;
  out.reserve(onset.size() + nucleus.size() + coda.size());
  out.insert(out.end(), onset.begin(), onset.end());
  out.insert(out.end(), nucleus.begin(), nucleus.end());
  out.insert(out.end(), coda.begin(), coda.end());
  return out;
}

const Phoneme& Syllable::vowel() const {
  for (const auto& p : nucleus) {
    if (p.is_vowel()) return p;
  }
  throw Error(ErrorKind::NoNucleus, "syllable without a vowel");
}

Phoneme& Syllable::vowel() {
  return const_cast<Phoneme&>(static_cast<const Syllable&>(*this).vowel());
}

std::vector<Phoneme> SyllabifiedWord::phonemes() const {
  std::vector<Phoneme> out;
  for (const auto& s : syllables) {
    auto part = s.phonemes();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

const ClusterTables& ClusterTables::defaults() {
  static const ClusterTables tables =
      parse(default_data::clusters(), "<default clusters>");
  return tables;
}

ClusterTables ClusterTables::parse(std::string_view textual,
                                   std::string_view origin) {
  enum class Section { None, Onsets, Codas };
  ClusterTables tables;
  Section section = Section::None;
  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto trimmed = text::trim(lines[n]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (trimmed == "ONSETS") {
      section = Section::Onsets;
      continue;
    }
    if (trimmed == "CODAS") {
      section = Section::Codas;
      continue;
    }
    std::string pair;
    for (const auto& f : text::split_ws(trimmed)) pair += f;
    const bool ascii = pair.size() == 2 &&
                       static_cast<unsigned char>(pair[0]) < 0x80 &&
                       static_cast<unsigned char>(pair[1]) < 0x80;
    if (section == Section::None || !ascii ||
        class_of(pair[0]) != PhonemeClass::Consonant ||
        class_of(pair[1]) != PhonemeClass::Consonant) {
      throw Error(ErrorKind::MalformedTable,
                  std::string(origin) + ": bad cluster entry '" +
                      std::string(trimmed) + "' on line " +
                      std::to_string(line_no),
                  line_no);
    }
    if (section == Section::Onsets) {
      tables.add_onset(pair[0], pair[1]);
    } else {
      tables.add_coda(pair[0], pair[1]);
    }
  }
  return tables;
}

ClusterTables ClusterTables::load(const std::filesystem::path& path) {
  const auto lines = text::read_lines(path);
  return parse(text::join(lines, "\n"), path.string());
}

bool is_legal_onset(char first, char second, const ClusterTables& tables) {
  return tables.legal_onset(first, second);
}

bool is_legal_coda(char first, char second, const ClusterTables& tables) {
  return tables.legal_coda(first, second);
}

SyllabifiedWord syllabify(const PhonemeSequence& seq,
                          const ClusterTables& tables) {
  const auto& ph = seq.phonemes;
  const std::size_t n = ph.size();

  // Nucleus spans [begin, end) around each vowel.
  struct Span {
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Span> nuclei;
  for (std::size_t i = 0; i < n; ++i) {
    if (ph[i].is_vowel()) nuclei.push_back({i, i + 1});
  }
  if (nuclei.empty()) {
    throw Error(ErrorKind::NoNucleus,
                "no vowel in '" + render_compact(ph) + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ph[i].is_semivowel()) continue;
    bool attached = false;
    if (i + 1 < n && ph[i + 1].is_vowel()) {
      for (auto& s : nuclei) {
        if (s.begin == i + 1) {
          s.begin = i;
          attached = true;
        }
      }
    } else if (i > 0 && ph[i - 1].is_vowel()) {
      for (auto& s : nuclei) {
        if (s.end == i) {
          s.end = i + 1;
          attached = true;
        }
      }
    }
    if (!attached) {
      throw Error(ErrorKind::UnsyllabifiableCluster,
                  "semivowel '" + std::string(1, ph[i].symbol) +
                      "' not adjacent to a vowel in '" + render_compact(ph) +
                      "'");
    }
  }

  auto legal_edge = [&](std::size_t begin, std::size_t end, bool onset) {
    const std::size_t len = end - begin;
    if (len > 2) return false;
    if (len < 2) return true;
    return onset ? tables.legal_onset(ph[begin].symbol, ph[begin + 1].symbol)
                 : tables.legal_coda(ph[begin].symbol, ph[begin + 1].symbol);
  };

  // Boundary positions: syllable k spans [cut[k], cut[k + 1]).
  std::vector<std::size_t> cut(nuclei.size() + 1);
  cut.front() = 0;
  cut.back() = n;
  if (!legal_edge(0, nuclei.front().begin, true)) {
    fail_cluster(seq, 0, nuclei.front().begin, "word-initial");
  }
  if (!legal_edge(nuclei.back().end, n, false)) {
    fail_cluster(seq, nuclei.back().end, n, "word-final");
  }
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const std::size_t left = nuclei[k].end;
    const std::size_t right = nuclei[k + 1].begin;
    const std::size_t len = right - left;
    std::optional<std::size_t> boundary;
    for (std::size_t onset = std::min<std::size_t>(len, 2) + 1; onset-- > 0;) {
      const std::size_t b = right - onset;
      if (legal_edge(b, right, true) && legal_edge(left, b, false)) {
        boundary = b;
        break;
      }
    }
    if (!boundary) fail_cluster(seq, left, right, "medial");
    cut[k + 1] = *boundary;
  }

  SyllabifiedWord word;
  word.source_word = seq.source_word;
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    Syllable s;
    s.onset.assign(ph.begin() + cut[k], ph.begin() + nuclei[k].begin);
    s.nucleus.assign(ph.begin() + nuclei[k].begin, ph.begin() + nuclei[k].end);
    s.coda.assign(ph.begin() + nuclei[k].end, ph.begin() + cut[k + 1]);
    word.syllables.push_back(std::move(s));
  }
  return word;
}

}  // namespace fonodict
