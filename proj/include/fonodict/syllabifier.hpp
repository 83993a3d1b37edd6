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
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "fonodict/phoneme.hpp"

namespace fonodict {

// Onset: up to two consonants. Nucleus: (S)V(S). Coda: up to two consonants.
struct Syllable {
  std::vector<Phoneme> onset;
  std::vector<Phoneme> nucleus;
  std::vector<Phoneme> coda;

  std::vector<Phoneme> phonemes() const;
  // The single Vowel of the nucleus.
  const Phoneme& vowel() const;
  Phoneme& vowel();

  bool operator==(const Syllable&) const = default;
};

struct SyllabifiedWord {
  std::vector<Syllable> syllables;
  std::string source_word;

  std::vector<Phoneme> phonemes() const;
  bool operator==(const SyllabifiedWord&) const = default;
};

// Legal two-consonant onsets and codas.
//
// Text format: a line `ONSETS` or `CODAS` opens a section; each following
// non-comment line holds one pair, written `tr` or `t r`.
class ClusterTables {
 public:
  using Pair = std::pair<char, char>;

  static const ClusterTables& defaults();
  static ClusterTables parse(std::string_view text,
                             std::string_view origin = "<clusters>");
  static ClusterTables load(const std::filesystem::path& path);

  bool legal_onset(char first, char second) const {
    return onsets_.count({first, second}) != 0;
  }
  bool legal_coda(char first, char second) const {
    return codas_.count({first, second}) != 0;
  }
  const std::set<Pair>& onsets() const { return onsets_; }
  const std::set<Pair>& codas() const { return codas_; }

  void add_onset(char first, char second) { onsets_.insert({first, second}); }
  void add_coda(char first, char second) { codas_.insert({first, second}); }

 private:
  std::set<Pair> onsets_;
  std::set<Pair> codas_;
};

bool is_legal_onset(char first, char second,
                    const ClusterTables& tables = ClusterTables::defaults());
bool is_legal_coda(char first, char second,
                   const ClusterTables& tables = ClusterTables::defaults());

// Groups phonemes into syllables. Each Vowel heads a nucleus; a semivowel
// joins the following vowel when it directly precedes one, otherwise the
// preceding vowel. Consonants between nuclei go to the longest legal onset
// whose leftover coda is also legal.
//
// Throws Error(NoNucleus) and Error(UnsyllabifiableCluster).
SyllabifiedWord syllabify(const PhonemeSequence& seq,
                          const ClusterTables& tables = ClusterTables::defaults());

}  // namespace fonodict
