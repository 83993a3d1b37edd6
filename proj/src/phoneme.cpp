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

#include "fonodict/phoneme.hpp"

namespace fonodict {

PhonemeClass class_of(char symbol) {
  switch (symbol) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return PhonemeClass::Vowel;
    case 'j':
    case 'w':
      return PhonemeClass::Semivowel;
    default:
      return PhonemeClass::Consonant;
  }
}

Phoneme make_phoneme(char symbol) {
  Phoneme p;
  p.symbol = symbol;
  p.klass = class_of(symbol);
  p.lenited = symbol == 'B' || symbol == 'D' || symbol == 'G';
  return p;
}

char display_symbol(const Phoneme& p) {
  if (p.stressed && p.symbol >= 'a' && p.symbol <= 'z') {
    return static_cast<char>(p.symbol - 'a' + 'A');
  }
  return p.symbol;
}

std::string render_compact(const std::vector<Phoneme>& phonemes) {
  std::string out;
  out.reserve(phonemes.size());
  for (const auto& p : phonemes) out.push_back(display_symbol(p));
  return out;
}

std::string render_spaced(const std::vector<Phoneme>& phonemes) {
  std::string out;
  out.reserve(phonemes.size() * 2);
  for (const auto& p : phonemes) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(display_symbol(p));
  }
  return out;
}

}  // namespace fonodict
