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

#include "fonodict/g2p.hpp"

#include "fonodict/default_data.hpp"
#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

ContextCondition parse_condition(std::string_view side, std::string_view origin,
                                 std::size_t line) {
  ContextCondition cond;
  if (side.empty()) return cond;
  if (side == "#") {
    cond.kind = ContextCondition::Kind::Boundary;
  } else if (side == "V") {
    cond.kind = ContextCondition::Kind::Vowel;
  } else if (side == "F") {
    cond.kind = ContextCondition::Kind::FrontVowel;
  } else if (side == "C") {
    cond.kind = ContextCondition::Kind::Consonant;
  } else if (side.size() >= 3 && side.front() == '[' && side.back() == ']') {
    auto letters = text::decode_utf8(side.substr(1, side.size() - 2));
    if (!letters || letters->empty()) {
      throw Error(ErrorKind::MalformedTable,
                  std::string(origin) + ": bad letter set '" +
                      std::string(side) + "'",
                  line);
    }
    cond.kind = ContextCondition::Kind::OneOf;
    cond.letters = std::move(*letters);
  } else {
    throw Error(ErrorKind::MalformedTable,
                std::string(origin) + ": bad context '" + std::string(side) +
                    "' on line " + std::to_string(line),
                line);
  }
  return cond;
}

bool is_strong(const Phoneme& p) {
  return p.is_vowel() && (p.symbol == 'a' || p.symbol == 'e' || p.symbol == 'o');
}

}  // namespace

bool ContextCondition::matches(const LetterToken* neighbour) const {
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Boundary:
      return neighbour == nullptr;
    case Kind::Vowel:
      return neighbour && is_vowel_letter(neighbour->surface);
    case Kind::FrontVowel:
      return neighbour && is_front_vowel_letter(neighbour->surface);
    case Kind::Consonant:
      return neighbour && !is_vowel_letter(neighbour->surface) &&
             neighbour->surface != "-";
    case Kind::OneOf: {
      if (!neighbour) return false;
      for (char32_t c : letters) {
        if (neighbour->surface == text::encode_utf8(c)) return true;
      }
      return false;
    }
  }
  return false;
}

const PhonemeInventory& PhonemeInventory::defaults() {
  static const PhonemeInventory inventory =
      parse(default_data::inventory(), "<default inventory>");
  return inventory;
}

PhonemeInventory PhonemeInventory::parse(std::string_view textual,
                                         std::string_view origin) {
  PhonemeInventory inv;
  for (char c : kPhonemeAlphabet) inv.alphabet_.insert(c);

  const auto lines = text::split(textual, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line_no = n + 1;
    const auto trimmed = text::trim(lines[n]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text::split_ws(trimmed);
    if (fields.size() < 3) {
      throw Error(ErrorKind::MalformedTable,
                  std::string(origin) + ": expected 'token context symbols' on line " +
                      std::to_string(line_no),
                  line_no);
    }
    MappingRule rule;
    rule.token = fields[0];
    rule.line = line_no;
    const std::string& ctx = fields[1];
    if (ctx != "*") {
      const auto underscore = ctx.find('_');
      if (underscore == std::string::npos) {
        throw Error(ErrorKind::MalformedTable,
                    std::string(origin) + ": context '" + ctx +
                        "' lacks '_' on line " + std::to_string(line_no),
                    line_no);
      }
      rule.left = parse_condition(std::string_view(ctx).substr(0, underscore),
                                  origin, line_no);
      rule.right = parse_condition(std::string_view(ctx).substr(underscore + 1),
                                   origin, line_no);
    }
    if (!(fields.size() == 3 && fields[2] == "-")) {
      for (std::size_t k = 2; k < fields.size(); ++k) {
        if (fields[k].size() != 1 ||
            static_cast<unsigned char>(fields[k][0]) >= 0x80 ||
            fields[k][0] == '-') {
          throw Error(ErrorKind::MalformedTable,
                      std::string(origin) + ": symbol '" + fields[k] +
                          "' is not a single ASCII character on line " +
                          std::to_string(line_no),
                      line_no);
        }
        rule.symbols.push_back(fields[k][0]);
        inv.alphabet_.insert(fields[k][0]);
      }
    }
    inv.by_token_[rule.token].push_back(inv.rules_.size());
    inv.rules_.push_back(std::move(rule));
  }
  return inv;
}

PhonemeInventory PhonemeInventory::load(const std::filesystem::path& path) {
  const auto lines = text::read_lines(path);
  return parse(text::join(lines, "\n"), path.string());
}

const std::string* PhonemeInventory::lookup(std::span<const LetterToken> letters,
                                            std::size_t index) const {
  const auto it = by_token_.find(letters[index].surface);
  if (it == by_token_.end()) return nullptr;
  const LetterToken* left = index > 0 ? &letters[index - 1] : nullptr;
  const LetterToken* right =
      index + 1 < letters.size() ? &letters[index + 1] : nullptr;
  for (std::size_t r : it->second) {
    const auto& rule = rules_[r];
    if (rule.left.matches(left) && rule.right.matches(right)) {
      return &rule.symbols;
    }
  }
  return nullptr;
}

PhonemeSequence map_letters(std::span<const LetterToken> letters,
                            const AccentInfo& accent,
                            const PhonemeInventory& inventory) {
  PhonemeSequence seq;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    seq.source_word += letters[i].surface;
    const std::string* symbols = inventory.lookup(letters, i);
    if (symbols == nullptr) {
      throw Error(ErrorKind::UnmappableToken,
                  "no rule for '" + letters[i].surface + "' at letter " +
                      std::to_string(i));
    }
    bool mark = accent.has_accent && accent.letter_index == i;
    for (char s : *symbols) {
      Phoneme p = make_phoneme(s);
      if (mark && p.is_vowel()) {
        p.stressed = true;
        mark = false;
      }
      // Adjacent identical vowels collapse; the stress flag survives.
      if (p.is_vowel() && !seq.phonemes.empty()) {
        Phoneme& prev = seq.phonemes.back();
        if (prev.is_vowel() && prev.symbol == p.symbol) {
          prev.stressed = prev.stressed || p.stressed;
          continue;
        }
      }
      seq.phonemes.push_back(p);
    }
  }
  return seq;
}

PhonemeSequence classify_vowels(PhonemeSequence seq) {
  auto& ph = seq.phonemes;
  std::size_t i = 0;
  while (i < ph.size()) {
    if (!ph[i].is_vowel()) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < ph.size() && ph[end].is_vowel()) ++end;
    const std::size_t len = end - i;
    if (len > 1) {
      std::vector<bool> nucleus(len, false);
      bool any = false;
      for (std::size_t k = 0; k < len; ++k) {
        const Phoneme& p = ph[i + k];
        nucleus[k] = is_strong(p) || p.stressed;
        any = any || nucleus[k];
      }
      if (!any) nucleus[len - 1] = true;
      // Weak vowels touching a nucleus glide; stranded ones stay syllabic.
      for (std::size_t k = 0; k < len; ++k) {
        if (nucleus[k]) continue;
        const bool touches = (k > 0 && nucleus[k - 1]) ||
                             (k + 1 < len && nucleus[k + 1]);
        if (!touches) continue;
        Phoneme& p = ph[i + k];
        p.symbol = p.symbol == 'i' ? 'j' : 'w';
        p.klass = PhonemeClass::Semivowel;
      }
    }
    i = end;
  }
  return seq;
}

PhonemeSequence apply_lenition(PhonemeSequence seq, bool enabled) {
  if (!enabled) return seq;
  auto& ph = seq.phonemes;
  for (std::size_t i = 1; i + 1 < ph.size(); ++i) {
    char lenited = 0;
    switch (ph[i].symbol) {
      case 'b': lenited = 'B'; break;
      case 'd': lenited = 'D'; break;
      case 'g': lenited = 'G'; break;
      default: continue;
    }
    if (ph[i - 1].is_vocalic() && ph[i + 1].is_vocalic()) {
      ph[i].symbol = lenited;
      ph[i].lenited = true;
    }
  }
  return seq;
}

PhonemeSequence transcribe(const OrthoWord& word,
                           const PhonemeInventory& inventory) {
  auto seq = map_letters(word.letters, word.accent, inventory);
  return apply_lenition(classify_vowels(std::move(seq)));
}

PhonemeSequence parse_phonemes(std::string_view symbols,
                               const PhonemeInventory& inventory) {
  PhonemeSequence seq;
  for (const auto& field : text::split_ws(symbols)) {
    if (field.size() != 1) {
      throw Error(ErrorKind::InvalidOverride,
                  "'" + field + "' is not a single-character symbol");
    }
    char c = field[0];
    bool stressed = false;
    if (c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U') {
      c = static_cast<char>(c - 'A' + 'a');
      stressed = true;
    }
    if (!inventory.contains(c)) {
      throw Error(ErrorKind::InvalidOverride,
                  "symbol '" + field + "' is not in the inventory");
    }
    Phoneme p = make_phoneme(c);
    p.stressed = stressed;
    seq.phonemes.push_back(p);
  }
  if (seq.phonemes.empty()) {
    throw Error(ErrorKind::InvalidOverride, "empty phoneme sequence");
  }
  return seq;
}

}  // namespace fonodict
