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

#include "fonodict/orthography.hpp"

#include "fonodict/error.hpp"
#include "fonodict/text.hpp"

namespace fonodict {
namespace {

constexpr char32_t kAAcute = U'á';
constexpr char32_t kEAcute = U'é';
constexpr char32_t kIAcute = U'í';
constexpr char32_t kOAcute = U'ó';
constexpr char32_t kUAcute = U'ú';
constexpr char32_t kUDiaeresis = U'ü';
constexpr char32_t kNTilde = U'ñ';

constexpr char32_t kCombiningAcute = U'\u0301';
constexpr char32_t kCombiningTilde = U'\u0303';
constexpr char32_t kCombiningDiaeresis = U'\u0308';

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  switch (c) {
    case U'Á':
    case U'É':
    case U'Í':
    case U'Ó':
    case U'Ú':
    case U'Ü':
    case U'Ñ':
      return c + 0x20;
    default:
      return c;
  }
}

char32_t compose(char32_t base, char32_t mark) {
  if (mark == kCombiningAcute) {
    switch (base) {
      case U'a': return kAAcute;
      case U'e': return kEAcute;
      case U'i': return kIAcute;
      case U'o': return kOAcute;
      case U'u': return kUAcute;
      default: return 0;
    }
  }
  if (mark == kCombiningTilde && base == U'n') return kNTilde;
  if (mark == kCombiningDiaeresis && base == U'u') return kUDiaeresis;
  return 0;
}

bool is_accepted(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  switch (c) {
    case kAAcute:
    case kEAcute:
    case kIAcute:
    case kOAcute:
    case kUAcute:
    case kUDiaeresis:
    case kNTilde:
    case U'-':
      return true;
    default:
      return false;
  }
}

bool is_front(char32_t c) {
  return c == U'e' || c == U'i' || c == kEAcute || c == kIAcute;
}

std::string describe(char32_t c) {
  if (c < 0x20 || c == 0x7F) return "U+" + std::to_string(static_cast<unsigned>(c));
  return text::encode_utf8(c);
}

}  // namespace

OrthoWord normalize(std::string_view raw) {
  const auto trimmed = text::trim(raw);
  if (trimmed.empty()) throw Error(ErrorKind::EmptyWord, "blank input");

  std::size_t bad = 0;
  const auto decoded = text::decode_utf8(trimmed, &bad);
  if (!decoded) {
    throw Error(ErrorKind::IllegalCharacter,
                "invalid UTF-8 at byte " + std::to_string(bad), bad);
  }

  std::u32string out;
  out.reserve(decoded->size());
  for (char32_t c : *decoded) {
    c = to_lower(c);
    if (!out.empty() &&
        (c == kCombiningAcute || c == kCombiningTilde ||
         c == kCombiningDiaeresis)) {
      if (char32_t composed = compose(out.back(), c)) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(c);
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    const char32_t c = out[i];
    bool ok = is_accepted(c);
    if (c == kUDiaeresis) ok = i > 0 && out[i - 1] == U'g';
    if (!ok) {
      throw Error(ErrorKind::IllegalCharacter,
                  "illegal character '" + describe(c) + "' at index " +
                      std::to_string(i),
                  i);
    }
  }

  OrthoWord word;
  word.raw = std::string(raw);
  word.normalized = text::encode_utf8(out);
  return word;
}

std::vector<LetterToken> tokenize_letters(const OrthoWord& word) {
  const auto cps = text::decode_utf8(word.normalized).value_or(U"");
  std::vector<LetterToken> tokens;
  tokens.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t c = cps[i];
    const char32_t next = i + 1 < cps.size() ? cps[i + 1] : 0;
    const char32_t after = i + 2 < cps.size() ? cps[i + 2] : 0;
    std::size_t len = 1;
    if ((c == U'c' && next == U'h') || (c == U'l' && next == U'l') ||
        (c == U'r' && next == U'r')) {
      len = 2;
    } else if ((c == U'q' || c == U'g') && next == U'u' && is_front(after)) {
      len = 2;
    } else if (c == U'g' && next == kUDiaeresis) {
      len = 2;
    }
    LetterToken tok;
    tok.surface = text::encode_utf8(std::u32string_view(cps).substr(i, len));
    tok.is_silent = (len == 1 && c == U'h');
    tok.position = i;
    tokens.push_back(std::move(tok));
    i += len;
  }
  return tokens;
}

bool is_accented_vowel(std::string_view s) {
  return s == "á" || s == "é" || s == "í" || s == "ó" ||
         s == "ú";
}

bool is_front_vowel_letter(std::string_view s) {
  return s == "e" || s == "i" || s == "é" || s == "í";
}

bool is_vowel_letter(std::string_view s) {
  return s == "a" || s == "e" || s == "i" || s == "o" || s == "u" ||
         is_accented_vowel(s);
}

AccentInfo find_accent(std::span<const LetterToken> letters) {
  AccentInfo info;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!is_accented_vowel(letters[i].surface)) continue;
    if (info.has_accent) {
      throw Error(ErrorKind::MultipleAccents,
                  "accents on letters " + std::to_string(info.letter_index) +
                      " and " + std::to_string(i));
    }
    info.has_accent = true;
    info.letter_index = i;
  }
  return info;
}

OrthoWord read_word(std::string_view raw) {
  OrthoWord word = normalize(raw);
  word.letters = tokenize_letters(word);
  if (word.normalized.find('-') == std::string::npos) {
    word.accent = find_accent(word.letters);
  }
  return word;
}

std::vector<OrthoWord> split_compound(const OrthoWord& word) {
  if (word.normalized.find('-') == std::string::npos) {
    OrthoWord copy = word;
    if (copy.letters.empty()) copy.letters = tokenize_letters(copy);
    copy.accent = find_accent(copy.letters);
    return {copy};
  }
  const auto cps = text::decode_utf8(word.normalized).value_or(U"");
  std::vector<OrthoWord> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i < cps.size() && cps[i] != U'-') continue;
    if (i == start) {
      const std::size_t at = i < cps.size() ? i : i - 1;
      throw Error(ErrorKind::IllegalCharacter,
                  "illegal character '-' at index " + std::to_string(at), at);
    }
    OrthoWord part;
    part.raw = word.raw;
    part.normalized =
        text::encode_utf8(std::u32string_view(cps).substr(start, i - start));
    part.letters = tokenize_letters(part);
    part.accent = find_accent(part.letters);
    parts.push_back(std::move(part));
    start = i + 1;
  }
  return parts;
}

std::string detokenize(std::span<const LetterToken> letters) {
  std::string out;
  for (const auto& t : letters) out += t.surface;
  return out;
}

}  // namespace fonodict
