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

#include "fonodict/error.hpp"
#include "fonodict/orthography.hpp"

using namespace fonodict;

namespace {

std::vector<std::string> surfaces(std::string_view word) {
  std::vector<std::string> out;
  for (const auto& t : read_word(word).letters) out.push_back(t.surface);
  return out;
}

ErrorKind kind_of(std::string_view word) {
  try {
    read_word(word);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << word);
  return ErrorKind::EmptyWord;
}

}  // namespace

TEST_CASE("normalize trims and lowercases") {
  CHECK(normalize("Mesa ").normalized == "mesa");
  CHECK(normalize("  ÁRBOL").normalized == "árbol");
  CHECK(normalize("ZÚÑIGA").normalized == "zúñiga");
  CHECK(normalize("zúñiga").normalized == "zúñiga");
}

TEST_CASE("normalize composes combining marks") {
  CHECK(normalize("café").normalized == "café");
  CHECK(normalize("ñandu").normalized == "ñandu");
  CHECK(normalize("pingüino").normalized == "pingüino");
}

TEST_CASE("normalize rejects bad input") {
  try {
    normalize("caf3");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllegalCharacter);
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 3);
  }
  CHECK(kind_of("") == ErrorKind::EmptyWord);
  CHECK(kind_of("   ") == ErrorKind::EmptyWord);
  CHECK(kind_of("hello world") == ErrorKind::IllegalCharacter);
  CHECK(kind_of("façade") == ErrorKind::IllegalCharacter);
  CHECK(kind_of("über") == ErrorKind::IllegalCharacter);
  CHECK(kind_of("\xff\xfe") == ErrorKind::IllegalCharacter);
}

TEST_CASE("tokenize groups digraphs") {
  CHECK(surfaces("allende") == std::vector<std::string>{"a", "ll", "e", "n", "d", "e"});
  CHECK(surfaces("campeche") ==
        std::vector<std::string>{"c", "a", "m", "p", "e", "ch", "e"});
  CHECK(surfaces("guasave") ==
        std::vector<std::string>{"g", "u", "a", "s", "a", "v", "e"});
  CHECK(surfaces("queso") == std::vector<std::string>{"qu", "e", "s", "o"});
  CHECK(surfaces("guiso") == std::vector<std::string>{"gu", "i", "s", "o"});
  CHECK(surfaces("pingüino") ==
        std::vector<std::string>{"p", "i", "n", "gü", "i", "n", "o"});
  CHECK(surfaces("perro") == std::vector<std::string>{"p", "e", "rr", "o"});
}

TEST_CASE("every digraph context") {
  // qu and gu group only before a front vowel; ch, ll, rr always.
  for (const char* v : {"a", "o", "u"}) {
    CHECK(surfaces(std::string("qu") + v).front() == "q");
    CHECK(surfaces(std::string("gu") + v).front() == "g");
  }
  for (const char* v : {"e", "i", "é", "í"}) {
    CHECK(surfaces(std::string("qu") + v).front() == "qu");
    CHECK(surfaces(std::string("gu") + v).front() == "gu");
  }
  for (const char* d : {"ch", "ll", "rr"}) {
    CHECK(surfaces(std::string("a") + d + "a")[1] == d);
  }
}

TEST_CASE("silent h and detokenize") {
  const auto w = read_word("ahora");
  REQUIRE(w.letters.size() == 5);
  CHECK(w.letters[1].is_silent);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    CHECK(w.letters[i].is_silent == (w.letters[i].surface == "h"));
  }
  CHECK(detokenize(w.letters) == "ahora");
  CHECK(detokenize(read_word("chihuahua").letters) == "chihuahua");
}

TEST_CASE("accent detection") {
  const auto w = read_word("torreón");
  REQUIRE(w.accent.has_accent);
  CHECK(w.letters[w.accent.letter_index].surface == "ó");
  CHECK_FALSE(read_word("casa").accent.has_accent);
  CHECK(kind_of("líderés") == ErrorKind::MultipleAccents);
}

TEST_CASE("compound words split at hyphens") {
  const auto parts = split_compound(read_word("teórico-práctico"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].normalized == "teórico");
  CHECK(parts[1].normalized == "práctico");
  CHECK(parts[1].accent.has_accent);
  CHECK_THROWS_AS(split_compound(read_word("a--b")), Error);
  CHECK(split_compound(read_word("mesa")).size() == 1);
}
