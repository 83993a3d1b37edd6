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

#include <vector>

#include "fonodict/dialect.hpp"
#include "fonodict/error.hpp"
#include "fonodict/g2p.hpp"
#include "fonodict/stress.hpp"

using namespace fonodict;

namespace {

StressedWord stressed(std::string_view word) {
  const auto w = read_word(word);
  return assign_stress(syllabify(transcribe(w)), w.accent);
}

std::string under(std::string_view word, const DialectConfig& cfg) {
  return render_spaced(transform(stressed(word), cfg).syllabified.phonemes());
}

DialectConfig plain() {
  DialectConfig cfg;
  cfg.mark_stress = false;
  return cfg;
}

}  // namespace

TEST_CASE("coda and theta rewrites") {
  auto cfg = plain();
  cfg.theta = ThetaMode::Seseo;
  cfg.lenition = false;
  CHECK(under("zúñiga", cfg) == "s u N i g a");

  CHECK(under("jarrazo", plain()) == "x a R a T o");

  cfg = plain();
  cfg.s_debuccalization = true;
  CHECK(under("las", cfg) == "l a h");
  CHECK(under("casas", cfg) == "k a s a h");
  CHECK(under("esto", cfg) == "e h t o");

  cfg = plain();
  cfg.lambdacism = true;
  CHECK(under("porque", cfg) == "p o l k e");
  CHECK(under("caro", cfg) == "k a r o");
  CHECK(under("mar", cfg) == "m a l");
}

TEST_CASE("other switches") {
  auto cfg = plain();
  cfg.velar_fricative = VelarFricative::H;
  CHECK(under("jamón", cfg) == "h a m o n");
  cfg = plain();
  cfg.ll_realization = LlRealization::PalatalFricative;
  CHECK(under("calle", cfg) == "k a y e");
  cfg = plain();
  cfg.semivowels = false;
  const auto w = transform(stressed("guasave"), cfg);
  CHECK(render_spaced(w.syllabified.phonemes()) == "g u a s a B e");
  CHECK(w.syllabified.syllables.size() == 3);
  cfg = plain();
  cfg.lenition = false;
  CHECK(under("abeja", cfg) == "a b e x a");
}

TEST_CASE("default config is the identity") {
  for (const char* word : {"transporte", "zúñiga", "calle", "jamón", "las", "guasave"}) {
    const auto sw = stressed(word);
    CHECK(transform(sw, DialectConfig{}) == sw);
  }
}

TEST_CASE("rewrites preserve structure and are idempotent") {
  for (const auto& preset : PresetTable::defaults().presets()) {
    for (const char* word : {"transporte", "zúñiga", "calle", "jamón", "las", "porque"}) {
      const auto sw = stressed(word);
      const auto once = transform(sw, preset.config);
      CHECK(once.syllable_count() == sw.syllable_count());
      CHECK(once.stressed_index == sw.stressed_index);
      CHECK(transform(once, preset.config) == once);
    }
  }
}

TEST_CASE("presets") {
  const auto castilian = resolve_preset("castilian");
  CHECK(castilian.theta == ThetaMode::Distincion);
  CHECK(castilian.velar_fricative == VelarFricative::X);
  CHECK(castilian.ll_realization == LlRealization::PalatalLateral);
  CHECK(castilian.lenition);

  const std::vector<std::string> island = {"cuba", "puerto_rico"};
  CHECK(resolve_presets(island).lambdacism);

  try {
    const std::vector<std::string> clash = {"castilian", "mexico"};
    resolve_presets(clash);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MergeConflict);
    CHECK(e.detail().find("theta") != std::string::npos);
  }
  try {
    resolve_preset("atlantis");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPreset);
  }
  CHECK(known_countries().size() == 16);
  for (const auto& c : known_countries()) {
    CHECK_MESSAGE(PresetTable::defaults().find(c) != nullptr, c);
  }
}

TEST_CASE("preset file parsing") {
  const std::string block =
      "[x]\nmark_stress = on\nlenition = on\nsemivowels = on\n"
      "ll_realization = palatal_fricative\ntheta = seseo\nvelar_fricative = h\n"
      "s_debuccalization = on\nlambdacism = off\ncountries = chile\n";
  const auto table = PresetTable::parse(block);
  REQUIRE(table.find("x"));
  CHECK(table.find("x")->config.s_debuccalization);
  CHECK(table.find("x")->countries.count("chile"));
  CHECK_THROWS_AS(PresetTable::parse("[y]\nlenition = on\n"), Error);
  CHECK_THROWS_AS(PresetTable::parse(block + block), Error);
  try {
    PresetTable::parse("[z]\ncountries = narnia\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownCountry);
  }
}

TEST_CASE("field round trip") {
  DialectConfig cfg;
  for (const auto& key : dialect_field_names()) {
    DialectConfig copy;
    set_field(copy, key, get_field(cfg, key));
    CHECK(copy == cfg);
  }
  CHECK_THROWS_AS(set_field(cfg, "lenition", "maybe"), Error);
  CHECK_THROWS_AS(set_field(cfg, "tone", "on"), Error);
}
