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

#include "fonodict/annotate.hpp"
#include "fonodict/error.hpp"
#include "fonodict/g2p.hpp"

using namespace fonodict;

namespace {

StressedWord stressed(std::string_view word) {
  const auto w = read_word(word);
  return assign_stress(syllabify(transcribe(w)), w.accent);
}

std::string slots(const std::vector<PositionTag>& tags, std::size_t syllable) {
  std::string out;
  for (const auto& t : tags) {
    if (t.syllable_index != syllable) continue;
    if (!out.empty()) out += ' ';
    out += std::string(1, t.symbol) + ":" + std::string(to_string(t.slot));
  }
  return out;
}

}  // namespace

TEST_CASE("base annotation") {
  CHECK(render_base(stressed("mesa")) == "m E s a");
  CHECK(render_base(stressed("con")) == "k O n");
  CHECK(render_base(stressed("aarón")) == "a r O n");
}

TEST_CASE("phonotactics") {
  CHECK(render_phonotactics(stressed("transporte")) == "CCVCC CVC CV");
  CHECK(render_phonotactics(stressed("aarón")) == "V CVC");
  CHECK(render_phonotactics(stressed("la")) == "CV");
  CHECK(render_phonotactics(stressed("gris")) == "CCVC");
  CHECK(render_phonotactics(stressed("buey")) == "CCVC");
}

TEST_CASE("ipa") {
  CHECK(render_ipa(stressed("mesa"), true, false) == "me sa");
  CHECK(render_ipa(stressed("aarón"), true, false) == "a ron");
  CHECK(render_ipa(stressed("torreón"), true, true) == "to re ˈon");
  CHECK(render_ipa(stressed("mesa"), false, false) == "mesa");
  CHECK(render_ipa(stressed("zúñiga"), true, false) == "θu ɲi ɣa");
  CHECK(render_ipa(stressed("chico"), false, false) == "tʃiko");
  CHECK(ipa_segments(stressed("chico")).size() == 4);
}

TEST_CASE("missing ipa mapping") {
  const auto table = IpaTable::parse("a a\nm m\n", "<t>", nullptr);
  try {
    render_ipa(stressed("mesa"), true, false, table);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingIpaMapping);
    CHECK(std::string(e.what()).rfind("MissingIPAMapping", 0) == 0);
  }
  const auto overlaid = IpaTable::parse("T s\n", "<t>", &IpaTable::defaults());
  CHECK(render_ipa(stressed("zapato"), false, false, overlaid) == "sapato");
}

TEST_CASE("position tags") {
  const auto gris = index_positions(stressed("gris"));
  CHECK(slots(gris, 0) == "g:Onset1 r:Onset2 i:Nucleus s:Coda1");
  CHECK(slots(index_positions(stressed("la")), 0) == "l:Onset1 a:Nucleus");
  const auto trans = index_positions(stressed("transporte"));
  CHECK(slots(trans, 0) == "t:Onset1 r:Onset2 a:Nucleus n:Coda1 s:Coda2");
  CHECK(slots(index_positions(stressed("buey")), 0) ==
        "b:Onset1 w:PreNuclearGlide e:Nucleus j:PostNuclearGlide");

  const auto second = select_slot(trans, Slot::Onset2);
  REQUIRE(second.size() == 1);
  CHECK(second[0].symbol == 'r');
  CHECK(second[0].phoneme_index == 1);
}

TEST_CASE("bundle consistency") {
  for (const char* w : {"transporte", "zúñiga", "buey", "aeropuerto", "chico"}) {
    const auto b = annotate(stressed(w));
    std::size_t symbols = 0;
    std::size_t cv = 0;
    for (char c : b.base) symbols += c != ' ';
    for (char c : b.phonotactics) cv += c != ' ';
    CHECK(symbols == cv);
    CHECK(b.ipa_segments.size() == cv);
    CHECK(b.positions.size() == cv);
  }
}
