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

#include <cstdio>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <sys/wait.h>

#include "corpus.hpp"

using testing_support::TempDir;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(FONODICT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::filesystem::path data(const char* name) { return testing_support::data_dir() / name; }

}  // namespace

TEST_CASE("build reproduces the golden five-word dictionary file") {
  TempDir dir("cli-build");
  const auto r = cli("build " + q(data("golden.txt")) + " --pos-table " + q(data("golden.pos")) +
                     " --format espada-tsv --out " + q(dir / "d.tsv"));
  CHECK(r.status == 0);
  CHECK(slurp(dir / "d.tsv") == slurp(data("golden.tsv")));
  CHECK(std::filesystem::exists(dir / "d.tsv.rejects.tsv"));
  CHECK(std::filesystem::exists(dir / "d.tsv.provenance.tsv"));
  CHECK(r.out.find("entries\t5") != std::string::npos);

  const auto s = cli("stats " + q(dir / "d.tsv"));
  CHECK(s.status == 0);
  CHECK(s.out.find("total\t5") != std::string::npos);
  CHECK(s.out.find("mean_per_country\t5.00") != std::string::npos);
  CHECK(s.out.find("pos\tNOUN\t2") != std::string::npos);
  CHECK(s.out.find("pos\tPROP\t1") != std::string::npos);
  CHECK(s.out.find("pos\tADP\t1") != std::string::npos);
  CHECK(s.out.find("pos\tDET\t1") != std::string::npos);
}

TEST_CASE("caribbean preset debuccalizes coda s") {
  TempDir dir("cli-carib");
  std::ofstream(dir / "w.txt") << "las\nmesas\nmesa\n";
  const auto r = cli("build " + q(dir / "w.txt") +
                     " --preset caribbean --format aligner-dict --out " + q(dir / "c.dict"));
  CHECK(r.status == 0);
  const auto body = slurp(dir / "c.dict");
  CHECK(body == "las\tl A h\nmesa\tm E s a\nmesas\tm E s a h\n");
}

TEST_CASE("preset equals its spelled-out flags") {
  TempDir dir("cli-flags");
  const auto corpus = q(data("corpus.txt"));
  const auto presets = cli("presets");
  REQUIRE(presets.status == 0);
  int compared = 0;
  std::istringstream lines(presets.out);
  std::string line;
  while (std::getline(lines, line)) {
    const auto tab = line.find('\t');
    const std::string name = line.substr(0, tab);
    if (name != "caribbean" && name != "chile" && name != "castilian") continue;
    std::string flags;
    std::istringstream fields(line.substr(tab + 1, line.rfind('\t') - tab - 1));
    std::string kv;
    while (fields >> kv) {
      const auto eq = kv.find('=');
      std::string key = kv.substr(0, eq);
      std::string value = kv.substr(eq + 1);
      if (key == "mark_stress") key = "mark-stress";
      if (key == "ll_realization") {
        key = "ll";
        value = value == "palatal_lateral" ? "lateral" : "fricative";
      }
      if (key == "velar_fricative") key = "velar";
      if (key == "s_debuccalization") key = "s-debuccalization";
      flags += " --" + key + " " + value;
    }
    CHECK(cli("build " + corpus + " --preset " + name + " --out " + q(dir / "a.tsv")).status == 0);
    CHECK(cli("build " + corpus + flags + " --out " + q(dir / "b.tsv")).status == 0);
    CHECK(slurp(dir / "a.tsv") == slurp(dir / "b.tsv"));
    ++compared;
  }
  CHECK(compared == 3);
}

TEST_CASE("explicit flags override the preset") {
  const auto r = cli("lookup las --preset caribbean --s-debuccalization off");
  CHECK(r.status == 0);
  CHECK(r.out.find("base\tl A s") != std::string::npos);
}

TEST_CASE("empty wordlist") {
  TempDir dir("cli-empty");
  std::ofstream(dir / "empty.txt") << "";
  const auto r = cli("build " + q(dir / "empty.txt") + " --out " + q(dir / "e.tsv"));
  CHECK(r.status == 0);
  CHECK(r.out.find("0 entries") != std::string::npos);
}

TEST_CASE("lookup") {
  const auto t = cli("lookup transporte");
  CHECK(t.status == 0);
  CHECK(t.out.find("syllables\ttrans|por|te") != std::string::npos);
  CHECK(t.out.find("phonotactics\tCCVCC CVC CV") != std::string::npos);
  CHECK(t.out.find("ipa_flat\ttransporte") != std::string::npos);
  const auto b = cli("lookup búsqueda");
  CHECK(b.out.find("stress\tEsdrujula") != std::string::npos);
  const auto x = cli("lookup xyz");
  CHECK(x.status == 2);
  CHECK(x.out.find("error") != std::string::npos);
}

TEST_CASE("convert") {
  TempDir dir("cli-convert");
  CHECK(cli("convert " + q(data("golden.tsv")) + " --to espada-tsv --out " + q(dir / "a.tsv")).status == 0);
  CHECK(slurp(dir / "a.tsv") == slurp(data("golden.tsv")));
  CHECK(cli("convert " + q(data("golden.tsv")) + " --to aligner-dict --out " + q(dir / "a.dict")).status == 0);
  const auto dict = slurp(dir / "a.dict");
  CHECK(std::count(dict.begin(), dict.end(), '\n') == 5);
  const auto bad = cli("convert " + q(data("malformed.tsv")) + " --to aligner-dict --out " +
                       q(dir / "b.dict"));
  CHECK(bad.status == 2);
  CHECK(bad.out.find("line 3") != std::string::npos);
}

TEST_CASE("overrides from the command line") {
  TempDir dir("cli-over");
  std::ofstream(dir / "w.txt") << "today\nmesa\n";
  CHECK(cli("build " + q(dir / "w.txt") + " --overrides " + q(data("overrides.tsv")) +
            " --format aligner-dict --out " + q(dir / "o.dict")).status == 0);
  CHECK(slurp(dir / "o.dict") == "mesa\tm E s a\ntoday\tt u d E j\n");
}

TEST_CASE("country tagged sources and stats") {
  TempDir dir("cli-countries");
  std::ofstream(dir / "mx.txt") << "uno\ndos\ntres\n";
  std::ofstream(dir / "pe.txt") << "tres\ncuatro\n";
  CHECK(cli("build mexico:" + (dir / "mx.txt").string() + " peru:" + (dir / "pe.txt").string() +
            " --out " + q(dir / "d.tsv")).status == 0);
  const auto s = cli("stats " + q(dir / "d.tsv"));
  CHECK(s.out.find("total\t4") != std::string::npos);
  CHECK(s.out.find("country\tmexico\t3") != std::string::npos);
  CHECK(s.out.find("country\tperu\t2") != std::string::npos);
  CHECK(s.out.find("mean_per_country\t2.50") != std::string::npos);
}

TEST_CASE("rejected words are reported but not fatal") {
  TempDir dir("cli-rejects");
  std::ofstream(dir / "w.txt") << "mesa\ncaf3\nxyz\n";
  const auto r = cli("build " + q(dir / "w.txt") + " --out " + q(dir / "d.tsv"));
  CHECK(r.status == 0);
  const auto rejects = slurp(dir / "d.tsv.rejects.tsv");
  CHECK(rejects.find("caf3\tIllegalCharacter") != std::string::npos);
  CHECK(rejects.find("xyz\tUnsyllabifiableCluster") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("").status == 1);
  CHECK(cli("frobnicate").status == 1);
  CHECK(cli("build --bogus x").status == 1);
  CHECK(cli("lookup mesa --preset atlantis").status == 2);
  CHECK(cli("lookup mesa --preset castilian,mexico").status == 2);
  CHECK(cli("build /definitely/missing.txt --out /tmp/x").status != 0);
  CHECK(cli("presets").status == 0);
}

TEST_CASE("sixteen country build reports every country") {
  TempDir dir("cli-sixteen");
  const auto corpus = testing_support::load_corpus();
  const std::vector<std::string> countries = {
      "argentina", "bolivia", "chile", "colombia", "costa_rica", "cuba",
      "dominican_republic", "ecuador", "guatemala", "honduras", "mexico", "panama",
      "peru", "puerto_rico", "spain", "venezuela"};
  std::string args;
  for (std::size_t c = 0; c < countries.size(); ++c) {
    const auto path = dir / (countries[c] + ".txt");
    std::ofstream out(path);
    for (std::size_t i = c; i < corpus.size(); i += countries.size()) out << corpus[i] << '\n';
    args += " " + countries[c] + ":" + path.string();
  }
  REQUIRE(cli("build" + args + " --jobs 4 --out " + q(dir / "all.tsv")).status == 0);
  const auto s = cli("stats " + q(dir / "all.tsv"));
  CHECK(s.status == 0);
  std::size_t rows = 0;
  std::istringstream lines(s.out);
  std::string line;
  while (std::getline(lines, line)) rows += line.rfind("country\t", 0) == 0 ? 1 : 0;
  CHECK(rows == 16);
  CHECK(s.out.find("total\t" + std::to_string(corpus.size())) != std::string::npos);
  std::ostringstream mean;
  mean << std::fixed << std::setprecision(2) << corpus.size() / 16.0;
  CHECK(s.out.find("mean_per_country\t" + mean.str()) != std::string::npos);
}

TEST_CASE("identical invocations write identical files") {
  TempDir dir("cli-repro");
  const auto corpus = q(data("corpus.txt"));
  CHECK(cli("build " + corpus + " --preset mexico --jobs 1 --out " + q(dir / "a.tsv")).status == 0);
  CHECK(cli("build " + corpus + " --preset mexico --jobs 8 --out " + q(dir / "b.tsv")).status == 0);
  CHECK(slurp(dir / "a.tsv") == slurp(dir / "b.tsv"));
  CHECK(slurp(dir / "a.tsv.provenance.tsv") == slurp(dir / "b.tsv.provenance.tsv"));
  CHECK(slurp(dir / "a.tsv.rejects.tsv") == slurp(dir / "b.tsv.rejects.tsv"));
}
