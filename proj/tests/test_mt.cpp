// Copyright 2026 amrx authors
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

#include <cmath>

#include "amrx/bleu.hpp"
#include "amrx/translate.hpp"
#include "amrx/util.hpp"

using namespace amrx;

TEST_CASE("dictionary translator: bijective lexicon round-trips") {
  DictionaryTranslator t(std::unordered_map<std::string, std::string>{
      {"home", "casa"}, {"casa", "home"}, {"dog", "cane"}, {"cane", "dog"}});
  std::vector<std::string> in = {"home dog", "dog home dog"};
  CHECK(back_translate(t, in) == in);
}

TEST_CASE("dictionary translator: many-to-one loses information") {
  DictionaryTranslator t(std::unordered_map<std::string, std::string>{
      {"home", "casa"}, {"house", "casa"}, {"casa", "house"}});
  auto out = back_translate(t, {"home"});
  CHECK(out == std::vector<std::string>{"house"});
}

TEST_CASE("dictionary translator: unknown words copied") {
  DictionaryTranslator t(std::unordered_map<std::string, std::string>{{"home", "casa"}});
  auto out = t.translate({"home xyzzy"}, Direction::e2f);
  CHECK(out == std::vector<std::string>{"casa xyzzy"});
  CHECK(back_translate(t, {"xyzzy"}) == std::vector<std::string>{"xyzzy"});
}

TEST_CASE("file translator serves line-aligned output and checks counts") {
  write_lines("/tmp/amrx_e2f.txt", {"la casa", "il cane"});
  write_lines("/tmp/amrx_f2e.txt", {"the house", "the dog"});
  FileTranslator t("/tmp/amrx_e2f.txt", "/tmp/amrx_f2e.txt");
  auto fwd = t.translate({"the house", "the dog"}, Direction::e2f);
  CHECK(fwd == std::vector<std::string>{"la casa", "il cane"});
  auto rt = back_translate(t, {"the house", "the dog"});
  CHECK(rt == std::vector<std::string>{"the house", "the dog"});
  CHECK_THROWS_AS(t.translate({"only one"}, Direction::e2f), ValidationError);
}

TEST_CASE("lexicon file parsing") {
  write_lines("/tmp/amrx_lex.tsv", {"home\tcasa", "casa\thome"});
  auto lex = read_lexicon("/tmp/amrx_lex.tsv");
  CHECK(lex.at("home") == "casa");
  write_lines("/tmp/amrx_lex.tsv", {"no-tab-here"});
  CHECK_THROWS_AS(read_lexicon("/tmp/amrx_lex.tsv"), ValidationError);
}

TEST_CASE("bleu: identity corpus") {
  std::vector<std::string> corpus = {"the cat is on the mat", "a b c d e"};
  BleuReport r = bleu_score(corpus, corpus);
  CHECK(r.bleu == doctest::Approx(1.0));
  CHECK(r.brevity_penalty == doctest::Approx(1.0));
  CHECK(r.percent() == "100.00");
}

TEST_CASE("bleu: clipped unigram precision") {
  BleuReport r = bleu_score({"the the the the the the the"},
                            {"the cat is on the mat"});
  CHECK(r.precisions[0] == doctest::Approx(2.0 / 7.0));
  CHECK(r.bleu == 0.0);  // no higher-order matches
}

TEST_CASE("bleu: zero 4-gram matches zero the score") {
  BleuReport r = bleu_score({"a b c d"}, {"a x c d"});
  CHECK(r.precisions[3] == 0.0);
  CHECK(r.bleu == 0.0);
}

TEST_CASE("bleu: brevity penalty on short hypotheses") {
  BleuReport r = bleu_score({"a b"}, {"a b c"});
  CHECK(r.brevity_penalty == doctest::Approx(std::exp(1.0 - 3.0 / 2.0)));
}

TEST_CASE("bleu: smoothing keeps short sentences scoreable") {
  BleuReport plain = bleu_score({"a b"}, {"a b c"});
  BleuReport smooth = bleu_score({"a b"}, {"a b c"}, true);
  CHECK(plain.bleu == 0.0);
  CHECK(smooth.bleu > 0.0);
}

TEST_CASE("bleu: invariant under joint permutation") {
  std::vector<std::string> hyps = {"the cat sat", "a dog ran far away",
                                   "birds fly south in winter"};
  std::vector<std::string> refs = {"the cat sat down", "a dog ran away",
                                   "birds fly north in winter"};
  BleuReport a = bleu_score(hyps, refs);
  std::swap(hyps[0], hyps[2]);
  std::swap(refs[0], refs[2]);
  BleuReport b = bleu_score(hyps, refs);
  CHECK(a.bleu == doctest::Approx(b.bleu));
  for (int n = 0; n < 4; ++n)
    CHECK(a.precisions[n] == doctest::Approx(b.precisions[n]));
}

TEST_CASE("bleu: percentage formatting matches the two-decimal convention") {
  BleuReport r;
  r.bleu = 0.23834;
  CHECK(r.percent() == "23.83");
  r.bleu = 0.1;
  CHECK(r.percent() == "10.00");
}

TEST_CASE("bleu: errors") {
  CHECK_THROWS_AS(bleu_score({}, {}), ValidationError);
  CHECK_THROWS_AS(bleu_score({"a"}, {"a", "b"}), ValidationError);
}
