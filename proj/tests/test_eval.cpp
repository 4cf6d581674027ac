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
#include <filesystem>

#include "amrx/eval.hpp"
#include "synth.hpp"

using namespace amrx;

namespace {

synth::Language small_language(bool identity = false) {
  synth::Options opts;
  opts.train = 40;
  opts.test = 12;
  opts.bitext = 80;
  opts.identity = identity;
  return synth::make_language(opts);
}

ParserModel trained_english(const synth::Language& lang) {
  auto blocks = lang.gold_train_en;
  ensure_alignments(blocks);
  return train_parser(blocks);
}

std::vector<SentencePair> parallel_pairs(const synth::Language& lang, int from, int to) {
  std::vector<SentencePair> out;
  for (int i = from; i < to; ++i)
    out.push_back({split_ws(lang.bitext_e[i]), split_ws(lang.bitext_f[i])});
  return out;
}

}  // namespace

TEST_CASE("score table io round trips") {
  std::vector<ExperimentRecord> records = {{"it", "projection", 0.45, 0.43, 0.45},
                                           {"zh", "mt-dict", 0.57, 0.42, 0.48}};
  write_score_table("/tmp/amrx_scores.tsv", records);
  auto back = read_score_table("/tmp/amrx_scores.tsv");
  REQUIRE(back.size() == 2);
  CHECK(back[0].language == "it");
  CHECK(back[0].gold == doctest::Approx(0.43));
  CHECK(back[1].cycle == doctest::Approx(0.48));
  write_file("/tmp/amrx_scores.tsv", "language\tsystem\tsilver\tgold\tcycle\nbad row\n");
  CHECK_THROWS_AS(read_score_table("/tmp/amrx_scores.tsv"), ValidationError);
}

TEST_CASE("evaluate_gold: self-trained parser scores high, empty vocabulary near zero") {
  synth::Language lang = small_language();
  auto gold_blocks = lang.gold_train_en;
  ensure_alignments(gold_blocks);
  ParserModel model = train_parser(gold_blocks);
  SmatchResult self_result = evaluate_gold(model, gold_blocks, {4, 0});
  CHECK(self_result.f1 >= 0.9);

  CorpusBlock alien;
  alien.tokens = split_ws("qq ww ee rr");
  alien.graph = parse_penman("(q / qq :ARG0 (w / ww))");
  ParserModel tiny = train_parser({alien});
  SmatchResult bad = evaluate_gold(tiny, gold_blocks, {4, 0});
  CHECK(bad.f1 < 0.1);

  CHECK_THROWS_AS(evaluate_gold(model, {}, SmatchOptions{4, 0}), ValidationError);
}

TEST_CASE("evaluate_silver: same parser on same text is exact") {
  synth::Language lang = small_language(true);  // identity language
  ParserModel english = trained_english(lang);
  auto test = parallel_pairs(lang, 0, 10);
  SmatchResult r = evaluate_silver(english, english, test, {4, 0});
  CHECK(r.f1 == doctest::Approx(1.0));
}

TEST_CASE("evaluate_silver: equals gold when references coincide by construction") {
  synth::Language lang = small_language();
  ParserModel english = trained_english(lang);

  // train a target parser by projecting through the bijective lexicon with
  // no reordering needed: use identity-position pairs from the fixture
  auto e2f = parallel_pairs(lang, 0, 40);
  std::vector<std::vector<std::string>> e_side;
  for (const auto& p : e2f) e_side.push_back(p.source);
  auto silver_blocks = parse_silver_corpus(english, e_side);
  // word-for-word positional alignment is wrong under reordering, so build
  // links from the lexicon instead (bijective: match translated tokens)
  std::vector<WordAlignment> w(e2f.size());
  for (size_t k = 0; k < e2f.size(); ++k)
    for (size_t i = 0; i < e2f[k].source.size(); ++i) {
      auto translated = lang.lexicon.at(e2f[k].source[i]);
      for (size_t j = 0; j < e2f[k].target.size(); ++j)
        if (e2f[k].target[j] == translated && !w[k].links.count({(int)i, (int)j})) {
          bool j_taken = false;
          for (const auto& [pi, pj] : w[k].links) j_taken = j_taken || pj == (int)j;
          if (!j_taken) {
            w[k].links.insert({(int)i, (int)j});
            break;
          }
        }
    }
  auto projected = project_corpus(silver_blocks, e2f, w, nullptr);
  ParserModel target = train_parser(projected);

  // gold references := the English parser's own outputs on the test pairs
  auto test = parallel_pairs(lang, 50, 60);
  std::vector<CorpusBlock> synthetic_gold;
  for (const auto& p : test) {
    CorpusBlock b;
    b.tokens = p.target;
    b.graph = parse_sentence(p.source, english);
    synthetic_gold.push_back(std::move(b));
  }
  SmatchOptions opts{4, 7};
  SmatchResult gold_result = evaluate_gold(target, synthetic_gold, opts);
  SmatchResult silver_result = evaluate_silver(english, target, test, opts);
  CHECK(gold_result.f1 == doctest::Approx(silver_result.f1));
  CHECK(gold_result.matched == silver_result.matched);
}

TEST_CASE("evaluate_silver: split overlap and empty split are errors") {
  synth::Language lang = small_language();
  ParserModel english = trained_english(lang);
  auto test = parallel_pairs(lang, 0, 5);
  std::unordered_set<uint64_t> hashes{pair_hash(test[2])};
  CHECK_THROWS_AS(evaluate_silver(english, english, test, SmatchOptions{2, 0}, hashes),
                  ValidationError);
  CHECK_THROWS_AS(evaluate_silver(english, english, {}, SmatchOptions{2, 0}, {}),
                  ValidationError);
}

TEST_CASE("full cycle, MT mode: bijective dictionary equals the gold test score") {
  synth::Language lang = small_language();
  DictionaryTranslator dict{std::unordered_map<std::string, std::string>(
      lang.lexicon.begin(), lang.lexicon.end())};

  FullCycleConfig config;
  config.gold_train = &lang.gold_train_en;
  config.gold_test = &lang.gold_test_en;
  config.translator = &dict;
  config.smatch = {4, 11};
  config.artifact_dir = "/tmp/amrx_cycle_mt";
  std::filesystem::remove_all(config.artifact_dir);
  SmatchResult cycle = evaluate_full_cycle(config);

  ParserModel english = trained_english(lang);
  SmatchResult direct = evaluate_gold(english, lang.gold_test_en, {4, 11});
  CHECK(cycle.f1 == direct.f1);  // back-translation is the identity here
  CHECK(cycle.matched == direct.matched);
  CHECK(std::filesystem::exists(config.artifact_dir + "/cycle_roundtrip.txt"));
  CHECK(std::filesystem::exists(config.artifact_dir + "/cycle_pred.amr"));
}

TEST_CASE("full cycle, projection mode: runs end to end and persists artifacts") {
  synth::Language lang = small_language();
  auto e2f = parallel_pairs(lang, 0, 30);
  auto f2e = parallel_pairs(lang, 30, 60);
  auto aligner_corpus = parallel_pairs(lang, 0, 80);

  FullCycleConfig config;
  config.gold_train = &lang.gold_train_en;
  config.gold_test = &lang.gold_test_en;
  config.e2f_train = &e2f;
  config.f2e_train = &f2e;
  config.aligner_corpus = &aligner_corpus;
  config.smatch = {4, 3};
  config.artifact_dir = "/tmp/amrx_cycle_proj";
  std::filesystem::remove_all(config.artifact_dir);
  SmatchResult cycle = evaluate_full_cycle(config);
  CHECK(cycle.f1 > 0.3);  // desk-scale sanity; the acceptance suite pins tighter bounds
  for (const char* artifact :
       {"parser_en.model", "silver_e2f.amr", "e2f.pharaoh", "projected_f.amr",
        "parser_f.model", "silver_f2e.amr", "f2e.pharaoh", "projected_e.amr",
        "parser_en2.model", "cycle_pred.amr"})
    CHECK(std::filesystem::exists(config.artifact_dir + "/" + artifact));
}

TEST_CASE("full cycle tracks the target parser's gold score on the noisy language") {
  synth::Language lang = synth::make_language({});  // 200/50/550, seeded reordering
  auto e2f = parallel_pairs(lang, 0, 200);
  auto f2e = parallel_pairs(lang, 200, 400);
  auto aligner_corpus = parallel_pairs(lang, 0, 550);

  FullCycleConfig config;
  config.gold_train = &lang.gold_train_en;
  config.gold_test = &lang.gold_test_en;
  config.e2f_train = &e2f;
  config.f2e_train = &f2e;
  config.aligner_corpus = &aligner_corpus;
  config.smatch = {4, 21};
  config.artifact_dir = "/tmp/amrx_cycle_noisy";
  std::filesystem::remove_all(config.artifact_dir);
  SmatchResult cycle = evaluate_full_cycle(config);

  // the target parser the cycle trained on the way down, scored on the gold
  // target corpus built by the same bijection
  ParserModel target = ParserModel::load(config.artifact_dir + "/parser_f.model");
  SmatchResult gold = evaluate_gold(target, lang.gold_test_target, {4, 21});
  CHECK(std::fabs(cycle.f1 - gold.f1) <= 0.05);
}

TEST_CASE("full cycle: missing inputs are validation errors") {
  FullCycleConfig config;
  CHECK_THROWS_AS(evaluate_full_cycle(config), ValidationError);
}
