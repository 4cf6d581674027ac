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

#include "amrx/arborescence.hpp"
#include "amrx/eval.hpp"
#include "amrx/parser.hpp"
#include "amrx/smatch.hpp"
#include "example_graphs.hpp"
#include "synth.hpp"

using namespace amrx;

namespace {

// the sovereignty example as one projected Italian training block
CorpusBlock italian_block() {
  CorpusBlock b;
  b.id = "0";
  b.tokens = split_ws("questa e` la sovranita` di ogni paese");
  b.graph = parse_penman(fixtures::kSovereignty);
  AmrAlignment a;
  a.add("0", 3);
  a.add("0.0", 0);
  a.add("0.1", 6);
  a.add("0.1.0", 5);
  b.alignment = a;
  return b;
}

double brute_force_arborescence(const std::vector<std::vector<double>>& s, int root) {
  const int n = static_cast<int>(s.size());
  std::vector<int> parent(n, -1);
  double best = -1e308;
  auto reaches_root = [&]() {
    for (int v = 0; v < n; ++v) {
      int u = v, steps = 0;
      while (u != root && steps++ <= n) u = parent[u];
      if (u != root) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (!reaches_root()) return;
      double total = 0.0;
      for (int x = 0; x < n; ++x)
        if (x != root) total += s[parent[x]][x];
      best = std::max(best, total);
      return;
    }
    if (v == root) {
      self(self, v + 1);
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      parent[v] = u;
      self(self, v + 1);
    }
    parent[v] = -1;
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("training trace on the worked example") {
  ParserModel m = train_parser({italian_block()});

  CHECK(m.lexicon.at("questa").at("(x0 / this)") == 1);
  CHECK(m.lexicon.at("sovranita`").at("(x0 / sovereignty)") == 1);
  CHECK(m.lexicon.at("ogni").at("(x0 / each)") == 1);
  CHECK(m.lexicon.at("paese").at("(x0 / country)") == 1);
  for (const char* function_word : {"e`", "la", "di"})
    CHECK(m.lexicon.at(function_word).at(ParserModel::kNone) == 1);

  CHECK(m.relations.at({"sovereignty", "country"}).at({":poss", true}) == 1);
  CHECK(m.relations.at({"sovereignty", "this"}).at({":domain", false}) == 1);
  CHECK(m.relations.at({"country", "each"}).at({":mod", false}) == 1);
  CHECK(m.root_counts.at("sovereignty") == 1);
}

TEST_CASE("training: all tokens unaligned") {
  CorpusBlock b;
  b.tokens = split_ws("uno due tre");
  b.graph = parse_penman("(a / cat :mod (b / fast))");
  b.alignment = AmrAlignment{};
  ParserModel m = train_parser({b});
  for (const auto& [word, dist] : m.lexicon) {
    CHECK(dist.size() == 1);
    CHECK(dist.count(ParserModel::kNone) == 1);
  }
  CHECK(m.relations.empty());
  CHECK(m.root_counts.at("cat") == 1);
  CHECK(non_content_bearing_ratio(m) == doctest::Approx(1.0));
}

TEST_CASE("training: duplicated example counts double") {
  ParserModel once = train_parser({italian_block()});
  ParserModel twice = train_parser({italian_block(), italian_block()});
  for (const auto& [word, dist] : once.lexicon)
    for (const auto& [key, count] : dist)
      CHECK(twice.lexicon.at(word).at(key) == 2 * count);
  CHECK(twice.root_counts.at("sovereignty") == 2);
  CHECK(twice.relations.at({"sovereignty", "country"}).at({":poss", true}) == 2);
}

TEST_CASE("training: empty corpus") {
  CHECK_THROWS_AS(train_parser({}), ValidationError);
}

TEST_CASE("training: adding examples never removes lexicon keys") {
  CorpusBlock extra;
  extra.tokens = split_ws("we will answer");
  extra.graph = parse_penman(fixtures::kAnswer);
  extra.alignment = align_concepts(extra.tokens, extra.graph);
  ParserModel small = train_parser({italian_block()});
  ParserModel grown = train_parser({italian_block(), extra});
  for (const auto& [word, dist] : small.lexicon) {
    REQUIRE(grown.lexicon.count(word) == 1);
    for (const auto& [key, count] : dist) CHECK(grown.lexicon.at(word).count(key) == 1);
  }
}

TEST_CASE("parse: reconstruction of the training sentence") {
  ParserModel m = train_parser({italian_block()});
  AmrGraph parsed = parse_sentence(split_ws("questa e` la sovranita` di ogni paese"), m);
  AmrGraph reference = parse_penman(fixtures::kSovereignty);
  SmatchResult r = brute_force_oracle(parsed, reference);
  CHECK(r.f1 == doctest::Approx(1.0));
  CHECK_NOTHROW(validate(parsed));
}

TEST_CASE("parse: unseen vocabulary gives amr-empty") {
  ParserModel m = train_parser({italian_block()});
  AmrGraph g = parse_sentence(split_ws("xyzq zyxw"), m);
  CHECK(g.nodes.size() == 1);
  CHECK(g.nodes[0].concept_label == "amr-empty");
}

TEST_CASE("parse: unseen word falls back to the concept inventory") {
  CorpusBlock b;
  b.tokens = split_ws("we will answer");
  b.graph = parse_penman(fixtures::kAnswer);
  b.alignment = align_concepts(b.tokens, b.graph);
  ParserModel m = train_parser({b});
  // exact sense-stripped match
  AmrGraph exact = parse_sentence(split_ws("answer"), m);
  CHECK(exact.nodes[exact.root].concept_label == "answer-01");
  // 4-char prefix match
  AmrGraph prefixed = parse_sentence(split_ws("answers"), m);
  CHECK(prefixed.nodes[prefixed.root].concept_label == "answer-01");
}

TEST_CASE("parse: output always satisfies the graph invariants") {
  synth::Options opts;
  opts.train = 30;
  opts.test = 1;
  opts.bitext = 1;
  synth::Language lang = synth::make_language(opts);
  auto blocks = lang.gold_train_en;
  ensure_alignments(blocks);
  ParserModel m = train_parser(blocks);
  for (const auto& b : lang.gold_train_en) {
    AmrGraph g = parse_sentence(b.tokens, m);
    CHECK_NOTHROW(validate(g));
  }
  // determinism
  AmrGraph g1 = parse_sentence(blocks[0].tokens, m);
  AmrGraph g2 = parse_sentence(blocks[0].tokens, m);
  CHECK(serialize_penman(g1) == serialize_penman(g2));
}

TEST_CASE("parse: alignment by-product covers every produced node") {
  ParserModel m = train_parser({italian_block()});
  auto [graph, alignment] = parse_with_alignment(
      split_ws("questa e` la sovranita` di ogni paese"), m);
  Addressing addr = address_graph(graph);
  CHECK(alignment.entries.size() == addr.items.size());
  for (const auto& item : addr.items) CHECK(alignment.entries.count(item.address) == 1);
}

TEST_CASE("self-parse on synthetic corpus scores at least 0.9") {
  synth::Options opts;
  opts.train = 50;
  opts.test = 1;
  opts.bitext = 1;
  synth::Language lang = synth::make_language(opts);
  auto blocks = lang.gold_train_en;
  ensure_alignments(blocks);
  ParserModel m = train_parser(blocks);
  std::vector<AmrGraph> preds, refs;
  for (const auto& b : lang.gold_train_en) {
    preds.push_back(parse_sentence(b.tokens, m));
    refs.push_back(b.graph);
  }
  auto result = smatch_corpus(preds, refs, {4, 0});
  CHECK(result.total.f1 >= 0.9);
}

TEST_CASE("non-content-bearing ratio") {
  ParserModel m = train_parser({italian_block()});
  CHECK(non_content_bearing_ratio(m) == doctest::Approx(3.0 / 7.0));
  // token-level view weighs by frequency; every type occurs once here
  CHECK(non_content_bearing_ratio(m, true) == doctest::Approx(3.0 / 7.0));

  // fully aligned corpus
  CorpusBlock b;
  b.tokens = split_ws("sovereignty country");
  b.graph = parse_penman("(s / sovereignty :poss (c / country))");
  b.alignment = align_concepts(b.tokens, b.graph);
  ParserModel full = train_parser({b});
  CHECK(non_content_bearing_ratio(full) == doctest::Approx(0.0));
}

TEST_CASE("model save and load round trip") {
  ParserModel m = train_parser({italian_block()});
  m.save("/tmp/amrx_test.parser");
  ParserModel back = ParserModel::load("/tmp/amrx_test.parser");
  CHECK(back.lexicon == m.lexicon);
  CHECK(back.relations == m.relations);
  CHECK(back.root_counts == m.root_counts);
  CHECK(back.concepts == m.concepts);
  CHECK_THROWS_AS(ParserModel::load("/dev/null"), ValidationError);
}

TEST_CASE("arborescence: chain and cycle cases") {
  // plain chain
  std::vector<std::vector<double>> chain = {{0, 5, 0}, {0, 0, 5}, {0, 0, 0}};
  CHECK(max_arborescence(chain, 0) == std::vector<int>{-1, 0, 1});
  // two-node cycle must be broken optimally
  std::vector<std::vector<double>> cyc = {{0, 1, 1}, {0, 0, 10}, {0, 10, 0}};
  auto parents = max_arborescence(cyc, 0);
  double total = 0.0;
  for (int v = 1; v < 3; ++v) total += cyc[parents[v]][v];
  CHECK(total == doctest::Approx(11.0));
  CHECK(max_arborescence({{0.0}}, 0) == std::vector<int>{-1});
}

TEST_CASE("arborescence: optimum matches brute force on random graphs") {
  SplitMix64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) s[u][v] = static_cast<double>(rng.below(13)) - 2.0;
    int root = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    auto parents = max_arborescence(s, root);
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
      if (v == root) {
        CHECK(parents[v] == -1);
        continue;
      }
      REQUIRE(parents[v] >= 0);
      total += s[parents[v]][v];
    }
    // result is a valid arborescence
    for (int v = 0; v < n; ++v) {
      int u = v, steps = 0;
      while (u != root && steps++ <= n) u = parents[u];
      CHECK(u == root);
    }
    CHECK(total == doctest::Approx(brute_force_arborescence(s, root)));
  }
}
