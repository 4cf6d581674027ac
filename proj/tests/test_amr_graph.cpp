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

#include <set>

#include "amrx/corpus.hpp"
#include "gen.hpp"
#include "example_graphs.hpp"

using namespace amrx;

TEST_CASE("parse: sovereignty example") {
  AmrGraph g = parse_penman(fixtures::kSovereignty);
  CHECK(g.nodes.size() == 4);
  CHECK(g.nodes[g.root].concept_label == "sovereignty");
  std::set<std::string> rels;
  for (const auto& e : g.edges) rels.insert(e.relation);
  CHECK(rels == std::set<std::string>{":poss", ":mod", ":domain"});
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("parse: minimal graph") {
  AmrGraph g = parse_penman("(a / a)");
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.nodes[0].var == "a");
  CHECK(g.nodes[0].concept_label == "a");
}

TEST_CASE("parse: reentrancy via bare variable") {
  AmrGraph g = parse_penman(fixtures::kFear);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 2);
  int i_node = g.find_var("i");
  REQUIRE(i_node >= 0);
  int into_i = 0;
  for (const auto& e : g.edges)
    if (e.target == i_node) ++into_i;
  CHECK(into_i == 2);  // :ARG0 and :ARG1 both hit i
}

TEST_CASE("parse: inverse roles kept verbatim") {
  AmrGraph g = parse_penman(fixtures::kDoNot);
  bool found = false;
  for (const auto& e : g.edges) found = found || e.relation == ":ARG0-of";
  CHECK(found);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_penman("(a / cat"), PenmanError);
  CHECK_THROWS_AS(parse_penman("(a / cat))"), PenmanError);
  CHECK_THROWS_AS(parse_penman("(a / x :ARG0 (a / y))"), PenmanError);  // dup var
  CHECK_THROWS_AS(parse_penman("(a / cat :ARG0 b)"), PenmanError);  // undefined ref
  CHECK_THROWS_AS(parse_penman("(a / )"), PenmanError);             // empty concept
  try {
    parse_penman("(a / x :ARG0 (a / y))");
  } catch (const PenmanError& e) {
    CHECK(e.offset == 14);  // the second 'a'
  }
}

TEST_CASE("parse: bare tokens classify as constants or references") {
  // numbers, signs and long literals are constants
  AmrGraph g = parse_penman("(d / date :year 1998 :mode imperative :polarity -)");
  CHECK(g.edges.size() == 3);
  for (const auto& e : g.edges) CHECK(e.is_constant());
  // quoted strings too
  AmrGraph q = parse_penman("(p / person :name \"Anna\")");
  CHECK(q.edges[0].constant == "\"Anna\"");
  // duplicate edges rejected
  CHECK_THROWS_AS(parse_penman("(d / dog :quant 2 :quant 2)"), ValidationError);
}

TEST_CASE("parse: quoted constants may contain spaces") {
  AmrGraph g = parse_penman("(p / person :name \"Anna Maria\" :age 30)");
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].constant == "\"Anna Maria\"");  // edges keep parse order
  CHECK(g.edges[1].constant == "30");
  std::string s = serialize_penman(g);
  CHECK(s == "(p / person :age 30 :name \"Anna Maria\")");
  CHECK(serialize_penman(parse_penman(s)) == s);
  CHECK_THROWS_AS(parse_penman("(p / person :name \"unterminated)"), PenmanError);
}

TEST_CASE("serialize: canonical child order") {
  AmrGraph g = parse_penman(fixtures::kSovereignty);
  CHECK(serialize_penman(g) == fixtures::kSovereigntyCanonical);
  CHECK(serialize_penman(parse_penman("(a / a)")) == "(a / a)");
}

TEST_CASE("serialize: idempotent canonicalization") {
  for (const char* text : fixtures::kAllGraphs) {
    std::string once = serialize_penman(parse_penman(text));
    std::string twice = serialize_penman(parse_penman(once));
    CHECK(once == twice);
  }
}

TEST_CASE("round trip: 500 random graphs") {
  SplitMix64 rng(20260811);
  for (int k = 0; k < 500; ++k) {
    AmrGraph g = gen::random_graph(rng);
    std::string s = serialize_penman(g);
    AmrGraph back = parse_penman(s);
    CHECK(serialize_penman(back) == s);
    CHECK(back.nodes.size() == g.nodes.size());
    CHECK(back.edges.size() == g.edges.size());
    // addressing is stable under the round trip
    Addressing a1 = address_graph(g), a2 = address_graph(back);
    REQUIRE(a1.items.size() == a2.items.size());
    for (size_t i = 0; i < a1.items.size(); ++i)
      CHECK(a1.items[i].address == a2.items[i].address);
  }
}

TEST_CASE("addressing: bijection over nodes and constants") {
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    AmrGraph g = gen::random_graph(rng);
    Addressing a = address_graph(g);
    int constants = 0;
    for (const auto& e : g.edges) constants += e.is_constant() ? 1 : 0;
    CHECK(a.items.size() == g.nodes.size() + constants);
    std::set<std::string> addresses;
    for (const auto& item : a.items) addresses.insert(item.address);
    CHECK(addresses.size() == a.items.size());  // no duplicates
    CHECK(a.node_address[g.root] == "0");
  }
}

TEST_CASE("addressing: reentrant re-visit keeps the first address") {
  AmrGraph g = parse_penman(fixtures::kFear);
  Addressing a = address_graph(g);
  // i is defined under :ARG0 (child 0); the :ARG1 re-visit adds no item
  CHECK(a.items.size() == 2);
  CHECK(a.node_address[g.find_var("i")] == "0.0");
}

TEST_CASE("triples: sovereignty graph has 4 instance + TOP + 3 relations") {
  auto triples = extract_triples(parse_penman(fixtures::kSovereignty));
  CHECK(triples.size() == 8);
  int instance = 0, top = 0, rel = 0;
  for (const auto& t : triples) {
    if (t.relation == "instance") ++instance;
    if (t.relation == "TOP") ++top;
    if (t.value_is_var) ++rel;
  }
  CHECK(instance == 4);
  CHECK(top == 1);
  CHECK(rel == 3);
}

TEST_CASE("triples: minimal graph") {
  auto triples = extract_triples(parse_penman("(a / a)"));
  REQUIRE(triples.size() == 2);
  CHECK(triples[0].source == "a");
  CHECK(triples[0].relation == "instance");
  CHECK(triples[0].value == "a");
  CHECK(triples[1].relation == "TOP");
}

TEST_CASE("triples: polarity constant becomes an attribute triple") {
  auto triples = extract_triples(parse_penman(fixtures::kDoNot));
  bool found = false;
  for (const auto& t : triples)
    found = found || (t.relation == ":polarity" && t.value == "-" && !t.value_is_var &&
                      t.source == "d");
  CHECK(found);
}

TEST_CASE("triples: count identity on random graphs") {
  SplitMix64 rng(99);
  for (int k = 0; k < 200; ++k) {
    AmrGraph g = gen::random_graph(rng);
    CHECK(extract_triples(g).size() == g.nodes.size() + g.edges.size() + 1);
  }
}

TEST_CASE("corpus blocks: parse and format") {
  std::string text =
      "# ::id 7\n"
      "# ::snt This is the sovereignty of each country\n"
      "# ::alignments 0|3-3 0.0|0-0\n"
      "(s / sovereignty :domain (t / this)\n"
      "   :poss (c / country :mod (e / each)))\n"
      "\n"
      "# ::id 8\n"
      "# ::snt nothing here\n"
      "(a / a)\n";
  auto blocks = parse_corpus(text, "test");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].id == "7");
  CHECK(blocks[0].tokens.size() == 7);
  REQUIRE(blocks[0].alignment.has_value());
  CHECK(blocks[0].alignment->entries.at("0") == std::set<int>{3});
  CHECK(serialize_penman(blocks[0].graph) == fixtures::kSovereigntyCanonical);
  // format -> parse round trip
  auto again = parse_corpus(format_corpus(blocks), "test");
  REQUIRE(again.size() == 2);
  CHECK(serialize_penman(again[0].graph) == serialize_penman(blocks[0].graph));
  CHECK(again[0].alignment->entries == blocks[0].alignment->entries);
}

TEST_CASE("corpus blocks: sidecar io") {
  auto blocks = parse_corpus("# ::snt a\n(a / a)\n\n# ::snt b c\n(b / b :mod (c / c))\n",
                             "test");
  blocks[1].alignment = AmrAlignment{};
  blocks[1].alignment->add("0", 0);
  blocks[1].alignment->add("0.0", 1);

  write_sidecar("/tmp/amrx_test.sidecar", blocks);
  auto fresh = parse_corpus(format_corpus(blocks), "test");
  fresh[1].alignment.reset();
  attach_sidecar(fresh, "/tmp/amrx_test.sidecar");
  REQUIRE(fresh[1].alignment.has_value());
  CHECK(fresh[1].alignment->entries == blocks[1].alignment->entries);
}

TEST_CASE("validate rejects broken graphs") {
  AmrGraph g = parse_penman("(a / cat :ARG0 (b / dog))");
  AmrGraph orphan = g;
  orphan.edges.clear();  // dog unreachable
  CHECK_THROWS_AS(validate(orphan), ValidationError);
  AmrGraph dup = g;
  dup.nodes[1].var = "a";
  CHECK_THROWS_AS(validate(dup), ValidationError);
  AmrGraph empty_concept = g;
  empty_concept.nodes[0].concept_label = "";
  CHECK_THROWS_AS(validate(empty_concept), ValidationError);
}
