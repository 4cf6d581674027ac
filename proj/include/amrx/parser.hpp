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

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "amrx/corpus.hpp"

namespace amrx {

// Two-stage trainable parser: an alignment-derived concept lexicon proposes
// graph fragments per token, then a maximum spanning arborescence over the
// fragment roots attaches them with the most frequent relations. Fills the
// same train/parse-over-aligned-corpora role an external parser would; any
// conforming parser can be swapped in through the corpus file interface.

struct ParserModel {
  static constexpr const char* kNone = "<NONE>";

  // word type -> (normalized fragment PENMAN or kNone) -> count
  std::map<std::string, std::map<std::string, long>> lexicon;
  // (head fragment-root concept, dependent fragment-root concept)
  //   -> (relation label, head_first) -> count
  std::map<std::pair<std::string, std::string>,
           std::map<std::pair<std::string, bool>, long>>
      relations;
  std::map<std::string, long> root_counts;
  std::set<std::string> concepts;  // inventory, for unseen-word matching

  void save(const std::string& path) const;  // "AMRX-PARSER v1" text format
  static ParserModel load(const std::string& path);
};

// Counting pass over aligned corpus blocks. Aligned tokens count the fragment
// they anchor (aligned nodes plus their unaligned leaf children), unaligned
// tokens count kNone; edges crossing fragment boundaries feed the relation
// table; every graph root's concept feeds root_counts.
ParserModel train_parser(const std::vector<CorpusBlock>& corpus);

AmrGraph parse_sentence(const std::vector<std::string>& tokens,
                        const ParserModel& model);

// Same parse plus the fragment-anchor alignment by-product (each produced
// node aligned to the token its fragment fired on).
std::pair<AmrGraph, AmrAlignment> parse_with_alignment(
    const std::vector<std::string>& tokens, const ParserModel& model);

// Fraction of word types (or tokens, with token_level) whose most likely
// lexicon entry triggers no fragment.
double non_content_bearing_ratio(const ParserModel& model, bool token_level = false);

}  // namespace amrx
