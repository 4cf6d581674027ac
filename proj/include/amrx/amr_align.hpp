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

#include "amrx/amr_graph.hpp"

namespace amrx {

// Mapping between AMR node addresses and sentence token indices. Nodes and
// tokens may both stay unaligned. The rule cascade produces contiguous spans;
// projected alignments may be arbitrary index sets.
struct AmrAlignment {
  std::map<std::string, std::set<int>> entries;  // address -> token indices

  std::map<int, std::set<std::string>> inverse() const;  // token -> addresses
  bool empty() const { return entries.empty(); }
  void add(const std::string& address, int token) { entries[address].insert(token); }
};

struct AlignmentCoverage {
  int nodes_total = 0;   // nodes + constant leaves
  int nodes_aligned = 0;
  int tokens_total = 0;
  int tokens_aligned = 0;
  double node_fraction() const {
    return nodes_total ? static_cast<double>(nodes_aligned) / nodes_total : 0.0;
  }
  double token_fraction() const {
    return tokens_total ? static_cast<double>(tokens_aligned) / tokens_total : 0.0;
  }
};

// Rule cascade, priority order, each node aligned at most once:
//   1. concept equals lowercased token after stripping the PropBank sense
//      suffix (trailing "-" + two digits)
//   2. 4-character prefix match (both sides >= 4 chars)
//   3. constant value equals the token (numbers, dates, names)
//   4. ":polarity -" aligns to no/not/non/never
// plus entity templates (date-entity, name): an unaligned template head takes
// the span its leaf children matched. Tokens are punctuation-stripped before
// matching; a token is claimed by the first node that matches it.
AmrAlignment align_concepts(const std::vector<std::string>& tokens, const AmrGraph& g);

AlignmentCoverage coverage(const AmrAlignment& a, const AmrGraph& g, int token_count);

std::string strip_sense(std::string_view concept_label);
std::string strip_punct(std::string_view token);

// "# ::alignments" metadata payload: space-separated "addr|begin-end" items,
// inclusive token spans; repeated addresses union. Non-contiguous index sets
// serialize as one item per maximal run.
std::string alignment_to_metadata(const AmrAlignment& a);
AmrAlignment alignment_from_metadata(std::string_view payload);

// Sidecar record: "N<TAB>addr:begin-end addr:begin-end ..."
std::string alignment_to_sidecar(int record, const AmrAlignment& a);
std::pair<int, AmrAlignment> alignment_from_sidecar(std::string_view line);

}  // namespace amrx
