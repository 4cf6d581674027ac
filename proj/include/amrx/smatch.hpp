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
#include <string>
#include <vector>

#include "amrx/amr_graph.hpp"

namespace amrx {

struct SmatchResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int matched = 0;
  int pred_total = 0;
  int gold_total = 0;
  std::map<std::string, std::string> mapping;  // pred variable -> gold variable
};

struct SmatchOptions {
  int restarts = 4;
  uint64_t seed = 0;
};

// Best-mapping triple overlap between two graphs. Run 0 starts from a greedy
// concept match (identical concepts paired first, ties in address order);
// further runs start from seeded random injections. Each run climbs by
// steepest ascent over single-variable remaps, unmaps and pairwise swaps
// until no move increases the matched count. Deterministic for a fixed
// (restarts, seed).
SmatchResult smatch_score(const AmrGraph& pred, const AmrGraph& gold,
                          const SmatchOptions& opts = {});

// Micro-average over index-aligned pairs: counts are summed, then P/R/F1
// computed once. Per-pair results returned alongside.
struct SmatchCorpusResult {
  SmatchResult total;
  std::vector<SmatchResult> pairs;
};

SmatchCorpusResult smatch_corpus(const std::vector<AmrGraph>& preds,
                                 const std::vector<AmrGraph>& golds,
                                 const SmatchOptions& opts = {});

// Exact optimum by exhaustive enumeration of injective variable mappings.
// Requires min(|vars(pred)|, |vars(gold)|) <= 8.
SmatchResult brute_force_oracle(const AmrGraph& pred, const AmrGraph& gold);

}  // namespace amrx
