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

#include "amrx/corpus.hpp"
#include "amrx/word_align.hpp"

namespace amrx {

// Transfers AMR-node/token alignments from the source sentence to the target
// sentence of a word-aligned pair. The graph itself never changes.

struct ProjectionStats {
  int sentences = 0;
  int nodes_total = 0;          // addressable nodes + constants
  int nodes_aligned_before = 0;
  int nodes_aligned_after = 0;
  int dropped_nodes() const { return nodes_aligned_before - nodes_aligned_after; }
  std::string to_text() const;
};

// A_t(t_j) = union of A_s(s_i) over links (i, j): exactly the closure of
// "source token carries node, source token links to target token, therefore
// target token carries node" -- nothing more.
AmrAlignment project_sentence(const AmrAlignment& source_alignment,
                              const WordAlignment& w, int source_len, int target_len);

// Per-example projection over index-aligned corpora. Output blocks keep each
// input graph byte-identical in canonical form and swap in the target-side
// sentence and alignment.
std::vector<CorpusBlock> project_corpus(const std::vector<CorpusBlock>& english,
                                        const std::vector<SentencePair>& parallel,
                                        const std::vector<WordAlignment>& alignments,
                                        ProjectionStats* stats = nullptr);

}  // namespace amrx
