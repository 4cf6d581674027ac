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

#include "amrx/projection.hpp"

namespace amrx {

AmrAlignment project_sentence(const AmrAlignment& source_alignment,
                              const WordAlignment& w, int source_len, int target_len) {
  for (const auto& [addr, toks] : source_alignment.entries)
    for (int t : toks)
      if (t < 0 || t >= source_len)
        throw ValidationError("source alignment index " + std::to_string(t) +
                              " out of bounds for address " + addr);
  AmrAlignment out;
  for (const auto& [i, j] : w.links) {
    if (i < 0 || i >= source_len)
      throw ValidationError("word alignment source index " + std::to_string(i) +
                            " out of bounds");
    if (j < 0 || j >= target_len)
      throw ValidationError("word alignment target index " + std::to_string(j) +
                            " out of bounds");
    for (const auto& [addr, toks] : source_alignment.entries)
      if (toks.count(i)) out.add(addr, j);
  }
  return out;
}

std::vector<CorpusBlock> project_corpus(const std::vector<CorpusBlock>& english,
                                        const std::vector<SentencePair>& parallel,
                                        const std::vector<WordAlignment>& alignments,
                                        ProjectionStats* stats) {
  if (english.size() != parallel.size() || english.size() != alignments.size())
    throw ValidationError("projection corpus length mismatch: " +
                          std::to_string(english.size()) + " blocks, " +
                          std::to_string(parallel.size()) + " pairs, " +
                          std::to_string(alignments.size()) + " alignments");

  ProjectionStats st;
  std::vector<CorpusBlock> out;
  out.reserve(english.size());
  for (size_t k = 0; k < english.size(); ++k) {
    const auto& block = english[k];
    if (!block.tokens.empty() && block.tokens.size() != parallel[k].source.size())
      throw ValidationError("block " + std::to_string(k) + ": sentence has " +
                            std::to_string(block.tokens.size()) +
                            " tokens but parallel source has " +
                            std::to_string(parallel[k].source.size()));
    AmrAlignment src = block.alignment.value_or(AmrAlignment{});
    AmrAlignment projected =
        project_sentence(src, alignments[k], static_cast<int>(parallel[k].source.size()),
                         static_cast<int>(parallel[k].target.size()));

    ++st.sentences;
    st.nodes_total += static_cast<int>(address_graph(block.graph).items.size());
    st.nodes_aligned_before += static_cast<int>(src.entries.size());
    st.nodes_aligned_after += static_cast<int>(projected.entries.size());

    CorpusBlock pb;
    pb.id = block.id;
    pb.tokens = parallel[k].target;
    pb.alignment = std::move(projected);
    pb.graph = block.graph;  // unchanged: labels are not grounded in the sentence
    out.push_back(std::move(pb));
  }
  if (stats) *stats = st;
  return out;
}

std::string ProjectionStats::to_text() const {
  std::string s;
  s += "sentences\t" + std::to_string(sentences) + "\n";
  s += "nodes_total\t" + std::to_string(nodes_total) + "\n";
  s += "nodes_aligned_before\t" + std::to_string(nodes_aligned_before) + "\n";
  s += "nodes_aligned_after\t" + std::to_string(nodes_aligned_after) + "\n";
  s += "dropped_nodes\t" + std::to_string(dropped_nodes()) + "\n";
  return s;
}

}  // namespace amrx
