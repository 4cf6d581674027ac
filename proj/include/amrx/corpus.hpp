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

#include <optional>
#include <string>
#include <vector>

#include "amrx/amr_align.hpp"
#include "amrx/amr_graph.hpp"

namespace amrx {

// One AMR corpus block: metadata comment lines followed by a PENMAN graph,
// blocks separated by blank lines.
//
//   # ::id 7
//   # ::snt This is the sovereignty of each country
//   # ::alignments 0|3-3 0.0|0-0
//   (s / sovereignty :domain (t / this) :poss (c / country :mod (e / each)))
struct CorpusBlock {
  std::string id;
  std::vector<std::string> tokens;  // "::snt" is already tokenized
  std::optional<AmrAlignment> alignment;
  AmrGraph graph;
};

std::vector<CorpusBlock> parse_corpus(std::string_view text, const std::string& origin);
std::vector<CorpusBlock> read_corpus(const std::string& path);

// Graphs are written in canonical single-line form; ids are filled with the
// block index when empty.
std::string format_corpus(const std::vector<CorpusBlock>& blocks);
void write_corpus(const std::string& path, const std::vector<CorpusBlock>& blocks);

// Alignment sidecar: one record line per block that has an alignment.
void write_sidecar(const std::string& path, const std::vector<CorpusBlock>& blocks);
void attach_sidecar(std::vector<CorpusBlock>& blocks, const std::string& path);

}  // namespace amrx
