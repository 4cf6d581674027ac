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

#include <functional>
#include <optional>
#include <unordered_set>

#include "amrx/parser.hpp"
#include "amrx/projection.hpp"
#include "amrx/smatch.hpp"
#include "amrx/stats.hpp"
#include "amrx/translate.hpp"
#include "amrx/word_align.hpp"

namespace amrx {

// ---------------------------------------------------------------------------
// Score tables (Table-1 layout) and correlation analysis

struct ExperimentRecord {
  std::string language;
  std::string system;  // projection | mt-file | mt-dict
  double silver = 0.0;  // Smatch F1, [0, 1]
  double gold = 0.0;
  double cycle = 0.0;
};

// TSV with header "language\tsystem\tsilver\tgold\tcycle"; scores stored on
// the percent scale to mirror published tables.
std::vector<ExperimentRecord> read_score_table(const std::string& path);
void write_score_table(const std::string& path,
                       const std::vector<ExperimentRecord>& records);

struct CorrelationReport {
  double pearson = 0.0;
  double kendall_tau_b = 0.0;
  std::pair<double, double> regression{0.0, 0.0};  // slope, intercept
  int n = 0;
};

CorrelationReport correlate_columns(std::span<const double> xs,
                                    std::span<const double> ys);

// ---------------------------------------------------------------------------
// Evaluation protocols

// Corpus-level parsing abstraction: a trained model used directly, or an MT
// round through English composed with the English parser.
using CorpusParser =
    std::function<std::vector<AmrGraph>(const std::vector<std::vector<std::string>>&)>;

CorpusParser model_parser(const ParserModel& model);
// translate each sentence with `dir`, then parse with the English model
CorpusParser mt_parser(const ParserModel& english, const Translator& t, Direction dir);
// e -> f -> e round trip, then parse with the English model
CorpusParser back_translate_parser(const ParserModel& english, const Translator& t);

uint64_t pair_hash(const SentencePair& pair);

// Parse sentences against the corpus' own graphs as references.
SmatchResult evaluate_gold(const CorpusParser& parser,
                           const std::vector<CorpusBlock>& gold_corpus,
                           const SmatchOptions& opts = {});
SmatchResult evaluate_gold(const ParserModel& target_parser,
                           const std::vector<CorpusBlock>& gold_corpus,
                           const SmatchOptions& opts = {});

// Reference = English parses of the source side, candidate = target parses of
// the target side. No gold corpus is ever an input here. training_hashes, when
// non-empty, trips the split-overlap error.
SmatchResult evaluate_silver(const CorpusParser& english_reference,
                             const CorpusParser& target_candidate,
                             const std::vector<SentencePair>& parallel_test,
                             const SmatchOptions& opts = {},
                             const std::unordered_set<uint64_t>& training_hashes = {});
SmatchResult evaluate_silver(const ParserModel& english_parser,
                             const ParserModel& target_parser,
                             const std::vector<SentencePair>& parallel_test,
                             const SmatchOptions& opts = {},
                             const std::unordered_set<uint64_t>& training_hashes = {});

// Shared steps, also used by the CLI pipeline's cached stages.
std::vector<CorpusBlock> parse_silver_corpus(
    const ParserModel& model, const std::vector<std::vector<std::string>>& sentences);
void ensure_alignments(std::vector<CorpusBlock>& blocks);
std::vector<WordAlignment> align_pairs(const AlignerModel& forward,
                                       const AlignerModel& backward,
                                       const std::vector<SentencePair>& pairs,
                                       Symmetrization method);
WordAlignment swap_links(const WordAlignment& a);
std::vector<SentencePair> swap_pairs(const std::vector<SentencePair>& pairs);

// Full-cycle evaluation: learn the target parser from the English one, invert
// the process to learn a fresh English parser, and score that on the English
// gold test set. The target-language gold corpus is deliberately not an input.
struct FullCycleConfig {
  // projection mode
  const std::vector<CorpusBlock>* gold_train = nullptr;  // English, aligned
  const std::vector<CorpusBlock>* gold_test = nullptr;   // English
  const std::vector<SentencePair>* e2f_train = nullptr;  // pairs stored (e, f)
  const std::vector<SentencePair>* f2e_train = nullptr;  // pairs stored (e, f)
  const std::vector<SentencePair>* aligner_corpus = nullptr;
  AlignerOptions aligner;
  Symmetrization symmetrization = Symmetrization::intersect;
  // MT mode: set translator instead of the parallel splits
  const Translator* translator = nullptr;

  SmatchOptions smatch;
  std::string artifact_dir;  // every intermediate artifact lands here
};

SmatchResult evaluate_full_cycle(const FullCycleConfig& config);

}  // namespace amrx
