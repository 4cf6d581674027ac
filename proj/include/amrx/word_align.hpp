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

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "amrx/util.hpp"

namespace amrx {

struct SentencePair {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// Loads two line-aligned token files into pairs; throws on length mismatch
// or empty sentences.
std::vector<SentencePair> read_bitext(const std::string& source_path,
                                      const std::string& target_path);

// Set of (source index, target index) links for one sentence pair, 0-based.
struct WordAlignment {
  std::set<std::pair<int, int>> links;

  bool operator==(const WordAlignment&) const = default;
};

enum class AlignerMode { model1, diagonal };
enum class Symmetrization { intersect, unionize };

struct AlignerOptions {
  AlignerMode mode = AlignerMode::diagonal;
  int iterations = 5;
  double null_prob = 0.08;     // p0
  double initial_tension = 4;  // lambda, diagonal mode only
};

// Lexical translation table over lowercased word types plus the diagonal
// reparameterization (tension lambda, null probability p0). For every source
// type the target distribution sums to 1 within 1e-6 after every M-step.
class AlignerModel {
 public:
  AlignerModel() = default;

  double prob(const std::string& source_lc, const std::string& target_lc) const;
  double null_target_prob(const std::string& target_lc) const;

  AlignerMode mode = AlignerMode::diagonal;
  double tension = 4.0;
  double null_prob = 0.08;

  // source type -> (target type -> probability); "" keys nothing, the null
  // word lives in its own map
  std::unordered_map<std::string, std::unordered_map<std::string, double>> table;
  std::unordered_map<std::string, double> null_table;

  // corpus log-likelihood after each EM iteration (not persisted)
  std::vector<double> iteration_ll;

  void save(const std::string& path) const;  // "AMRX-ALIGNER v1" text format
  static AlignerModel load(const std::string& path);
};

// EM training. The E-step uses a uniform link prior in model1 mode and a
// normalized exp(-lambda * |i/|S| - j/|T||) prior in diagonal mode; the null
// word takes probability p0. Diagonal mode follows each iteration with a
// projected gradient step on lambda.
AlignerModel train_aligner(const std::vector<SentencePair>& corpus,
                           const AlignerOptions& opts = {});

// Per target position, the argmax source link; null wins ties and unseen
// words, equal link scores break toward the smaller source index.
WordAlignment viterbi_align(const AlignerModel& model, const SentencePair& pair);

WordAlignment symmetrize(const WordAlignment& forward, const WordAlignment& backward,
                         Symmetrization method);

// Pharaoh interchange format: "0-0 3-3 5-4", ascending (i, j).
std::string pharaoh_format(const WordAlignment& a);
WordAlignment pharaoh_parse(std::string_view line);

void write_pharaoh(const std::string& path, const std::vector<WordAlignment>& v);
std::vector<WordAlignment> read_pharaoh(const std::string& path);

}  // namespace amrx
