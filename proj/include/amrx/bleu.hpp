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

#include <array>
#include <string>
#include <vector>

namespace amrx {

struct BleuReport {
  double bleu = 0.0;                       // [0, 1]
  std::array<double, 4> precisions{};      // modified (clipped) p1..p4
  double brevity_penalty = 1.0;
  long hyp_length = 0;
  long ref_length = 0;

  // Table-style percentage with two decimals, e.g. "23.83"
  std::string percent() const;
};

// Corpus-level BLEU-4, uniform weights, clipped n-gram counts,
// BP = min(1, exp(1 - ref_len/hyp_len)). Unsmoothed by default: any zero
// precision zeroes the score. smoothing adds one to numerator and
// denominator of p2..p4.
BleuReport bleu_score(const std::vector<std::string>& hyps,
                      const std::vector<std::string>& refs, bool smoothing = false);

}  // namespace amrx
