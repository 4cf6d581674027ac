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

#include "amrx/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "amrx/util.hpp"

namespace amrx {

namespace {

std::map<std::string, long> ngram_counts(const std::vector<std::string>& tokens, int n) {
  std::map<std::string, long> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) key += '\x01' + tokens[i + k];
    counts[key] += 1;
  }
  return counts;
}

}  // namespace

BleuReport bleu_score(const std::vector<std::string>& hyps,
                      const std::vector<std::string>& refs, bool smoothing) {
  if (hyps.size() != refs.size())
    throw ValidationError("bleu corpus length mismatch: " + std::to_string(hyps.size()) +
                          " vs " + std::to_string(refs.size()));
  if (hyps.empty()) throw ValidationError("bleu corpus is empty");

  BleuReport report;
  std::array<long, 4> matched{}, total{};
  for (size_t s = 0; s < hyps.size(); ++s) {
    auto hyp = split_ws(hyps[s]);
    auto ref = split_ws(refs[s]);
    report.hyp_length += static_cast<long>(hyp.size());
    report.ref_length += static_cast<long>(ref.size());
    for (int n = 1; n <= 4; ++n) {
      auto hc = ngram_counts(hyp, n);
      auto rc = ngram_counts(ref, n);
      for (const auto& [gram, count] : hc) {
        auto it = rc.find(gram);
        long clip = it == rc.end() ? 0 : std::min(count, it->second);
        matched[n - 1] += clip;
        total[n - 1] += count;
      }
    }
  }

  report.brevity_penalty =
      report.hyp_length >= report.ref_length || report.hyp_length == 0
          ? 1.0
          : std::exp(1.0 - static_cast<double>(report.ref_length) /
                               static_cast<double>(report.hyp_length));

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 0; n < 4; ++n) {
    long m = matched[n], t = total[n];
    if (smoothing && n > 0) {
      m += 1;
      t += 1;
    }
    report.precisions[n] = t > 0 ? static_cast<double>(m) / static_cast<double>(t) : 0.0;
    if (report.precisions[n] <= 0.0)
      zero = true;
    else
      log_sum += 0.25 * std::log(report.precisions[n]);
  }
  report.bleu = zero ? 0.0 : report.brevity_penalty * std::exp(log_sum);
  return report;
}

std::string BleuReport::percent() const { return format_fixed(bleu * 100.0, 2); }

}  // namespace amrx
