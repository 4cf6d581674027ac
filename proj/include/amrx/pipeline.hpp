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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "amrx/eval.hpp"

namespace amrx {

struct SplitSizes {
  int train = 0;
  int dev = 0;
  int test = 0;
  int total() const { return train + dev + test; }
};

enum class SplitStrategy { head, random };

// Three splits per projection direction. Pairs are always stored (e, f);
// "direction" names which projection step consumes them.
struct DatasetSplits {
  // [direction][split]: split 0 = train, 1 = dev, 2 = test
  std::array<std::array<std::vector<SentencePair>, 3>, 2> splits;
};

// Deterministic for a fixed seed; validates line counts, UTF-8, and that no
// sentence-pair content hash lands in two splits.
DatasetSplits ingest_and_split(const std::vector<std::string>& e_lines,
                               const std::vector<std::string>& f_lines,
                               SplitSizes sizes, uint64_t seed, SplitStrategy strategy);

// Flat key=value experiment configuration (see README for the key list).
struct PipelineConfig {
  std::map<std::string, std::string> values;

  static PipelineConfig from_file(const std::string& path);
  void apply_overrides(const std::vector<std::string>& key_value_args);

  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  bool has(const std::string& key) const { return values.count(key) > 0; }
  long get_long(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;

  void validate() const;  // required keys + referenced inputs exist
};

// Runs one stage at a time, each stage talking to the next only through
// files. A stage is skipped when its manifest still matches every input and
// output hash; an output that exists with the wrong hash is a tampered
// artifact and aborts the run.
class StageRunner {
 public:
  StageRunner(std::string out_dir, std::string params_fingerprint);

  void run(const std::string& name, const std::vector<std::string>& inputs,
           const std::vector<std::string>& outputs, const std::function<void()>& fn);

  const std::string& out_dir() const { return out_dir_; }

 private:
  std::string out_dir_;
  std::string fingerprint_;
};

// Executes the configured experiment end to end: ingest, word alignment, AMR
// alignment, projection, parser training, and the three evaluations. Every
// stage persists its artifact plus a manifest, so reruns only recompute what
// changed. Returns the scores and writes results.tsv under the output dir.
ExperimentRecord run_experiment(const PipelineConfig& config);

}  // namespace amrx
