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

#include <vector>

namespace fixtures {

// Published benchmark: 16 systems x (silver, gold, cycle) Smatch percentages,
// four languages with four systems each.
struct BenchmarkRow {
  const char* language;
  const char* system;
  double silver, gold, cycle;
};

inline const std::vector<BenchmarkRow> kBenchmark = {
    {"it", "proj", 45, 43, 45}, {"it", "mt-a", 51, 52, 51},
    {"it", "mt-b", 49, 43, 41}, {"it", "mt-c", 52, 58, 59},
    {"es", "proj", 44, 42, 44}, {"es", "mt-a", 53, 53, 51},
    {"es", "mt-b", 51, 43, 42}, {"es", "mt-c", 56, 60, 60},
    {"de", "proj", 45, 39, 43}, {"de", "mt-a", 50, 49, 49},
    {"de", "mt-b", 47, 38, 39}, {"de", "mt-c", 54, 57, 59},
    {"zh", "proj", 45, 35, 32}, {"zh", "mt-a", 57, 42, 48},
    {"zh", "mt-b", 57, 39, 40}, {"zh", "mt-c", 64, 50, 55},
};

inline std::vector<double> benchmark_gold(bool exclude_zh = false) {
  std::vector<double> out;
  for (const auto& r : kBenchmark)
    if (!exclude_zh || std::string_view(r.language) != "zh") out.push_back(r.gold);
  return out;
}
inline std::vector<double> benchmark_silver(bool exclude_zh = false) {
  std::vector<double> out;
  for (const auto& r : kBenchmark)
    if (!exclude_zh || std::string_view(r.language) != "zh") out.push_back(r.silver);
  return out;
}
inline std::vector<double> benchmark_cycle(bool exclude_zh = false) {
  std::vector<double> out;
  for (const auto& r : kBenchmark)
    if (!exclude_zh || std::string_view(r.language) != "zh") out.push_back(r.cycle);
  return out;
}

}  // namespace fixtures
