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

namespace amrx {

// Maximum spanning arborescence (Chu-Liu-Edmonds) over a dense directed
// graph. score[u][v] is the weight of edge u -> v; self weights are ignored.
// Returns the parent of every node, -1 for the root. All argmax ties break
// toward the smaller index, so the result is deterministic.
std::vector<int> max_arborescence(const std::vector<std::vector<double>>& score,
                                  int root);

}  // namespace amrx
