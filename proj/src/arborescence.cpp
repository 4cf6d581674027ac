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

#include "amrx/arborescence.hpp"

#include <algorithm>
#include <stdexcept>

namespace amrx {

namespace {

using Matrix = std::vector<std::vector<double>>;

std::vector<int> solve(const Matrix& s, int root) {
  const int n = static_cast<int>(s.size());
  std::vector<int> pre(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if (best < 0 || s[u][v] > s[best][v]) best = u;
    }
    pre[v] = best;
  }

  // look for a cycle in the greedy predecessor forest
  std::vector<int> color(n, 0);  // 0 fresh, 1 on current walk, 2 settled
  std::vector<int> cycle;
  for (int v = 0; v < n && cycle.empty(); ++v) {
    if (color[v]) continue;
    std::vector<int> path;
    int u = v;
    while (u != -1 && color[u] == 0) {
      color[u] = 1;
      path.push_back(u);
      u = pre[u];
    }
    if (u != -1 && color[u] == 1) {
      auto it = std::find(path.begin(), path.end(), u);
      cycle.assign(it, path.end());
    }
    for (int x : path) color[x] = 2;
  }
  if (cycle.empty()) return pre;

  // contract the cycle into one supernode and recurse
  std::vector<bool> in_cycle(n, false);
  for (int v : cycle) in_cycle[v] = true;

  std::vector<int> to_new(n, -1), to_old;
  for (int v = 0; v < n; ++v)
    if (!in_cycle[v]) {
      to_new[v] = static_cast<int>(to_old.size());
      to_old.push_back(v);
    }
  const int super = static_cast<int>(to_old.size());
  const int m = super + 1;

  constexpr double kNegInf = -1e300;
  Matrix rs(m, std::vector<double>(m, kNegInf));
  std::vector<int> entry(m, -1);  // outside node (new idx) -> cycle node it enters
  std::vector<int> exit(m, -1);   // outside node (new idx) -> cycle node leaving to it

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!in_cycle[u] && !in_cycle[v]) {
        rs[to_new[u]][to_new[v]] = s[u][v];
      } else if (!in_cycle[u] && in_cycle[v]) {
        // entering the cycle: charge the replaced internal edge
        double gain = s[u][v] - s[pre[v]][v];
        int a = to_new[u];
        if (gain > rs[a][super]) {
          rs[a][super] = gain;
          entry[a] = v;
        }
      } else if (in_cycle[u] && !in_cycle[v]) {
        int b = to_new[v];
        if (s[u][v] > rs[super][b]) {
          rs[super][b] = s[u][v];
          exit[b] = u;
        }
      }
    }
  }

  std::vector<int> rpre = solve(rs, to_new[root]);

  std::vector<int> out(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (in_cycle[v]) {
      out[v] = pre[v];  // cycle edges survive except where the entry breaks in
    } else {
      int p = rpre[to_new[v]];
      out[v] = p == super ? exit[to_new[v]] : to_old[p];
    }
  }
  int super_parent = rpre[super];
  if (super_parent < 0)
    throw std::logic_error("contracted cycle ended up with no parent");
  int broken = entry[super_parent];
  out[broken] = to_old[super_parent];
  return out;
}

}  // namespace

std::vector<int> max_arborescence(const Matrix& score, int root) {
  const int n = static_cast<int>(score.size());
  if (n == 0) return {};
  if (root < 0 || root >= n) throw std::invalid_argument("arborescence root out of range");
  for (const auto& row : score)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("arborescence score matrix not square");
  if (n == 1) return {-1};
  return solve(score, root);
}

}  // namespace amrx
