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

#include "amrx/stats.hpp"

#include <cmath>
#include <map>

#include "amrx/util.hpp"

namespace amrx {

namespace {

void check_sizes(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw ValidationError("correlation input length mismatch");
  if (xs.size() < 2) throw ValidationError("correlation needs at least 2 points");
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_sizes(xs, ys);
  const size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ValidationError("pearson undefined: zero variance");
  return sxy / std::sqrt(sxx * syy);
}

double kendall_tau_b(std::span<const double> xs, std::span<const double> ys) {
  check_sizes(xs, ys);
  const size_t n = xs.size();
  long concordant = 0, discordant = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
      double p = dx * dy;
      if (p > 0)
        ++concordant;
      else if (p < 0)
        ++discordant;
    }
  auto tie_pairs = [](std::span<const double> v) {
    std::map<double, long> groups;
    for (double x : v) groups[x] += 1;
    long t = 0;
    for (const auto& [value, count] : groups) t += count * (count - 1) / 2;
    return t;
  };
  double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
  double n1 = static_cast<double>(tie_pairs(xs));
  double n2 = static_cast<double>(tie_pairs(ys));
  double denom = std::sqrt((n0 - n1) * (n0 - n2));
  if (denom == 0.0) throw ValidationError("kendall tau-b undefined: all values tied");
  return (static_cast<double>(concordant) - static_cast<double>(discordant)) / denom;
}

std::pair<double, double> linear_regression(std::span<const double> xs,
                                            std::span<const double> ys) {
  check_sizes(xs, ys);
  const size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw ValidationError("regression undefined: degenerate x");
  double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace amrx
