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

#include <span>
#include <utility>

namespace amrx {

// Sample Pearson correlation; throws ValidationError for n < 2 or zero
// variance in either variable.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Kendall tau-b with tie correction: (C - D) / sqrt((n0 - n1)(n0 - n2)).
// Throws when a side is entirely tied (zero denominator).
double kendall_tau_b(std::span<const double> xs, std::span<const double> ys);

// Ordinary least squares fit y = slope * x + intercept.
std::pair<double, double> linear_regression(std::span<const double> xs,
                                            std::span<const double> ys);

}  // namespace amrx
