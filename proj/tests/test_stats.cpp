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

#include <doctest.h>

#include <cmath>

#include "amrx/stats.hpp"
#include "amrx/util.hpp"
#include "table1.hpp"

using namespace amrx;

TEST_CASE("pearson: affine relation with positive slope") {
  std::vector<double> xs = {1, 2, 3, 4, 5};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(2 * x + 1);
  CHECK(pearson(xs, ys) == doctest::Approx(1.0));
}

TEST_CASE("pearson: benchmark columns reproduce the published coefficients") {
  CHECK(pearson(fixtures::benchmark_gold(), fixtures::benchmark_cycle()) ==
        doctest::Approx(0.94953).epsilon(1e-4));
  CHECK(pearson(fixtures::benchmark_gold(), fixtures::benchmark_silver()) ==
        doctest::Approx(0.46871).epsilon(1e-4));
  // excluding the zh rows
  CHECK(pearson(fixtures::benchmark_gold(true), fixtures::benchmark_cycle(true)) ==
        doctest::Approx(0.97153).epsilon(1e-4));
  CHECK(pearson(fixtures::benchmark_gold(true), fixtures::benchmark_silver(true)) ==
        doctest::Approx(0.86629).epsilon(1e-4));
}

TEST_CASE("pearson: invariant under positive affine transforms") {
  std::vector<double> xs = {3, 1, 4, 1, 5, 9, 2, 6};
  std::vector<double> ys = {2, 7, 1, 8, 2, 8, 1, 8};
  double base = pearson(xs, ys);
  std::vector<double> xs2;
  for (double x : xs) xs2.push_back(0.01 * x + 100.0);
  CHECK(pearson(xs2, ys) == doctest::Approx(base));
}

TEST_CASE("pearson: errors") {
  std::vector<double> flat = {1, 1, 1};
  std::vector<double> ys = {1, 2, 3};
  CHECK_THROWS_AS(pearson(flat, ys), ValidationError);
  std::vector<double> one = {1};
  CHECK_THROWS_AS(pearson(one, one), ValidationError);
}

TEST_CASE("kendall tau-b: identical sequences") {
  std::vector<double> xs = {3, 1, 4, 1, 5};
  CHECK(kendall_tau_b(xs, xs) == doctest::Approx(1.0));
}

TEST_CASE("kendall tau-b: benchmark columns") {
  CHECK(kendall_tau_b(fixtures::benchmark_gold(), fixtures::benchmark_cycle()) ==
        doctest::Approx(0.81552).epsilon(1e-4));
  CHECK(kendall_tau_b(fixtures::benchmark_gold(), fixtures::benchmark_silver()) ==
        doctest::Approx(0.4).epsilon(1e-4));
}

TEST_CASE("kendall tau-b: invariant under strictly increasing transforms") {
  std::vector<double> xs = {3, 1, 4, 1, 5, 9, 2, 6};
  std::vector<double> ys = {2, 7, 1, 8, 2, 8, 1, 8};
  double base = kendall_tau_b(xs, ys);
  std::vector<double> ys2;
  for (double y : ys) ys2.push_back(std::exp(y));
  CHECK(kendall_tau_b(xs, ys2) == doctest::Approx(base));
}

TEST_CASE("kendall tau-b: all tied input is an error") {
  std::vector<double> flat = {2, 2, 2};
  std::vector<double> ys = {1, 2, 3};
  CHECK_THROWS_AS(kendall_tau_b(flat, ys), ValidationError);
}

TEST_CASE("regression: exact small cases") {
  auto [slope, intercept] = linear_regression(std::vector<double>{0, 1},
                                              std::vector<double>{1, 3});
  CHECK(slope == doctest::Approx(2.0));
  CHECK(intercept == doctest::Approx(1.0));
  std::vector<double> xs = {1, 2, 3, 7};
  auto [s2, i2] = linear_regression(xs, xs);
  CHECK(s2 == doctest::Approx(1.0));
  CHECK(i2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("regression: benchmark lines") {
  auto [slope, intercept] =
      linear_regression(fixtures::benchmark_gold(), fixtures::benchmark_cycle());
  CHECK(slope == doctest::Approx(0.9873).epsilon(1e-3));
  CHECK(intercept == doctest::Approx(1.5276).epsilon(1e-3));
  auto [s2, i2] =
      linear_regression(fixtures::benchmark_gold(), fixtures::benchmark_silver());
  CHECK(s2 == doctest::Approx(0.3322).epsilon(1e-3));
  CHECK(i2 == doctest::Approx(35.825).epsilon(1e-3));
}

TEST_CASE("regression: degenerate x") {
  std::vector<double> flat = {5, 5};
  std::vector<double> ys = {1, 2};
  CHECK_THROWS_AS(linear_regression(flat, ys), ValidationError);
}
