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

// Worked examples used across the test suites: a sovereignty sentence with
// its Italian translation, four parses in different languages, and six small
// graphs covering the usual translational divergences.

namespace fixtures {

inline constexpr const char* kSovereignty =
    "(s / sovereignty :poss (c / country :mod (e / each)) :domain (t / this))";
inline constexpr const char* kSovereigntyCanonical =
    "(s / sovereignty :domain (t / this) :poss (c / country :mod (e / each)))";
inline constexpr const char* kSovereigntySentence =
    "This is the sovereignty of each country";

inline constexpr const char* kAdopt =
    "(a / adopt-01 :ARG0 (c / commission) :ARG1 (c2 / communicate-01 :ARG0 c "
    ":mod (a2 / another)) :time (d / date-entity :mod (f / final) :year 1998))";
inline constexpr const char* kAssess =
    "(a / assess-01 :ARG1 (i / impact-01 :ARG1 (t / type :mod (t2 / this)) "
    ":ARG1 (e / export-01 :ARG0 t :ARG1 (c / cocoa))))";
inline constexpr const char* kDoNot =
    "(d / do-02 :location (c / country) :polarity - :ARG0 (s / state "
    ":quant (m / many) :ARG0-of (h / have-org-role-91 :ARG2 (m2 / member))))";
inline constexpr const char* kRepatriate =
    "(a / and :op1 (r / repatriate-01 :ARG1 (r2 / refugee)) "
    ":op2 (i / intend-01) :op2 (s / society))";

inline constexpr const char* kEnvy = "(e / envy :domain (i / i))";
inline constexpr const char* kAnswer = "(a / answer-01 :ARG0 (w / we))";
inline constexpr const char* kEnter = "(e / enter-01 :ARG1 (h / home))";
inline constexpr const char* kEat = "(e / eat-01 :ARG0 (i / i))";
inline constexpr const char* kFear = "(f / fear-01 :ARG0 (i / i) :ARG1 i)";
inline constexpr const char* kLike =
    "(l / like-01 :ARG0 (i / i) :ARG1 (g / grape :ARG0 i))";

inline constexpr const char* kAllGraphs[] = {
    kSovereignty, kAdopt, kAssess, kDoNot, kRepatriate,
    kEnvy,        kAnswer, kEnter, kEat,   kFear,       kLike};

}  // namespace fixtures
