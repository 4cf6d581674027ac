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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amrx {

// Bad user input: malformed files, inconsistent sizes, invalid config.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pipeline stage failed mid-run (missing artifact, tampered file, ...).
struct StageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a, 64 bit. Stable across platforms; used for content hashes in
// manifests and split-disjointness checks (integrity, not security).
inline uint64_t fnv1a64(std::string_view data, uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t hash_file(const std::string& path);
std::string hash_hex(uint64_t h);

// ASCII-only lowercasing; non-ASCII bytes pass through untouched so the
// behavior is locale-free and identical everywhere.
std::string lowercase(std::string_view s);

std::vector<std::string> split_ws(std::string_view line);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool utf8_valid(std::string_view s);

// Reads all lines (LF or CRLF). With validate_utf8, throws ValidationError
// naming the 1-based offending line.
std::vector<std::string> read_lines(const std::string& path, bool validate_utf8 = false);
void write_lines(const std::string& path, const std::vector<std::string>& lines);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Fixed-point formatting, the one used by every report (no locale).
std::string format_fixed(double x, int decimals);

// Deterministic PRNG plumbing. std::shuffle and the distributions are not
// bit-specified by the standard, so anything that must reproduce across
// compilers draws through these.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Unbiased draw in [0, n).
  uint64_t below(uint64_t n);
  double unit();  // [0, 1)

 private:
  uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

// Named sub-seed derivation: every stage draws from the one config seed.
inline uint64_t sub_seed(uint64_t master, std::string_view stage) {
  return fnv1a64(stage) ^ (master * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL);
}

}  // namespace amrx
