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

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "amrx/util.hpp"

namespace amrx {

enum class Direction { e2f, f2e };

// Sentence-level translation interface. Implementations are stateless after
// construction; output sentence count always equals input count.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::vector<std::string> translate(const std::vector<std::string>& sentences,
                                             Direction dir) const = 0;
};

// Word-for-word translation through a single lexicon applied in either
// direction; unknown words are copied through. The lexicon file has one
// "source<TAB>target" entry per line, and is expected to carry entries for
// both directions when round trips matter.
class DictionaryTranslator : public Translator {
 public:
  explicit DictionaryTranslator(std::unordered_map<std::string, std::string> lexicon)
      : lexicon_(std::move(lexicon)) {}
  static DictionaryTranslator from_file(const std::string& path);

  std::vector<std::string> translate(const std::vector<std::string>& sentences,
                                     Direction dir) const override;

 private:
  std::unordered_map<std::string, std::string> lexicon_;
};

// Serves pre-computed translations from line-aligned files, one per
// direction; this is how external MT output enters the pipeline. Line i must
// be the translation of input sentence i.
class FileTranslator : public Translator {
 public:
  FileTranslator(const std::string& e2f_path, const std::string& f2e_path);

  std::vector<std::string> translate(const std::vector<std::string>& sentences,
                                     Direction dir) const override;

 private:
  std::vector<std::string> e2f_, f2e_;
};

// translate there and back again; sentence count preserved
std::vector<std::string> back_translate(const Translator& t,
                                        const std::vector<std::string>& sentences);

std::unordered_map<std::string, std::string> read_lexicon(const std::string& path);

}  // namespace amrx
