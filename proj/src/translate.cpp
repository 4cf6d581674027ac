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

#include "amrx/translate.hpp"

namespace amrx {

std::unordered_map<std::string, std::string> read_lexicon(const std::string& path) {
  std::unordered_map<std::string, std::string> lex;
  auto lines = read_lines(path, true);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    size_t tab = lines[i].find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= lines[i].size())
      throw ValidationError(path + ": line " + std::to_string(i + 1) +
                            ": expected 'source<TAB>target'");
    lex[lines[i].substr(0, tab)] = lines[i].substr(tab + 1);
  }
  return lex;
}

DictionaryTranslator DictionaryTranslator::from_file(const std::string& path) {
  return DictionaryTranslator(read_lexicon(path));
}

std::vector<std::string> DictionaryTranslator::translate(
    const std::vector<std::string>& sentences, Direction) const {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    std::vector<std::string> words = split_ws(sentence);
    for (auto& w : words) {
      auto it = lexicon_.find(w);
      if (it != lexicon_.end()) w = it->second;
    }
    out.push_back(join(words, " "));
  }
  return out;
}

FileTranslator::FileTranslator(const std::string& e2f_path, const std::string& f2e_path)
    : e2f_(read_lines(e2f_path, true)), f2e_(read_lines(f2e_path, true)) {}

std::vector<std::string> FileTranslator::translate(
    const std::vector<std::string>& sentences, Direction dir) const {
  const auto& lines = dir == Direction::e2f ? e2f_ : f2e_;
  if (lines.size() != sentences.size())
    throw ValidationError("translation file has " + std::to_string(lines.size()) +
                          " lines for " + std::to_string(sentences.size()) +
                          " input sentences");
  return lines;
}

std::vector<std::string> back_translate(const Translator& t,
                                        const std::vector<std::string>& sentences) {
  return t.translate(t.translate(sentences, Direction::e2f), Direction::f2e);
}

}  // namespace amrx
