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

#include "amrx/corpus.hpp"

#include <sstream>

namespace amrx {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

std::vector<CorpusBlock> parse_corpus(std::string_view text, const std::string& origin) {
  std::vector<CorpusBlock> blocks;
  std::istringstream in{std::string(text)};
  std::string line;

  CorpusBlock cur;
  std::string penman;
  bool any = false;

  auto flush = [&]() {
    if (!any) return;
    if (penman.empty())
      throw ValidationError(origin + ": block " + std::to_string(blocks.size()) +
                            " has no graph");
    try {
      cur.graph = parse_penman(penman);
    } catch (const ValidationError& e) {
      throw ValidationError(origin + ": block " + std::to_string(blocks.size()) + ": " +
                            e.what());
    }
    blocks.push_back(std::move(cur));
    cur = CorpusBlock{};
    penman.clear();
    any = false;
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    any = true;
    if (starts_with(line, "# ::id ")) {
      cur.id = line.substr(7);
    } else if (starts_with(line, "# ::snt ")) {
      cur.tokens = split_ws(line.substr(8));
    } else if (starts_with(line, "# ::alignments")) {
      cur.alignment = alignment_from_metadata(
          line.size() > 14 ? std::string_view(line).substr(15) : std::string_view{});
    } else if (starts_with(line, "#")) {
      // other metadata ignored
    } else {
      if (!penman.empty()) penman += ' ';
      penman += line;
    }
  }
  flush();
  return blocks;
}

std::vector<CorpusBlock> read_corpus(const std::string& path) {
  return parse_corpus(read_file(path), path);
}

std::string format_corpus(const std::vector<CorpusBlock>& blocks) {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    out += "# ::id " + (b.id.empty() ? std::to_string(i) : b.id) + "\n";
    out += "# ::snt " + join(b.tokens, " ") + "\n";
    if (b.alignment && !b.alignment->empty())
      out += "# ::alignments " + alignment_to_metadata(*b.alignment) + "\n";
    out += serialize_penman(b.graph) + "\n";
    if (i + 1 < blocks.size()) out += "\n";
  }
  return out;
}

void write_corpus(const std::string& path, const std::vector<CorpusBlock>& blocks) {
  write_file(path, format_corpus(blocks));
}

void write_sidecar(const std::string& path, const std::vector<CorpusBlock>& blocks) {
  std::vector<std::string> lines;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].alignment)
      lines.push_back(alignment_to_sidecar(static_cast<int>(i), *blocks[i].alignment));
  write_lines(path, lines);
}

void attach_sidecar(std::vector<CorpusBlock>& blocks, const std::string& path) {
  for (const auto& line : read_lines(path)) {
    if (line.empty()) continue;
    auto [record, alignment] = alignment_from_sidecar(line);
    if (record < 0 || record >= static_cast<int>(blocks.size()))
      throw ValidationError(path + ": record " + std::to_string(record) +
                            " out of range");
    blocks[record].alignment = std::move(alignment);
  }
}

}  // namespace amrx
