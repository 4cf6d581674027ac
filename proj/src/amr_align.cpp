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

#include "amrx/amr_align.hpp"

#include <algorithm>

namespace amrx {

std::map<int, std::set<std::string>> AmrAlignment::inverse() const {
  std::map<int, std::set<std::string>> inv;
  for (const auto& [addr, toks] : entries)
    for (int t : toks) inv[t].insert(addr);
  return inv;
}

std::string strip_sense(std::string_view concept_label) {
  if (concept_label.size() >= 3) {
    size_t n = concept_label.size();
    if (concept_label[n - 3] == '-' && isdigit(static_cast<unsigned char>(concept_label[n - 2])) &&
        isdigit(static_cast<unsigned char>(concept_label[n - 1])))
      return std::string(concept_label.substr(0, n - 3));
  }
  return std::string(concept_label);
}

std::string strip_punct(std::string_view token) {
  static const std::string punct = ".,;:!?()[]{}\"'`";
  size_t b = 0, e = token.size();
  while (b < e && punct.find(token[b]) != std::string::npos) ++b;
  while (e > b && punct.find(token[e - 1]) != std::string::npos) --e;
  return std::string(token.substr(b, e - b));
}

namespace {

std::string strip_quotes(std::string_view v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
    return std::string(v.substr(1, v.size() - 2));
  return std::string(v);
}

const std::set<std::string> kNegationTokens = {"no", "not", "non", "never"};
const std::set<std::string> kTemplateConcepts = {"date-entity", "name"};

}  // namespace

AmrAlignment align_concepts(const std::vector<std::string>& tokens, const AmrGraph& g) {
  Addressing addr = address_graph(g);
  AmrAlignment out;

  std::vector<std::string> clean(tokens.size()), clean_lc(tokens.size());
  for (size_t j = 0; j < tokens.size(); ++j) {
    clean[j] = strip_punct(tokens[j]);
    clean_lc[j] = lowercase(clean[j]);
  }
  std::vector<bool> used(tokens.size(), false);
  std::set<std::string> aligned;  // addresses already aligned

  auto claim = [&](const std::string& address, size_t j) {
    out.add(address, static_cast<int>(j));
    used[j] = true;
    aligned.insert(address);
  };

  // rule 1: exact concept match after sense-suffix strip
  for (const auto& item : addr.items) {
    if (item.node < 0) continue;
    std::string c = strip_sense(g.nodes[item.node].concept_label);
    for (size_t j = 0; j < tokens.size(); ++j)
      if (!used[j] && clean_lc[j] == c) {
        claim(item.address, j);
        break;
      }
  }
  // rule 2: 4-char prefix
  for (const auto& item : addr.items) {
    if (item.node < 0 || aligned.count(item.address)) continue;
    std::string c = strip_sense(g.nodes[item.node].concept_label);
    if (c.size() < 4) continue;
    for (size_t j = 0; j < tokens.size(); ++j)
      if (!used[j] && clean_lc[j].size() >= 4 && clean_lc[j].compare(0, 4, c, 0, 4) == 0) {
        claim(item.address, j);
        break;
      }
  }
  // rule 3: constant value equals token
  for (const auto& item : addr.items) {
    if (item.constant_edge < 0 || aligned.count(item.address)) continue;
    std::string v = strip_quotes(g.edges[item.constant_edge].constant);
    for (size_t j = 0; j < tokens.size(); ++j)
      if (!used[j] && clean[j] == v) {
        claim(item.address, j);
        break;
      }
  }
  // rule 4: polarity "-" to a negation token
  for (const auto& item : addr.items) {
    if (item.constant_edge < 0 || aligned.count(item.address)) continue;
    const auto& e = g.edges[item.constant_edge];
    if (e.constant != "-" || e.relation != ":polarity") continue;
    for (size_t j = 0; j < tokens.size(); ++j)
      if (!used[j] && kNegationTokens.count(clean_lc[j])) {
        claim(item.address, j);
        break;
      }
  }
  // entity templates: an unaligned template head adopts the span covering
  // whatever its children matched
  auto out_edges = canonical_out_edges(g);
  for (const auto& item : addr.items) {
    if (item.node < 0 || aligned.count(item.address)) continue;
    if (!kTemplateConcepts.count(g.nodes[item.node].concept_label)) continue;
    int lo = -1, hi = -1;
    for (int ei : out_edges[item.node]) {
      const auto& e = g.edges[ei];
      std::string child_addr;
      if (e.is_constant()) {
        child_addr = addr.constant_address.at(ei);
      } else {
        if (!out_edges[e.target].empty()) continue;  // template spans leaves only
        child_addr = addr.node_address[e.target];
      }
      auto it = out.entries.find(child_addr);
      if (it == out.entries.end()) continue;
      for (int t : it->second) {
        lo = (lo < 0 || t < lo) ? t : lo;
        hi = (hi < 0 || t > hi) ? t : hi;
      }
    }
    if (lo >= 0)
      for (int t = lo; t <= hi; ++t) out.add(item.address, t);
  }
  return out;
}

AlignmentCoverage coverage(const AmrAlignment& a, const AmrGraph& g, int token_count) {
  AlignmentCoverage c;
  Addressing addr = address_graph(g);
  c.nodes_total = static_cast<int>(addr.items.size());
  c.tokens_total = token_count;
  for (const auto& item : addr.items)
    if (a.entries.count(item.address)) ++c.nodes_aligned;
  std::set<int> toks;
  for (const auto& [address, ts] : a.entries) toks.insert(ts.begin(), ts.end());
  c.tokens_aligned = static_cast<int>(toks.size());
  return c;
}

namespace {

// maximal contiguous runs of an ascending index set
std::vector<std::pair<int, int>> runs(const std::set<int>& s) {
  std::vector<std::pair<int, int>> out;
  for (int t : s) {
    if (!out.empty() && out.back().second == t - 1)
      out.back().second = t;
    else
      out.push_back({t, t});
  }
  return out;
}

void parse_span_item(std::string_view item, char sep, AmrAlignment& a) {
  size_t bar = item.find(sep);
  size_t dash = item.rfind('-');
  if (bar == std::string_view::npos || dash == std::string_view::npos || dash < bar)
    throw ValidationError("malformed alignment item '" + std::string(item) + "'");
  std::string address(item.substr(0, bar));
  int b = std::stoi(std::string(item.substr(bar + 1, dash - bar - 1)));
  int e = std::stoi(std::string(item.substr(dash + 1)));
  if (b < 0 || e < b)
    throw ValidationError("bad span in alignment item '" + std::string(item) + "'");
  for (int t = b; t <= e; ++t) a.add(address, t);
}

}  // namespace

std::string alignment_to_metadata(const AmrAlignment& a) {
  std::vector<std::string> items;
  for (const auto& [address, toks] : a.entries)
    for (auto [b, e] : runs(toks))
      items.push_back(address + "|" + std::to_string(b) + "-" + std::to_string(e));
  return join(items, " ");
}

AmrAlignment alignment_from_metadata(std::string_view payload) {
  AmrAlignment a;
  for (const auto& item : split_ws(payload)) parse_span_item(item, '|', a);
  return a;
}

std::string alignment_to_sidecar(int record, const AmrAlignment& a) {
  std::vector<std::string> items;
  for (const auto& [address, toks] : a.entries)
    for (auto [b, e] : runs(toks))
      items.push_back(address + ":" + std::to_string(b) + "-" + std::to_string(e));
  return std::to_string(record) + "\t" + join(items, " ");
}

std::pair<int, AmrAlignment> alignment_from_sidecar(std::string_view line) {
  size_t tab = line.find('\t');
  if (tab == std::string_view::npos)
    throw ValidationError("sidecar line missing record number");
  int record = std::stoi(std::string(line.substr(0, tab)));
  AmrAlignment a;
  for (const auto& item : split_ws(line.substr(tab + 1))) parse_span_item(item, ':', a);
  return {record, a};
}

}  // namespace amrx
