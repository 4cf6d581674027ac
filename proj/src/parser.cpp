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

#include "amrx/parser.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "amrx/arborescence.hpp"

namespace amrx {

namespace {

// Per-block alignment view indexed by addressable item.
struct BlockView {
  const AmrGraph& g;
  Addressing addr;
  std::vector<std::vector<int>> out_edges;           // canonical, per node
  std::map<std::string, int> item_of_address;        // address -> item index
  std::vector<std::set<int>> tokens_of_item;         // item -> aligned tokens
  std::vector<int> item_of_node;                     // node index -> item index
  std::map<int, int> item_of_constant;               // edge index -> item index

  BlockView(const CorpusBlock& block) : g(block.graph), addr(address_graph(block.graph)) {
    out_edges = canonical_out_edges(g);
    item_of_node.assign(g.nodes.size(), -1);
    tokens_of_item.resize(addr.items.size());
    for (size_t i = 0; i < addr.items.size(); ++i) {
      const auto& item = addr.items[i];
      item_of_address[item.address] = static_cast<int>(i);
      if (item.node >= 0)
        item_of_node[item.node] = static_cast<int>(i);
      else
        item_of_constant[item.constant_edge] = static_cast<int>(i);
    }
    if (block.alignment)
      for (const auto& [address, toks] : block.alignment->entries) {
        auto it = item_of_address.find(address);
        if (it == item_of_address.end())
          throw ValidationError("alignment address '" + address +
                                "' not present in graph");
        tokens_of_item[it->second].insert(toks.begin(), toks.end());
      }
  }

  bool node_is_leaf(int node) const { return out_edges[node].empty(); }
  bool item_aligned(int item) const { return !tokens_of_item[item].empty(); }
};

// Induced fragment graph over the given node items plus constant children;
// rooted at the minimum-depth member, restricted to what the root reaches.
AmrGraph build_fragment(const BlockView& view, const std::vector<int>& node_items,
                        const std::set<int>& constant_edges) {
  const AmrGraph& g = view.g;
  int root_item = -1;
  for (int it : node_items)
    if (root_item < 0 || view.addr.items[it].depth < view.addr.items[root_item].depth)
      root_item = it;

  std::set<int> node_set;
  for (int it : node_items) node_set.insert(view.addr.items[it].node);

  AmrGraph f;
  std::map<int, int> remap;  // original node -> fragment node
  auto add_node = [&](int node) {
    auto [it, fresh] = remap.emplace(node, static_cast<int>(f.nodes.size()));
    if (fresh) f.nodes.push_back(g.nodes[node]);
    return it->second;
  };

  // reachable part from the root inside the induced subgraph
  int root_node = view.addr.items[root_item].node;
  std::vector<int> stack{root_node};
  std::set<int> seen{root_node};
  add_node(root_node);
  f.root = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int ei : view.out_edges[u]) {
      const auto& e = g.edges[ei];
      if (e.is_constant()) {
        if (!constant_edges.count(ei)) continue;
        f.edges.push_back({remap.at(u), e.relation, -1, e.constant});
      } else if (node_set.count(e.target)) {
        bool fresh = !seen.count(e.target);
        int tv = add_node(e.target);
        f.edges.push_back({remap.at(u), e.relation, tv, ""});
        if (fresh) {
          seen.insert(e.target);
          stack.push_back(e.target);
        }
      }
    }
  }
  return f;
}

struct FragmentInstance {
  int anchor;      // token index the fragment fired on
  AmrGraph graph;  // fresh fragment copy
};

long total_count(const std::map<std::string, long>& dist) {
  long z = 0;
  for (const auto& [k, v] : dist) z += v;
  return z;
}

// highest count, ties by lexicographically smallest key
const std::string& argmax_key(const std::map<std::string, long>& dist) {
  const std::string* best = nullptr;
  long best_count = -1;
  for (const auto& [k, v] : dist)
    if (v > best_count) {
      best = &k;
      best_count = v;
    }
  return *best;
}

}  // namespace

ParserModel train_parser(const std::vector<CorpusBlock>& corpus) {
  if (corpus.empty()) throw ValidationError("parser training corpus is empty");
  ParserModel model;

  for (const auto& block : corpus) {
    BlockView view(block);
    const AmrGraph& g = view.g;
    const int n_items = static_cast<int>(view.addr.items.size());

    model.root_counts[g.nodes[g.root].concept_label] += 1;
    for (const auto& node : g.nodes) model.concepts.insert(node.concept_label);

    // fragment membership: items sharing a token merge, then each aligned
    // node absorbs its unaligned leaf children (first aligned parent wins)
    std::vector<int> parent(n_items);
    for (int i = 0; i < n_items; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::map<int, int> token_first_item;
    for (int i = 0; i < n_items; ++i)
      for (int t : view.tokens_of_item[i]) {
        auto [it, fresh] = token_first_item.emplace(t, i);
        if (!fresh) unite(i, it->second);
      }
    std::vector<bool> absorbed(n_items, false);
    for (const auto& item : view.addr.items) {
      if (item.node < 0 || !view.item_aligned(view.item_of_node[item.node])) continue;
      int src_item = view.item_of_node[item.node];
      for (int ei : view.out_edges[item.node]) {
        const auto& e = g.edges[ei];
        int child_item = e.is_constant() ? view.item_of_constant.at(ei)
                                         : view.item_of_node[e.target];
        if (view.item_aligned(child_item) || absorbed[child_item]) continue;
        if (!e.is_constant() && !view.node_is_leaf(e.target)) continue;
        unite(child_item, src_item);
        absorbed[child_item] = true;
      }
    }

    // fragment root concept and anchor (leftmost token) per component
    std::map<int, int> frag_root_item;  // component -> min-depth node item
    std::map<int, int> frag_anchor;
    for (int i = 0; i < n_items; ++i) {
      if (!view.item_aligned(i) && !absorbed[i]) continue;
      int c = find(i);
      if (view.addr.items[i].node >= 0) {
        auto [it, fresh] = frag_root_item.emplace(c, i);
        if (!fresh && view.addr.items[i].depth < view.addr.items[it->second].depth)
          it->second = i;
      }
      for (int t : view.tokens_of_item[i]) {
        auto [it, fresh] = frag_anchor.emplace(c, t);
        if (!fresh && t < it->second) it->second = t;
      }
    }

    // lexicon: one count per token
    auto inverse = block.alignment ? block.alignment->inverse()
                                   : std::map<int, std::set<std::string>>{};
    for (size_t j = 0; j < block.tokens.size(); ++j) {
      std::string word = lowercase(block.tokens[j]);
      std::vector<int> node_items;
      auto it = inverse.find(static_cast<int>(j));
      if (it != inverse.end())
        for (const auto& address : it->second) {
          int item = view.item_of_address.at(address);
          if (view.addr.items[item].node >= 0) node_items.push_back(item);
        }
      if (node_items.empty()) {
        // tokens aligned only to constants carry no fragment root
        model.lexicon[word][ParserModel::kNone] += 1;
        continue;
      }
      // the fragment: aligned nodes plus their unaligned leaf children
      std::set<int> constant_edges;
      std::vector<int> members = node_items;
      for (int item : node_items) {
        int node = view.addr.items[item].node;
        for (int ei : view.out_edges[node]) {
          const auto& e = g.edges[ei];
          if (e.is_constant()) {
            if (!view.item_aligned(view.item_of_constant.at(ei)))
              constant_edges.insert(ei);
          } else if (view.node_is_leaf(e.target) &&
                     !view.item_aligned(view.item_of_node[e.target])) {
            members.push_back(view.item_of_node[e.target]);
          }
        }
      }
      AmrGraph fragment = build_fragment(view, members, constant_edges);
      model.lexicon[word][serialize_penman_normalized(fragment)] += 1;
    }

    // relations: edges whose endpoints sit in different fragments
    for (const auto& e : g.edges) {
      int src_item = view.item_of_node[e.source];
      if (!view.item_aligned(src_item) && !absorbed[src_item]) continue;
      int dst_item;
      if (e.is_constant()) {
        int ei = static_cast<int>(&e - g.edges.data());
        dst_item = view.item_of_constant.at(ei);
      } else {
        dst_item = view.item_of_node[e.target];
      }
      if (!view.item_aligned(dst_item) && !absorbed[dst_item]) continue;
      int fa = find(src_item), fb = find(dst_item);
      if (fa == fb) continue;
      auto ra = frag_root_item.find(fa);
      auto rb = frag_root_item.find(fb);
      if (ra == frag_root_item.end() || rb == frag_root_item.end()) continue;
      const std::string& head = g.nodes[view.addr.items[ra->second].node].concept_label;
      const std::string& dep = g.nodes[view.addr.items[rb->second].node].concept_label;
      bool head_first = frag_anchor.at(fa) < frag_anchor.at(fb);
      model.relations[{head, dep}][{e.relation, head_first}] += 1;
    }
  }
  return model;
}

namespace {

// relation choice for an ordered concept pair: count of the best label,
// direction marginalized; ties prefer the lexicographically smaller label
std::pair<std::string, double> relation_choice(const ParserModel& model,
                                               const std::string& head,
                                               const std::string& dep) {
  auto it = model.relations.find({head, dep});
  if (it == model.relations.end()) return {":mod", std::log(0.5)};
  std::map<std::string, long> by_label;
  for (const auto& [key, count] : it->second) by_label[key.first] += count;
  const std::string* best = nullptr;
  long best_count = -1;
  for (const auto& [label, count] : by_label)
    if (count > best_count) {
      best = &label;
      best_count = count;
    }
  return {*best, std::log(static_cast<double>(best_count))};
}

std::vector<FragmentInstance> propose_fragments(const std::vector<std::string>& tokens,
                                                const ParserModel& model) {
  std::vector<FragmentInstance> out;
  for (size_t j = 0; j < tokens.size(); ++j) {
    std::string word = lowercase(tokens[j]);
    auto it = model.lexicon.find(word);
    if (it != model.lexicon.end()) {
      const std::string& key = argmax_key(it->second);
      if (key == ParserModel::kNone) continue;
      out.push_back({static_cast<int>(j), parse_penman(key)});
      continue;
    }
    // unseen word: concept-match cascade against the inventory
    std::string cleaned = strip_punct(word);
    if (cleaned.empty()) continue;
    const std::string* match = nullptr;
    for (const auto& c : model.concepts)
      if (strip_sense(c) == cleaned) {
        match = &c;
        break;  // set iteration is sorted: first hit is smallest
      }
    if (!match && cleaned.size() >= 4)
      for (const auto& c : model.concepts) {
        std::string stripped = strip_sense(c);
        if (stripped.size() >= 4 && stripped.compare(0, 4, cleaned, 0, 4) == 0) {
          match = &c;
          break;
        }
      }
    if (match) {
      AmrGraph f;
      f.nodes.push_back({"x0", *match});
      f.root = 0;
      out.push_back({static_cast<int>(j), std::move(f)});
    }
  }
  return out;
}

}  // namespace

std::pair<AmrGraph, AmrAlignment> parse_with_alignment(
    const std::vector<std::string>& tokens, const ParserModel& model) {
  std::vector<FragmentInstance> frags = propose_fragments(tokens, model);
  if (frags.empty()) {
    AmrGraph empty;
    empty.nodes.push_back({"a", "amr-empty"});
    empty.root = 0;
    return {empty, AmrAlignment{}};
  }
  const int m = static_cast<int>(frags.size());

  // root fragment: highest root frequency, leftmost on ties
  int root_frag = 0;
  long best_root = -1;
  for (int k = 0; k < m; ++k) {
    const std::string& c = frags[k].graph.nodes[frags[k].graph.root].concept_label;
    auto it = model.root_counts.find(c);
    long count = it == model.root_counts.end() ? 0 : it->second;
    if (count > best_root) {
      best_root = count;
      root_frag = k;
    }
  }

  std::vector<std::vector<double>> score(m, std::vector<double>(m, 0.0));
  std::vector<std::vector<std::string>> label(m, std::vector<std::string>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      auto [rel, s] = relation_choice(
          model, frags[x].graph.nodes[frags[x].graph.root].concept_label,
          frags[y].graph.nodes[frags[y].graph.root].concept_label);
      score[x][y] = s;
      label[x][y] = rel;
    }
  std::vector<int> parents = max_arborescence(score, root_frag);

  // assemble: instantiate fragments with fresh variables, then tree edges
  AmrGraph g;
  AmrAlignment alignment;
  std::vector<int> frag_root_node(m);
  std::vector<std::pair<int, int>> node_anchor;      // node index -> token
  std::vector<std::pair<size_t, int>> edge_anchor;   // edge index -> token
  int fresh = 0;
  for (int k = 0; k < m; ++k) {
    const AmrGraph& f = frags[k].graph;
    int base = static_cast<int>(g.nodes.size());
    for (const auto& node : f.nodes) {
      g.nodes.push_back({"v" + std::to_string(fresh++), node.concept_label});
      node_anchor.push_back({static_cast<int>(g.nodes.size()) - 1, frags[k].anchor});
    }
    for (const auto& e : f.edges) {
      g.edges.push_back({e.source + base, e.relation,
                         e.is_constant() ? -1 : e.target + base, e.constant});
      if (e.is_constant())
        edge_anchor.push_back({g.edges.size() - 1, frags[k].anchor});
    }
    frag_root_node[k] = base + f.root;
  }
  g.root = frag_root_node[root_frag];
  for (int k = 0; k < m; ++k) {
    if (k == root_frag) continue;
    int p = parents[k];
    g.edges.push_back({frag_root_node[p], label[p][k], frag_root_node[k], ""});
  }

  Addressing addr = address_graph(g);
  for (const auto& [node, anchor] : node_anchor)
    alignment.add(addr.node_address[node], anchor);
  for (const auto& [edge, anchor] : edge_anchor)
    alignment.add(addr.constant_address.at(static_cast<int>(edge)), anchor);
  return {std::move(g), std::move(alignment)};
}

AmrGraph parse_sentence(const std::vector<std::string>& tokens,
                        const ParserModel& model) {
  return parse_with_alignment(tokens, model).first;
}

double non_content_bearing_ratio(const ParserModel& model, bool token_level) {
  if (model.lexicon.empty()) return 0.0;
  double none = 0.0, total = 0.0;
  for (const auto& [word, dist] : model.lexicon) {
    double weight = token_level ? static_cast<double>(total_count(dist)) : 1.0;
    total += weight;
    if (argmax_key(dist) == ParserModel::kNone) none += weight;
  }
  return total > 0.0 ? none / total : 0.0;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

void ParserModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "AMRX-PARSER v1\n";
  size_t n = 0;
  for (const auto& [word, dist] : lexicon) n += dist.size();
  out << "lexicon " << n << "\n";
  for (const auto& [word, dist] : lexicon)
    for (const auto& [key, count] : dist)
      out << word << "\t" << key << "\t" << count << "\n";
  n = 0;
  for (const auto& [pair, dist] : relations) n += dist.size();
  out << "relations " << n << "\n";
  for (const auto& [pair, dist] : relations)
    for (const auto& [rd, count] : dist)
      out << pair.first << "\t" << pair.second << "\t" << rd.first << "\t"
          << (rd.second ? "head-first" : "head-second") << "\t" << count << "\n";
  out << "roots " << root_counts.size() << "\n";
  for (const auto& [concept_label, count] : root_counts)
    out << concept_label << "\t" << count << "\n";
  out << "concepts " << concepts.size() << "\n";
  for (const auto& c : concepts) out << c << "\n";
}

ParserModel ParserModel::load(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty() || lines[0] != "AMRX-PARSER v1")
    throw ValidationError(path + ": not an AMRX-PARSER v1 file");
  ParserModel m;
  size_t i = 1;
  auto section = [&](const std::string& key) -> size_t {
    if (i >= lines.size() || lines[i].rfind(key + " ", 0) != 0)
      throw ValidationError(path + ": expected '" + key + "' section");
    return std::stoul(lines[i++].substr(key.size() + 1));
  };
  size_t n = section("lexicon");
  for (size_t k = 0; k < n; ++k, ++i) {
    auto parts = split_tabs(lines.at(i));
    if (parts.size() != 3) throw ValidationError(path + ": bad lexicon line");
    m.lexicon[parts[0]][parts[1]] = std::stol(parts[2]);
  }
  n = section("relations");
  for (size_t k = 0; k < n; ++k, ++i) {
    auto parts = split_tabs(lines.at(i));
    if (parts.size() != 5) throw ValidationError(path + ": bad relations line");
    m.relations[{parts[0], parts[1]}][{parts[2], parts[3] == "head-first"}] =
        std::stol(parts[4]);
  }
  n = section("roots");
  for (size_t k = 0; k < n; ++k, ++i) {
    auto parts = split_tabs(lines.at(i));
    if (parts.size() != 2) throw ValidationError(path + ": bad roots line");
    m.root_counts[parts[0]] = std::stol(parts[1]);
  }
  n = section("concepts");
  for (size_t k = 0; k < n; ++k, ++i) m.concepts.insert(lines.at(i));
  return m;
}

}  // namespace amrx
