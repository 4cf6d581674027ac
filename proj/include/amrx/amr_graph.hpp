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

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amrx/util.hpp"

namespace amrx {

// Rooted, labeled, possibly reentrant directed graph of concepts.
// Immutable by convention once built; every operation here is a pure
// function, safe for unrestricted concurrent use.
struct AmrGraph {
  struct Node {
    std::string var;      // opaque variable token; aliasing is isomorphism, not identity
    std::string concept_label;  // non-empty label
  };
  // An edge points at another node or at a constant leaf. Constants keep
  // their raw surface token (quotes included for string literals).
  struct Edge {
    int source = 0;
    std::string relation;  // starts with ":", inverse roles kept verbatim
    int target = -1;       // node index, or -1 when the target is a constant
    std::string constant;  // set iff target == -1
    bool is_constant() const { return target < 0; }
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;  // textual/parse order; canonical order is derived
  int root = 0;

  int find_var(std::string_view var) const;  // -1 when absent
};

// Parse error with the byte offset into the input text.
struct PenmanError : ValidationError {
  PenmanError(const std::string& msg, size_t byte_offset)
      : ValidationError(msg + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

// Nested "(var / concept :rel child ...)" with reentrant bare-variable
// references (forward references allowed). A bare token is a reference iff
// it matches a variable defined somewhere in the same graph; otherwise a
// token of classic variable shape ([a-z]{1,2}[0-9]*) is an undefined-variable
// error and anything else is a constant.
AmrGraph parse_penman(std::string_view text);

// Canonical form: children of each node in (relation label, first-visit
// order) ascending order, reentrant nodes as bare variables after first
// definition, single spaces, no line breaks.
std::string serialize_penman(const AmrGraph& g);

// Same, with variables renamed x0, x1, ... in first-visit order. Two graphs
// built in the same child order get identical strings regardless of their
// variable names; used for lexicon fragment keys.
std::string serialize_penman_normalized(const AmrGraph& g);

// Throws ValidationError when any AmrGraph invariant is broken.
void validate(const AmrGraph& g);

// Canonical node addressing: "0" is the root, "0.1.0" the first child of the
// root's second child. Child indices follow canonical edge order; a reentrant
// re-visit reuses the address of the first visit. Addresses cover nodes and
// constant leaves (a bijection).
struct Addressing {
  struct Item {
    std::string address;
    int node = -1;           // node index, or
    int constant_edge = -1;  // index of the edge owning this constant leaf
    int depth = 0;
  };
  std::vector<Item> items;                               // first-visit DFS order
  std::vector<std::string> node_address;                 // node index -> address
  std::unordered_map<int, std::string> constant_address; // edge index -> address

  const Item* find(const std::string& address) const;
};

Addressing address_graph(const AmrGraph& g);

// Out-edge indices per node, stable-sorted by relation label (ties keep
// parse order). The single ordering behind serialization and addressing.
std::vector<std::vector<int>> canonical_out_edges(const AmrGraph& g);

// Smatch comparison units. One instance triple per node, one TOP triple for
// the root, one triple per edge.
struct Triple {
  std::string source;    // variable
  std::string relation;  // "instance", "TOP", or the edge label
  std::string value;     // concept, constant token, or target variable
  bool value_is_var = false;

  bool operator==(const Triple&) const = default;
};

std::vector<Triple> extract_triples(const AmrGraph& g);

}  // namespace amrx
