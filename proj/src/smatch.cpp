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

#include "amrx/smatch.hpp"

#include <algorithm>
#include <unordered_set>

namespace amrx {

namespace {

// Interns relation/value strings across both graphs so that triple lookups
// are integer comparisons.
struct Interner {
  std::unordered_map<std::string, int> ids;
  int get(const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(ids.size()));
    (void)fresh;
    return it->second;
  }
};

constexpr uint64_t encode(int a, int rel, int b) {
  return (static_cast<uint64_t>(a) << 42) | (static_cast<uint64_t>(rel) << 21) |
         static_cast<uint64_t>(b + 1);
}

struct Side {
  // var-var triples and var-string triples (instances, TOP, attributes)
  struct Rel {
    int a, rel, b;
  };
  struct Attr {
    int a, rel, val;
  };
  std::vector<Rel> rels;
  std::vector<Attr> attrs;
  std::vector<int> visit_order;  // node indices in canonical first-visit order
  int nvars = 0;
  int total = 0;

  Side(const AmrGraph& g, Interner& rel_ids, Interner& val_ids) {
    nvars = static_cast<int>(g.nodes.size());
    for (int i = 0; i < nvars; ++i)
      attrs.push_back({i, rel_ids.get("instance"), val_ids.get(g.nodes[i].concept_label)});
    attrs.push_back({g.root, rel_ids.get("TOP"), val_ids.get(g.nodes[g.root].concept_label)});
    for (const auto& e : g.edges) {
      if (e.is_constant())
        attrs.push_back({e.source, rel_ids.get(e.relation), val_ids.get(e.constant)});
      else
        rels.push_back({e.source, rel_ids.get(e.relation), e.target});
    }
    total = static_cast<int>(rels.size() + attrs.size());
    Addressing addr = address_graph(g);
    for (const auto& item : addr.items)
      if (item.node >= 0) visit_order.push_back(item.node);
  }
};

// Counts pred triples that land inside the gold triple set under a partial
// injective mapping m (pred var -> gold var or -1).
struct Matcher {
  const Side& pred;
  const Side& gold;
  std::unordered_set<uint64_t> gold_rels;
  std::unordered_set<uint64_t> gold_attrs;

  Matcher(const Side& p, const Side& g) : pred(p), gold(g) {
    for (const auto& r : g.rels) gold_rels.insert(encode(r.a, r.rel, r.b));
    for (const auto& a : g.attrs) gold_attrs.insert(encode(a.a, a.rel, a.val));
  }

  int matched(const std::vector<int>& m) const {
    int count = 0;
    for (const auto& r : pred.rels)
      if (m[r.a] >= 0 && m[r.b] >= 0 && gold_rels.count(encode(m[r.a], r.rel, m[r.b])))
        ++count;
    for (const auto& a : pred.attrs)
      if (m[a.a] >= 0 && gold_attrs.count(encode(m[a.a], a.rel, a.val)))
        ++count;
    return count;
  }
};

// Steepest-ascent local search. Moves: remap one pred variable to any unused
// gold variable, unmap it, or swap the images of two pred variables. The
// matched count never decreases; ties keep the first move in enumeration
// order, so runs are reproducible.
int hill_climb(const Matcher& matcher, std::vector<int>& m) {
  const int P = matcher.pred.nvars;
  const int G = matcher.gold.nvars;
  std::vector<bool> used(G, false);
  for (int g : m)
    if (g >= 0) used[g] = true;

  int current = matcher.matched(m);
  for (;;) {
    int best_delta = 0;
    int best_p = -1, best_g = -2, best_p2 = -1;  // remap (p,g) or swap (p,p2)
    for (int p = 0; p < P; ++p) {
      int old = m[p];
      for (int g = -1; g < G; ++g) {
        if (g == old || (g >= 0 && used[g])) continue;
        m[p] = g;
        int delta = matcher.matched(m) - current;
        m[p] = old;
        if (delta > best_delta) {
          best_delta = delta;
          best_p = p;
          best_g = g;
          best_p2 = -1;
        }
      }
    }
    for (int p1 = 0; p1 < P; ++p1)
      for (int p2 = p1 + 1; p2 < P; ++p2) {
        if (m[p1] == m[p2]) continue;  // both unmapped
        std::swap(m[p1], m[p2]);
        int delta = matcher.matched(m) - current;
        std::swap(m[p1], m[p2]);
        if (delta > best_delta) {
          best_delta = delta;
          best_p = p1;
          best_p2 = p2;
          best_g = -2;
        }
      }
    if (best_delta <= 0) break;
    if (best_p2 >= 0) {
      std::swap(m[best_p], m[best_p2]);
    } else {
      if (m[best_p] >= 0) used[m[best_p]] = false;
      m[best_p] = best_g;
      if (best_g >= 0) used[best_g] = true;
    }
    current += best_delta;
  }
  return current;
}

std::vector<int> greedy_start(const AmrGraph& pred, const AmrGraph& gold,
                              const Side& ps, const Side& gs) {
  std::vector<int> m(ps.nvars, -1);
  std::vector<bool> used(gs.nvars, false);
  // identical concepts first, both sides scanned in address order
  for (int p : ps.visit_order) {
    for (int g : gs.visit_order) {
      if (used[g]) continue;
      if (pred.nodes[p].concept_label == gold.nodes[g].concept_label) {
        m[p] = g;
        used[g] = true;
        break;
      }
    }
  }
  // fill the rest pairwise in address order
  for (int p : ps.visit_order) {
    if (m[p] >= 0) continue;
    for (int g : gs.visit_order) {
      if (used[g]) continue;
      m[p] = g;
      used[g] = true;
      break;
    }
  }
  return m;
}

std::vector<int> random_start(int P, int G, uint64_t seed) {
  std::vector<int> perm(G);
  for (int i = 0; i < G; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  shuffle(perm, rng);
  std::vector<int> m(P, -1);
  for (int p = 0; p < P && p < G; ++p) m[p] = perm[p];
  return m;
}

SmatchResult make_result(const AmrGraph& pred, const AmrGraph& gold, int matched,
                         int pred_total, int gold_total, const std::vector<int>& m) {
  SmatchResult r;
  r.matched = matched;
  r.pred_total = pred_total;
  r.gold_total = gold_total;
  r.precision = pred_total ? static_cast<double>(matched) / pred_total : 0.0;
  r.recall = gold_total ? static_cast<double>(matched) / gold_total : 0.0;
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  for (size_t p = 0; p < m.size(); ++p)
    if (m[p] >= 0) r.mapping[pred.nodes[p].var] = gold.nodes[m[p]].var;
  return r;
}

}  // namespace

SmatchResult smatch_score(const AmrGraph& pred, const AmrGraph& gold,
                          const SmatchOptions& opts) {
  if (opts.restarts < 1) throw ValidationError("smatch restarts must be >= 1");
  Interner rel_ids, val_ids;
  Side ps(pred, rel_ids, val_ids);
  Side gs(gold, rel_ids, val_ids);
  Matcher matcher(ps, gs);

  int best = -1;
  std::vector<int> best_m;
  for (int run = 0; run < opts.restarts; ++run) {
    std::vector<int> m =
        run == 0 ? greedy_start(pred, gold, ps, gs)
                 : random_start(ps.nvars, gs.nvars,
                                fnv1a64("smatch-restart") ^ (opts.seed + run));
    int score = hill_climb(matcher, m);
    if (score > best) {
      best = score;
      best_m = std::move(m);
    }
  }
  return make_result(pred, gold, best, ps.total, gs.total, best_m);
}

SmatchCorpusResult smatch_corpus(const std::vector<AmrGraph>& preds,
                                 const std::vector<AmrGraph>& golds,
                                 const SmatchOptions& opts) {
  if (preds.size() != golds.size())
    throw ValidationError("smatch corpus length mismatch: " +
                          std::to_string(preds.size()) + " vs " +
                          std::to_string(golds.size()));
  if (preds.empty()) throw ValidationError("smatch corpus is empty");
  SmatchCorpusResult out;
  long matched = 0, pred_total = 0, gold_total = 0;
  for (size_t i = 0; i < preds.size(); ++i) {
    SmatchResult r = smatch_score(preds[i], golds[i], opts);
    matched += r.matched;
    pred_total += r.pred_total;
    gold_total += r.gold_total;
    out.pairs.push_back(std::move(r));
  }
  out.total.matched = static_cast<int>(matched);
  out.total.pred_total = static_cast<int>(pred_total);
  out.total.gold_total = static_cast<int>(gold_total);
  out.total.precision = pred_total ? static_cast<double>(matched) / pred_total : 0.0;
  out.total.recall = gold_total ? static_cast<double>(matched) / gold_total : 0.0;
  out.total.f1 = (out.total.precision + out.total.recall) > 0.0
                     ? 2.0 * out.total.precision * out.total.recall /
                           (out.total.precision + out.total.recall)
                     : 0.0;
  return out;
}

namespace {

// enumerate injective maps small -> large, calling visit(m) at each leaf
template <typename Visit>
void enumerate(int small, int large, std::vector<int>& m, std::vector<bool>& used,
               int next, Visit&& visit) {
  if (next == small) {
    visit(m);
    return;
  }
  for (int g = 0; g < large; ++g) {
    if (used[g]) continue;
    m[next] = g;
    used[g] = true;
    enumerate(small, large, m, used, next + 1, visit);
    used[g] = false;
  }
  m[next] = -1;
}

}  // namespace

SmatchResult brute_force_oracle(const AmrGraph& pred, const AmrGraph& gold) {
  Interner rel_ids, val_ids;
  Side ps(pred, rel_ids, val_ids);
  Side gs(gold, rel_ids, val_ids);
  const int P = ps.nvars, G = gs.nvars;
  if (std::min(P, G) > 8)
    throw ValidationError("brute-force oracle size bound exceeded: min(" +
                          std::to_string(P) + "," + std::to_string(G) + ") > 8");
  double arrangements = 1.0;
  for (int k = 0; k < std::min(P, G); ++k) arrangements *= std::max(P, G) - k;
  if (arrangements > 2e6)
    throw ValidationError("brute-force oracle search space too large");

  const bool pred_small = P <= G;
  // enumerate from the smaller side; matched counts are symmetric under
  // mapping inversion because triples map injectively
  Matcher matcher = pred_small ? Matcher(ps, gs) : Matcher(gs, ps);
  int small = pred_small ? P : G;
  int large = pred_small ? G : P;

  int best = -1;
  std::vector<int> best_m;
  std::vector<int> m(small, -1);
  std::vector<bool> used(large, false);
  enumerate(small, large, m, used, 0, [&](const std::vector<int>& cand) {
    int score = matcher.matched(cand);
    if (score > best) {
      best = score;
      best_m = cand;
    }
  });
  std::vector<int> pred_to_gold(P, -1);
  if (pred_small) {
    pred_to_gold = best_m;
  } else {
    for (int g = 0; g < G; ++g)
      if (best_m[g] >= 0) pred_to_gold[best_m[g]] = g;
  }
  return make_result(pred, gold, best, ps.total, gs.total, pred_to_gold);
}

}  // namespace amrx
