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

#include "amrx/word_align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

namespace amrx {

std::vector<SentencePair> read_bitext(const std::string& source_path,
                                      const std::string& target_path) {
  auto src = read_lines(source_path, true);
  auto tgt = read_lines(target_path, true);
  if (src.size() != tgt.size())
    throw ValidationError("bitext length mismatch: " + source_path + " has " +
                          std::to_string(src.size()) + " lines, " + target_path +
                          " has " + std::to_string(tgt.size()));
  std::vector<SentencePair> pairs(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    pairs[i].source = split_ws(src[i]);
    pairs[i].target = split_ws(tgt[i]);
    if (pairs[i].source.empty() || pairs[i].target.empty())
      throw ValidationError("zero-length sentence at line " + std::to_string(i + 1));
  }
  return pairs;
}

double AlignerModel::prob(const std::string& source_lc,
                          const std::string& target_lc) const {
  auto it = table.find(source_lc);
  if (it == table.end()) return 0.0;
  auto jt = it->second.find(target_lc);
  return jt == it->second.end() ? 0.0 : jt->second;
}

double AlignerModel::null_target_prob(const std::string& target_lc) const {
  auto it = null_table.find(target_lc);
  return it == null_table.end() ? 0.0 : it->second;
}

namespace {

double diagonal_weight(int i, int slen, int j, int tlen, double lambda) {
  double d = std::fabs(static_cast<double>(i + 1) / slen -
                       static_cast<double>(j + 1) / tlen);
  return std::exp(-lambda * d);
}

struct LcPair {
  std::vector<std::string> source, target;
};

}  // namespace

AlignerModel train_aligner(const std::vector<SentencePair>& corpus,
                           const AlignerOptions& opts) {
  if (corpus.empty()) throw ValidationError("aligner training corpus is empty");
  if (opts.iterations < 1) throw ValidationError("aligner iterations must be >= 1");

  std::vector<LcPair> pairs(corpus.size());
  long target_tokens = 0;
  for (size_t k = 0; k < corpus.size(); ++k) {
    if (corpus[k].source.empty() || corpus[k].target.empty())
      throw ValidationError("zero-length sentence in pair " + std::to_string(k));
    for (const auto& w : corpus[k].source) pairs[k].source.push_back(lowercase(w));
    for (const auto& w : corpus[k].target) pairs[k].target.push_back(lowercase(w));
    target_tokens += static_cast<long>(corpus[k].target.size());
  }

  AlignerModel model;
  model.mode = opts.mode;
  model.tension = opts.initial_tension;
  model.null_prob = opts.null_prob;

  // uniform init over co-occurring targets; null co-occurs with everything
  for (const auto& p : pairs)
    for (const auto& t : p.target) {
      model.null_table.emplace(t, 0.0);
      for (const auto& s : p.source) model.table[s].emplace(t, 0.0);
    }
  for (auto& [s, row] : model.table)
    for (auto& [t, v] : row) v = 1.0 / static_cast<double>(row.size());
  for (auto& [t, v] : model.null_table)
    v = 1.0 / static_cast<double>(model.null_table.size());

  const bool diagonal = opts.mode == AlignerMode::diagonal;
  const double p0 = opts.null_prob;

  for (int iter = 0; iter < opts.iterations; ++iter) {
    std::unordered_map<std::string, std::unordered_map<std::string, double>> counts;
    std::unordered_map<std::string, double> null_counts;
    double ll = 0.0;
    double tension_grad = 0.0;

    // fixed sentence order keeps the reduction bit-reproducible
    for (const auto& p : pairs) {
      const int slen = static_cast<int>(p.source.size());
      const int tlen = static_cast<int>(p.target.size());
      std::vector<double> w(slen), scores(slen);
      for (int j = 0; j < tlen; ++j) {
        double wz = 0.0;
        for (int i = 0; i < slen; ++i) {
          w[i] = diagonal ? diagonal_weight(i, slen, j, tlen, model.tension) : 1.0;
          wz += w[i];
        }
        const std::string& t = p.target[j];
        double z = p0 * model.null_target_prob(t);
        double null_score = z;
        for (int i = 0; i < slen; ++i) {
          scores[i] = (1.0 - p0) * (w[i] / wz) * model.prob(p.source[i], t);
          z += scores[i];
        }
        ll += std::log(z);
        null_counts[t] += null_score / z;
        double post_sum = 0.0, post_dist = 0.0, prior_dist = 0.0;
        for (int i = 0; i < slen; ++i) {
          double post = scores[i] / z;
          counts[p.source[i]][t] += post;
          if (diagonal) {
            double d = std::fabs(static_cast<double>(i + 1) / slen -
                                 static_cast<double>(j + 1) / tlen);
            post_sum += post;
            post_dist += post * d;
            prior_dist += (w[i] / wz) * d;
          }
        }
        if (diagonal) tension_grad += post_sum * prior_dist - post_dist;
      }
    }

    for (auto& [s, row] : model.table) {
      auto it = counts.find(s);
      double z = 0.0;
      if (it != counts.end())
        for (auto& [t, c] : it->second) z += c;
      if (z <= 0.0) continue;  // type saw no mass this pass; keep old row
      for (auto& [t, v] : row) {
        auto jt = it->second.find(t);
        v = jt == it->second.end() ? 0.0 : jt->second / z;
      }
    }
    double nz = 0.0;
    for (auto& [t, c] : null_counts) nz += c;
    if (nz > 0.0)
      for (auto& [t, v] : model.null_table) {
        auto jt = null_counts.find(t);
        v = jt == null_counts.end() ? 0.0 : jt->second / nz;
      }

    if (diagonal) {
      model.tension += 20.0 * tension_grad / static_cast<double>(target_tokens);
      model.tension = std::clamp(model.tension, 0.3, 12.0);
    }
    model.iteration_ll.push_back(ll);
  }
  return model;
}

WordAlignment viterbi_align(const AlignerModel& model, const SentencePair& pair) {
  WordAlignment out;
  const int slen = static_cast<int>(pair.source.size());
  const int tlen = static_cast<int>(pair.target.size());
  std::vector<std::string> src(slen);
  for (int i = 0; i < slen; ++i) src[i] = lowercase(pair.source[i]);
  const bool diagonal = model.mode == AlignerMode::diagonal;

  for (int j = 0; j < tlen; ++j) {
    std::string t = lowercase(pair.target[j]);
    double wz = 0.0;
    std::vector<double> w(slen);
    for (int i = 0; i < slen; ++i) {
      w[i] = diagonal ? diagonal_weight(i, slen, j, tlen, model.tension) : 1.0;
      wz += w[i];
    }
    double null_score = model.null_prob * model.null_target_prob(t);
    int best = -1;
    double best_score = null_score;
    for (int i = 0; i < slen; ++i) {
      double score = (1.0 - model.null_prob) * (w[i] / wz) * model.prob(src[i], t);
      if (score > best_score) {  // strict: null wins ties, then smaller i
        best_score = score;
        best = i;
      }
    }
    if (best >= 0 && best_score > 0.0) out.links.insert({best, j});
  }
  return out;
}

WordAlignment symmetrize(const WordAlignment& forward, const WordAlignment& backward,
                         Symmetrization method) {
  WordAlignment out;
  if (method == Symmetrization::intersect) {
    for (const auto& l : forward.links)
      if (backward.links.count(l)) out.links.insert(l);
  } else {
    out.links = forward.links;
    out.links.insert(backward.links.begin(), backward.links.end());
  }
  return out;
}

std::string pharaoh_format(const WordAlignment& a) {
  std::vector<std::string> items;
  for (const auto& [i, j] : a.links)  // std::set orders by (i, j)
    items.push_back(std::to_string(i) + "-" + std::to_string(j));
  return join(items, " ");
}

WordAlignment pharaoh_parse(std::string_view line) {
  WordAlignment a;
  for (const auto& item : split_ws(line)) {
    size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= item.size())
      throw ValidationError("malformed pharaoh link '" + item + "'");
    size_t pos = 0;
    int i, j;
    try {
      i = std::stoi(item.substr(0, dash), &pos);
      if (pos != dash) throw std::invalid_argument("");
      j = std::stoi(item.substr(dash + 1), &pos);
      if (pos != item.size() - dash - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ValidationError("malformed pharaoh link '" + item + "'");
    }
    if (i < 0 || j < 0) throw ValidationError("negative pharaoh link '" + item + "'");
    a.links.insert({i, j});
  }
  return a;
}

void write_pharaoh(const std::string& path, const std::vector<WordAlignment>& v) {
  std::vector<std::string> lines;
  lines.reserve(v.size());
  for (const auto& a : v) lines.push_back(pharaoh_format(a));
  write_lines(path, lines);
}

std::vector<WordAlignment> read_pharaoh(const std::string& path) {
  std::vector<WordAlignment> out;
  for (const auto& line : read_lines(path)) out.push_back(pharaoh_parse(line));
  return out;
}

namespace {

std::string fmt_prob(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void AlignerModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "AMRX-ALIGNER v1\n";
  out << "mode " << (mode == AlignerMode::diagonal ? "diagonal" : "model1") << "\n";
  out << "tension " << fmt_prob(tension) << "\n";
  out << "null_prob " << fmt_prob(null_prob) << "\n";

  std::map<std::string, std::map<std::string, double>> sorted;
  for (const auto& [s, row] : table) sorted[s] = {row.begin(), row.end()};
  size_t n = 0;
  for (const auto& [s, row] : sorted) n += row.size();
  out << "lex " << n << "\n";
  for (const auto& [s, row] : sorted)
    for (const auto& [t, v] : row) out << s << "\t" << t << "\t" << fmt_prob(v) << "\n";

  std::map<std::string, double> nsorted(null_table.begin(), null_table.end());
  out << "null " << nsorted.size() << "\n";
  for (const auto& [t, v] : nsorted) out << t << "\t" << fmt_prob(v) << "\n";
}

AlignerModel AlignerModel::load(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty() || lines[0] != "AMRX-ALIGNER v1")
    throw ValidationError(path + ": not an AMRX-ALIGNER v1 file");
  AlignerModel m;
  size_t i = 1;
  auto field = [&](const std::string& key) {
    if (i >= lines.size() || lines[i].rfind(key + " ", 0) != 0)
      throw ValidationError(path + ": expected '" + key + "' line");
    return lines[i++].substr(key.size() + 1);
  };
  std::string mode = field("mode");
  if (mode != "diagonal" && mode != "model1")
    throw ValidationError(path + ": unknown mode '" + mode + "'");
  m.mode = mode == "diagonal" ? AlignerMode::diagonal : AlignerMode::model1;
  m.tension = std::stod(field("tension"));
  m.null_prob = std::stod(field("null_prob"));

  size_t lex_n = std::stoul(field("lex"));
  for (size_t k = 0; k < lex_n; ++k, ++i) {
    if (i >= lines.size()) throw ValidationError(path + ": truncated lex table");
    auto parts = split_ws(lines[i]);
    if (parts.size() != 3) throw ValidationError(path + ": bad lex line " + lines[i]);
    m.table[parts[0]][parts[1]] = std::stod(parts[2]);
  }
  size_t null_n = std::stoul(field("null"));
  for (size_t k = 0; k < null_n; ++k, ++i) {
    if (i >= lines.size()) throw ValidationError(path + ": truncated null table");
    auto parts = split_ws(lines[i]);
    if (parts.size() != 2) throw ValidationError(path + ": bad null line " + lines[i]);
    m.null_table[parts[0]] = std::stod(parts[1]);
  }
  return m;
}

}  // namespace amrx
