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

#include "amrx/eval.hpp"

#include <filesystem>

namespace amrx {

std::vector<ExperimentRecord> read_score_table(const std::string& path) {
  auto lines = read_lines(path, true);
  if (lines.empty()) throw ValidationError(path + ": empty score table");
  std::vector<ExperimentRecord> out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto parts = split_ws(lines[i]);
    if (i == 0 && !parts.empty() && parts[0] == "language") continue;  // header
    if (parts.size() != 5)
      throw ValidationError(path + ": line " + std::to_string(i + 1) +
                            ": expected 5 columns language/system/silver/gold/cycle");
    ExperimentRecord r;
    r.language = parts[0];
    r.system = parts[1];
    try {
      r.silver = std::stod(parts[2]) / 100.0;
      r.gold = std::stod(parts[3]) / 100.0;
      r.cycle = std::stod(parts[4]) / 100.0;
    } catch (const std::exception&) {
      throw ValidationError(path + ": line " + std::to_string(i + 1) +
                            ": non-numeric score");
    }
    out.push_back(std::move(r));
  }
  if (out.empty()) throw ValidationError(path + ": no records");
  return out;
}

void write_score_table(const std::string& path,
                       const std::vector<ExperimentRecord>& records) {
  std::string s = "language\tsystem\tsilver\tgold\tcycle\n";
  for (const auto& r : records)
    s += r.language + "\t" + r.system + "\t" + format_fixed(r.silver * 100.0, 2) + "\t" +
         format_fixed(r.gold * 100.0, 2) + "\t" + format_fixed(r.cycle * 100.0, 2) +
         "\n";
  write_file(path, s);
}

CorrelationReport correlate_columns(std::span<const double> xs,
                                    std::span<const double> ys) {
  CorrelationReport r;
  r.n = static_cast<int>(xs.size());
  r.pearson = pearson(xs, ys);
  r.kendall_tau_b = kendall_tau_b(xs, ys);
  r.regression = linear_regression(xs, ys);
  return r;
}

CorpusParser model_parser(const ParserModel& model) {
  return [&model](const std::vector<std::vector<std::string>>& sentences) {
    std::vector<AmrGraph> out;
    out.reserve(sentences.size());
    for (const auto& tokens : sentences) out.push_back(parse_sentence(tokens, model));
    return out;
  };
}

namespace {

std::vector<AmrGraph> parse_translated(const ParserModel& english,
                                       const std::vector<std::string>& translated) {
  std::vector<AmrGraph> out;
  out.reserve(translated.size());
  for (const auto& sentence : translated)
    out.push_back(parse_sentence(split_ws(sentence), english));
  return out;
}

std::vector<std::string> join_all(const std::vector<std::vector<std::string>>& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& tokens : s) out.push_back(join(tokens, " "));
  return out;
}

}  // namespace

CorpusParser mt_parser(const ParserModel& english, const Translator& t, Direction dir) {
  return [&english, &t, dir](const std::vector<std::vector<std::string>>& sentences) {
    return parse_translated(english, t.translate(join_all(sentences), dir));
  };
}

CorpusParser back_translate_parser(const ParserModel& english, const Translator& t) {
  return [&english, &t](const std::vector<std::vector<std::string>>& sentences) {
    return parse_translated(english, back_translate(t, join_all(sentences)));
  };
}

uint64_t pair_hash(const SentencePair& pair) {
  uint64_t h = fnv1a64(join(pair.source, " "));
  h = fnv1a64(" ||| ", h);
  return fnv1a64(join(pair.target, " "), h);
}

SmatchResult evaluate_gold(const CorpusParser& parser,
                           const std::vector<CorpusBlock>& gold_corpus,
                           const SmatchOptions& opts) {
  if (gold_corpus.empty()) throw ValidationError("gold corpus is empty");
  std::vector<std::vector<std::string>> sentences;
  std::vector<AmrGraph> refs;
  for (const auto& b : gold_corpus) {
    sentences.push_back(b.tokens);
    refs.push_back(b.graph);
  }
  return smatch_corpus(parser(sentences), refs, opts).total;
}

SmatchResult evaluate_gold(const ParserModel& target_parser,
                           const std::vector<CorpusBlock>& gold_corpus,
                           const SmatchOptions& opts) {
  return evaluate_gold(model_parser(target_parser), gold_corpus, opts);
}

SmatchResult evaluate_silver(const CorpusParser& english_reference,
                             const CorpusParser& target_candidate,
                             const std::vector<SentencePair>& parallel_test,
                             const SmatchOptions& opts,
                             const std::unordered_set<uint64_t>& training_hashes) {
  if (parallel_test.empty()) throw ValidationError("silver test split is empty");
  if (!training_hashes.empty())
    for (size_t i = 0; i < parallel_test.size(); ++i)
      if (training_hashes.count(pair_hash(parallel_test[i])))
        throw ValidationError("silver test split overlaps a training split at pair " +
                              std::to_string(i));
  std::vector<std::vector<std::string>> e_side, f_side;
  for (const auto& p : parallel_test) {
    e_side.push_back(p.source);
    f_side.push_back(p.target);
  }
  return smatch_corpus(target_candidate(f_side), english_reference(e_side), opts).total;
}

SmatchResult evaluate_silver(const ParserModel& english_parser,
                             const ParserModel& target_parser,
                             const std::vector<SentencePair>& parallel_test,
                             const SmatchOptions& opts,
                             const std::unordered_set<uint64_t>& training_hashes) {
  return evaluate_silver(model_parser(english_parser), model_parser(target_parser),
                         parallel_test, opts, training_hashes);
}

std::vector<CorpusBlock> parse_silver_corpus(
    const ParserModel& model, const std::vector<std::vector<std::string>>& sentences) {
  std::vector<CorpusBlock> out;
  out.reserve(sentences.size());
  for (size_t i = 0; i < sentences.size(); ++i) {
    auto [graph, alignment] = parse_with_alignment(sentences[i], model);
    CorpusBlock b;
    b.id = std::to_string(i);
    b.tokens = sentences[i];
    b.graph = std::move(graph);
    b.alignment = std::move(alignment);
    out.push_back(std::move(b));
  }
  return out;
}

void ensure_alignments(std::vector<CorpusBlock>& blocks) {
  for (auto& b : blocks)
    if (!b.alignment) b.alignment = align_concepts(b.tokens, b.graph);
}

std::vector<WordAlignment> align_pairs(const AlignerModel& forward,
                                       const AlignerModel& backward,
                                       const std::vector<SentencePair>& pairs,
                                       Symmetrization method) {
  std::vector<WordAlignment> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    WordAlignment fwd = viterbi_align(forward, p);
    SentencePair reversed{p.target, p.source};
    WordAlignment bwd = swap_links(viterbi_align(backward, reversed));
    out.push_back(symmetrize(fwd, bwd, method));
  }
  return out;
}

WordAlignment swap_links(const WordAlignment& a) {
  WordAlignment out;
  for (const auto& [i, j] : a.links) out.links.insert({j, i});
  return out;
}

std::vector<SentencePair> swap_pairs(const std::vector<SentencePair>& pairs) {
  std::vector<SentencePair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.target, p.source});
  return out;
}

SmatchResult evaluate_full_cycle(const FullCycleConfig& config) {
  namespace fs = std::filesystem;
  if (!config.gold_train || !config.gold_test)
    throw ValidationError("full cycle requires English gold train and test corpora");
  if (config.artifact_dir.empty())
    throw ValidationError("full cycle requires an artifact directory");
  fs::create_directories(config.artifact_dir);
  auto art = [&](const std::string& name) { return config.artifact_dir + "/" + name; };

  // English parser trained from the aligned gold training data
  std::vector<CorpusBlock> train = *config.gold_train;
  ensure_alignments(train);
  write_corpus(art("gold_train_aligned.amr"), train);
  ParserModel english = train_parser(train);
  english.save(art("parser_en.model"));

  std::vector<std::vector<std::string>> test_sentences;
  std::vector<AmrGraph> test_refs;
  for (const auto& b : *config.gold_test) {
    test_sentences.push_back(b.tokens);
    test_refs.push_back(b.graph);
  }
  if (test_sentences.empty()) throw ValidationError("gold test corpus is empty");

  std::vector<AmrGraph> predictions;
  if (config.translator) {
    // MT mode: translate there and back, then parse with the English parser
    std::vector<std::string> roundtrip =
        back_translate(*config.translator, join_all(test_sentences));
    write_lines(art("cycle_roundtrip.txt"), roundtrip);
    predictions = parse_translated(english, roundtrip);
  } else {
    if (!config.e2f_train || !config.f2e_train || !config.aligner_corpus)
      throw ValidationError("projection full cycle requires e2f/f2e splits and an "
                            "aligner corpus");
    AlignerModel fwd = train_aligner(*config.aligner_corpus, config.aligner);
    fwd.save(art("aligner_fwd.model"));
    AlignerModel bwd = train_aligner(swap_pairs(*config.aligner_corpus), config.aligner);
    bwd.save(art("aligner_bwd.model"));

    // 1) silver-parse English, project e -> f, train the target parser
    std::vector<std::vector<std::string>> e_side;
    for (const auto& p : *config.e2f_train) e_side.push_back(p.source);
    std::vector<CorpusBlock> silver_e = parse_silver_corpus(english, e_side);
    write_corpus(art("silver_e2f.amr"), silver_e);
    std::vector<WordAlignment> w_e2f =
        align_pairs(fwd, bwd, *config.e2f_train, config.symmetrization);
    write_pharaoh(art("e2f.pharaoh"), w_e2f);
    ProjectionStats stats;
    std::vector<CorpusBlock> projected_f =
        project_corpus(silver_e, *config.e2f_train, w_e2f, &stats);
    write_corpus(art("projected_f.amr"), projected_f);
    write_file(art("projected_f.stats"), stats.to_text());
    ParserModel target = train_parser(projected_f);
    target.save(art("parser_f.model"));

    // 2) silver-parse the target side, project f -> e, train English anew
    std::vector<std::vector<std::string>> f_side;
    for (const auto& p : *config.f2e_train) f_side.push_back(p.target);
    std::vector<CorpusBlock> silver_f = parse_silver_corpus(target, f_side);
    write_corpus(art("silver_f2e.amr"), silver_f);
    std::vector<WordAlignment> w_f2e_fwd =
        align_pairs(fwd, bwd, *config.f2e_train, config.symmetrization);
    std::vector<WordAlignment> w_f2e;
    w_f2e.reserve(w_f2e_fwd.size());
    for (const auto& w : w_f2e_fwd) w_f2e.push_back(swap_links(w));
    write_pharaoh(art("f2e.pharaoh"), w_f2e);
    std::vector<CorpusBlock> projected_e =
        project_corpus(silver_f, swap_pairs(*config.f2e_train), w_f2e, &stats);
    write_corpus(art("projected_e.amr"), projected_e);
    write_file(art("projected_e.stats"), stats.to_text());
    ParserModel english2 = train_parser(projected_e);
    english2.save(art("parser_en2.model"));

    predictions.reserve(test_sentences.size());
    for (const auto& tokens : test_sentences)
      predictions.push_back(parse_sentence(tokens, english2));
  }

  std::vector<CorpusBlock> pred_blocks;
  for (size_t i = 0; i < predictions.size(); ++i) {
    CorpusBlock b;
    b.id = std::to_string(i);
    b.tokens = test_sentences[i];
    b.graph = predictions[i];
    pred_blocks.push_back(std::move(b));
  }
  write_corpus(art("cycle_pred.amr"), pred_blocks);

  return smatch_corpus(predictions, test_refs, config.smatch).total;
}

}  // namespace amrx
