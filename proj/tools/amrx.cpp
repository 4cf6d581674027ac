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

#include <CLI11.hpp>
#include <iostream>

#include "amrx/bleu.hpp"
#include "amrx/eval.hpp"
#include "amrx/pipeline.hpp"

namespace {

using namespace amrx;

constexpr int kExitValidation = 2;
constexpr int kExitStage = 3;

std::vector<std::vector<std::string>> read_token_lines(const std::string& path) {
  std::vector<std::vector<std::string>> out;
  for (const auto& line : read_lines(path, true)) out.push_back(split_ws(line));
  return out;
}

void cmd_smatch(const std::string& pred_path, const std::string& gold_path,
                int restarts, uint64_t seed, bool details) {
  auto pred_blocks = read_corpus(pred_path);
  auto gold_blocks = read_corpus(gold_path);
  std::vector<AmrGraph> preds, golds;
  for (const auto& b : pred_blocks) preds.push_back(b.graph);
  for (const auto& b : gold_blocks) golds.push_back(b.graph);
  SmatchOptions opts{restarts, seed};
  auto result = smatch_corpus(preds, golds, opts);
  std::cout << format_fixed(result.total.precision, 4) << " "
            << format_fixed(result.total.recall, 4) << " "
            << format_fixed(result.total.f1, 4) << "\n";
  if (details) {
    std::cout << "pair\tprecision\trecall\tf1\tmatched\tpred_total\tgold_total\n";
    for (size_t i = 0; i < result.pairs.size(); ++i) {
      const auto& r = result.pairs[i];
      std::cout << i << "\t" << format_fixed(r.precision, 4) << "\t"
                << format_fixed(r.recall, 4) << "\t" << format_fixed(r.f1, 4) << "\t"
                << r.matched << "\t" << r.pred_total << "\t" << r.gold_total << "\n";
    }
  }
}

void cmd_correlate(const std::string& scores_path,
                   const std::vector<std::string>& exclude, bool per_language,
                   const std::string& out_path) {
  auto records = read_score_table(scores_path);
  std::vector<ExperimentRecord> kept;
  for (const auto& r : records) {
    bool drop = false;
    for (const auto& lang : exclude) drop = drop || r.language == lang;
    if (!drop) kept.push_back(r);
  }
  if (kept.size() < 2) throw ValidationError("correlate needs at least 2 rows");
  // percent scale keeps regression intercepts on the published scale
  std::vector<double> gold, silver, cycle;
  for (const auto& r : kept) {
    gold.push_back(r.gold * 100.0);
    silver.push_back(r.silver * 100.0);
    cycle.push_back(r.cycle * 100.0);
  }
  auto silver_report = correlate_columns(gold, silver);
  auto cycle_report = correlate_columns(gold, cycle);
  std::string block;
  block += "n " + std::to_string(silver_report.n) + "\n";
  block += "pearson gold-silver " + format_fixed(silver_report.pearson, 4) + "\n";
  block += "pearson gold-cycle " + format_fixed(cycle_report.pearson, 4) + "\n";
  block += "kendall-tau-b gold-silver " +
           format_fixed(silver_report.kendall_tau_b, 4) + "\n";
  block +=
      "kendall-tau-b gold-cycle " + format_fixed(cycle_report.kendall_tau_b, 4) + "\n";
  block += "regression gold-silver slope " +
           format_fixed(silver_report.regression.first, 4) + " intercept " +
           format_fixed(silver_report.regression.second, 4) + "\n";
  block += "regression gold-cycle slope " +
           format_fixed(cycle_report.regression.first, 4) + " intercept " +
           format_fixed(cycle_report.regression.second, 4) + "\n";
  if (per_language) {
    std::map<std::string, std::vector<const ExperimentRecord*>> by_lang;
    for (const auto& r : kept) by_lang[r.language].push_back(&r);
    for (const auto& [lang, rs] : by_lang) {
      if (rs.size() < 2) continue;
      std::vector<double> g, s, c;
      for (const auto* r : rs) {
        g.push_back(r->gold);
        s.push_back(r->silver);
        c.push_back(r->cycle);
      }
      block += "per-language " + lang + " kendall-tau-b gold-silver " +
               format_fixed(kendall_tau_b(g, s), 4) + " gold-cycle " +
               format_fixed(kendall_tau_b(g, c), 4) + "\n";
    }
  }
  std::cout << block;
  if (!out_path.empty()) write_file(out_path, block);
}

std::unique_ptr<Translator> make_cli_translator(const std::string& lexicon,
                                                const std::string& e2f,
                                                const std::string& f2e) {
  if (!lexicon.empty())
    return std::make_unique<DictionaryTranslator>(DictionaryTranslator::from_file(lexicon));
  if (!e2f.empty() || !f2e.empty()) {
    if (e2f.empty() || f2e.empty())
      throw ValidationError("file translation needs both --file-e2f and --file-f2e");
    return std::make_unique<FileTranslator>(e2f, f2e);
  }
  throw ValidationError("no translator given: use --lexicon or --file-e2f/--file-f2e");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amrx: cross-lingual AMR parsing by annotation projection, with "
               "silver / gold / full-cycle evaluation"};
  app.require_subcommand(1);

  // ---- ingest ----
  auto* ingest = app.add_subcommand("ingest", "split a bitext into the two projection "
                                              "directions' train/dev/test sets");
  std::string in_e, in_f, out_dir, strategy = "head";
  long train_n = 0, dev_n = 0, test_n = 0;
  uint64_t seed = 1;
  ingest->add_option("--source", in_e, "source-side text file")->required();
  ingest->add_option("--target", in_f, "target-side text file")->required();
  ingest->add_option("--train", train_n, "train size per direction")->required();
  ingest->add_option("--dev", dev_n, "dev size per direction")->required();
  ingest->add_option("--test", test_n, "test size per direction")->required();
  ingest->add_option("--seed", seed, "random seed");
  ingest->add_option("--strategy", strategy, "head|random");
  ingest->add_option("--out", out_dir, "output directory")->required();
  ingest->callback([&] {
    auto e_lines = read_lines(in_e, true);
    auto f_lines = read_lines(in_f, true);
    SplitSizes sizes{static_cast<int>(train_n), static_cast<int>(dev_n),
                     static_cast<int>(test_n)};
    auto ds = ingest_and_split(e_lines, f_lines, sizes, seed,
                               strategy == "random" ? SplitStrategy::random
                                                    : SplitStrategy::head);
    std::filesystem::create_directories(out_dir);
    const char* names[3] = {"train", "dev", "test"};
    for (int dir = 0; dir < 2; ++dir)
      for (int split = 0; split < 3; ++split) {
        std::vector<std::string> e_out, f_out;
        for (const auto& p : ds.splits[dir][split]) {
          e_out.push_back(join(p.source, " "));
          f_out.push_back(join(p.target, " "));
        }
        std::string stem =
            out_dir + "/split.d" + std::to_string(dir + 1) + "." + names[split];
        write_lines(stem + ".e", e_out);
        write_lines(stem + ".f", f_out);
      }
    std::cout << "wrote 2 directions x " << train_n << "/" << dev_n << "/" << test_n
              << " pairs to " << out_dir << "\n";
  });

  // ---- align-words ----
  auto* aw = app.add_subcommand("align-words", "train or apply the EM word aligner");
  aw->require_subcommand(1);
  auto* aw_train = aw->add_subcommand("train", "run EM on a bitext");
  std::string aw_src, aw_tgt, aw_out, aw_mode = "diagonal";
  int aw_iters = 5;
  double aw_p0 = 0.08, aw_lambda = 4.0;
  aw_train->add_option("--source", aw_src)->required();
  aw_train->add_option("--target", aw_tgt)->required();
  aw_train->add_option("--out", aw_out, "model file")->required();
  aw_train->add_option("--iterations", aw_iters);
  aw_train->add_option("--mode", aw_mode, "model1|diagonal");
  aw_train->add_option("--p0", aw_p0, "null-alignment probability");
  aw_train->add_option("--lambda", aw_lambda, "initial diagonal tension");
  aw_train->callback([&] {
    AlignerOptions opts;
    opts.mode = aw_mode == "model1" ? AlignerMode::model1 : AlignerMode::diagonal;
    opts.iterations = aw_iters;
    opts.null_prob = aw_p0;
    opts.initial_tension = aw_lambda;
    auto model = train_aligner(read_bitext(aw_src, aw_tgt), opts);
    for (size_t i = 0; i < model.iteration_ll.size(); ++i)
      std::cerr << "iteration " << i + 1 << " log-likelihood "
                << format_fixed(model.iteration_ll[i], 4) << "\n";
    model.save(aw_out);
  });
  auto* aw_apply = aw->add_subcommand("apply", "Viterbi-align a bitext");
  std::string aw_model, aw_backward, aw_symm = "none";
  aw_apply->add_option("--model", aw_model)->required();
  aw_apply->add_option("--source", aw_src)->required();
  aw_apply->add_option("--target", aw_tgt)->required();
  aw_apply->add_option("--out", aw_out, "pharaoh output file")->required();
  aw_apply->add_option("--backward", aw_backward,
                       "reverse-direction model for symmetrization");
  aw_apply->add_option("--symmetrize", aw_symm, "none|intersect|union");
  aw_apply->callback([&] {
    auto pairs = read_bitext(aw_src, aw_tgt);
    auto model = AlignerModel::load(aw_model);
    std::vector<WordAlignment> out;
    if (aw_symm == "none") {
      for (const auto& p : pairs) out.push_back(viterbi_align(model, p));
    } else {
      if (aw_backward.empty())
        throw ValidationError("--symmetrize needs --backward model");
      auto bwd = AlignerModel::load(aw_backward);
      out = align_pairs(model, bwd, pairs,
                        aw_symm == "union" ? Symmetrization::unionize
                                           : Symmetrization::intersect);
    }
    write_pharaoh(aw_out, out);
  });

  // ---- align-amr ----
  auto* aa = app.add_subcommand("align-amr",
                                "align AMR nodes to tokens with the rule cascade");
  std::string aa_corpus, aa_out, aa_sidecar;
  aa->add_option("--corpus", aa_corpus, "AMR corpus blocks with ::snt")->required();
  aa->add_option("--out", aa_out, "corpus with ::alignments metadata");
  aa->add_option("--sidecar", aa_sidecar, "alignment sidecar file");
  aa->callback([&] {
    auto blocks = read_corpus(aa_corpus);
    long nodes_total = 0, nodes_aligned = 0, tokens_total = 0, tokens_aligned = 0;
    for (auto& b : blocks) {
      b.alignment = align_concepts(b.tokens, b.graph);
      auto c = coverage(*b.alignment, b.graph, static_cast<int>(b.tokens.size()));
      nodes_total += c.nodes_total;
      nodes_aligned += c.nodes_aligned;
      tokens_total += c.tokens_total;
      tokens_aligned += c.tokens_aligned;
    }
    if (!aa_out.empty()) write_corpus(aa_out, blocks);
    if (!aa_sidecar.empty()) write_sidecar(aa_sidecar, blocks);
    std::cout << "node coverage "
              << format_fixed(nodes_total ? double(nodes_aligned) / nodes_total : 0.0, 4)
              << " token coverage "
              << format_fixed(tokens_total ? double(tokens_aligned) / tokens_total : 0.0,
                              4)
              << "\n";
  });

  // ---- project ----
  auto* pj = app.add_subcommand("project", "project AMR alignments through word "
                                           "alignments onto target sentences");
  std::string pj_corpus, pj_sidecar, pj_source, pj_target, pj_pharaoh, pj_out, pj_stats;
  pj->add_option("--corpus", pj_corpus, "source-language AMR corpus")->required();
  pj->add_option("--sidecar", pj_sidecar, "alignment sidecar (if not embedded)");
  pj->add_option("--source", pj_source, "source sentences, line-aligned")->required();
  pj->add_option("--target", pj_target, "target sentences, line-aligned")->required();
  pj->add_option("--alignments", pj_pharaoh, "pharaoh word alignments")->required();
  pj->add_option("--out", pj_out, "projected corpus")->required();
  pj->add_option("--stats", pj_stats, "projection statistics file");
  pj->callback([&] {
    auto blocks = read_corpus(pj_corpus);
    if (!pj_sidecar.empty()) attach_sidecar(blocks, pj_sidecar);
    auto src = read_token_lines(pj_source);
    auto tgt = read_token_lines(pj_target);
    if (src.size() != tgt.size() || src.size() != blocks.size())
      throw ValidationError("project: corpus, source and target sizes differ");
    std::vector<SentencePair> pairs(src.size());
    for (size_t i = 0; i < src.size(); ++i) pairs[i] = {src[i], tgt[i]};
    auto w = read_pharaoh(pj_pharaoh);
    if (w.size() != pairs.size())
      throw ValidationError("project: pharaoh line count differs from corpus");
    ProjectionStats stats;
    auto projected = project_corpus(blocks, pairs, w, &stats);
    write_corpus(pj_out, projected);
    if (!pj_stats.empty()) write_file(pj_stats, stats.to_text());
    std::cout << stats.to_text();
  });

  // ---- parser ----
  auto* ps = app.add_subcommand("parser", "train, run or inspect the baseline parser");
  ps->require_subcommand(1);
  auto* ps_train = ps->add_subcommand("train", "count a model from aligned blocks");
  std::string ps_corpus, ps_model, ps_input, ps_out;
  ps_train->add_option("--corpus", ps_corpus)->required();
  ps_train->add_option("--out", ps_model)->required();
  ps_train->callback([&] { train_parser(read_corpus(ps_corpus)).save(ps_model); });
  auto* ps_parse = ps->add_subcommand("parse", "parse tokenized sentences");
  bool ps_no_align = false;
  ps_parse->add_option("--model", ps_model)->required();
  ps_parse->add_option("--input", ps_input, "one tokenized sentence per line")
      ->required();
  ps_parse->add_option("--out", ps_out, "AMR corpus blocks")->required();
  ps_parse->add_flag("--no-alignments", ps_no_align, "omit ::alignments metadata");
  ps_parse->callback([&] {
    auto model = ParserModel::load(ps_model);
    auto sentences = read_token_lines(ps_input);
    auto blocks = parse_silver_corpus(model, sentences);
    if (ps_no_align)
      for (auto& b : blocks) b.alignment.reset();
    write_corpus(ps_out, blocks);
  });
  auto* ps_stats = ps->add_subcommand("stats", "model statistics");
  bool ps_token_level = false;
  ps_stats->add_option("--model", ps_model)->required();
  ps_stats->add_flag("--token-level", ps_token_level,
                     "weight the ratio by token frequency");
  ps_stats->callback([&] {
    auto model = ParserModel::load(ps_model);
    std::cout << "word types " << model.lexicon.size() << "\n";
    std::cout << "concepts " << model.concepts.size() << "\n";
    std::cout << "relation pairs " << model.relations.size() << "\n";
    std::cout << "non-content-bearing "
              << format_fixed(non_content_bearing_ratio(model, ps_token_level), 4)
              << (ps_token_level ? " (token level)" : " (type level)") << "\n";
  });

  // ---- translate ----
  auto* tr = app.add_subcommand("translate", "dictionary or file-based translation");
  std::string tr_input, tr_out, tr_lexicon, tr_e2f, tr_f2e, tr_dir = "e2f";
  tr->add_option("--input", tr_input)->required();
  tr->add_option("--out", tr_out)->required();
  tr->add_option("--lexicon", tr_lexicon, "word map file (source<TAB>target)");
  tr->add_option("--file-e2f", tr_e2f, "precomputed e->f translations");
  tr->add_option("--file-f2e", tr_f2e, "precomputed f->e translations");
  tr->add_option("--direction", tr_dir, "e2f|f2e|back");
  tr->callback([&] {
    auto translator = make_cli_translator(tr_lexicon, tr_e2f, tr_f2e);
    auto sentences = read_lines(tr_input, true);
    std::vector<std::string> out;
    if (tr_dir == "back")
      out = back_translate(*translator, sentences);
    else
      out = translator->translate(sentences,
                                  tr_dir == "f2e" ? Direction::f2e : Direction::e2f);
    write_lines(tr_out, out);
  });

  // ---- bleu ----
  auto* bl = app.add_subcommand("bleu", "corpus BLEU-4");
  std::string bl_hyp, bl_ref;
  bool bl_smooth = false;
  bl->add_option("--hyp", bl_hyp)->required();
  bl->add_option("--ref", bl_ref)->required();
  bl->add_flag("--smooth", bl_smooth, "add-one smoothing on p2..p4");
  bl->callback([&] {
    auto report = bleu_score(read_lines(bl_hyp, true), read_lines(bl_ref, true),
                             bl_smooth);
    std::cout << "BLEU = " << report.percent() << "\n";
    std::cout << "p1 " << format_fixed(report.precisions[0], 4) << " p2 "
              << format_fixed(report.precisions[1], 4) << " p3 "
              << format_fixed(report.precisions[2], 4) << " p4 "
              << format_fixed(report.precisions[3], 4) << " BP "
              << format_fixed(report.brevity_penalty, 4) << " hyp_len "
              << report.hyp_length << " ref_len " << report.ref_length << "\n";
  });

  // ---- smatch ----
  auto* sm = app.add_subcommand("smatch", "score predicted AMRs against references");
  std::string sm_pred, sm_gold;
  int sm_restarts = 4;
  uint64_t sm_seed = 0;
  bool sm_details = false;
  sm->add_option("--pred", sm_pred)->required();
  sm->add_option("--gold", sm_gold)->required();
  sm->add_option("--restarts", sm_restarts);
  sm->add_option("--seed", sm_seed);
  sm->add_flag("--details", sm_details, "per-pair TSV");
  sm->callback([&] { cmd_smatch(sm_pred, sm_gold, sm_restarts, sm_seed, sm_details); });

  // ---- eval ----
  auto* ev = app.add_subcommand("eval", "run one evaluation protocol");
  std::string ev_mode, ev_parser, ev_english, ev_target, ev_corpus;
  std::string ev_test_e, ev_test_f, ev_train_e, ev_train_f, ev_lexicon;
  int ev_restarts = 4;
  uint64_t ev_seed = 0;
  ev->add_option("--mode", ev_mode, "files|gold|silver")->required();
  ev->add_option("--pred", sm_pred, "files mode: predicted corpus");
  ev->add_option("--gold", sm_gold, "files mode: reference corpus");
  ev->add_option("--parser", ev_parser, "gold mode: target parser model");
  ev->add_option("--english", ev_english, "silver mode: English parser model");
  ev->add_option("--target", ev_target, "silver mode: target parser model");
  ev->add_option("--gold-corpus", ev_corpus, "gold mode: target-language gold corpus");
  ev->add_option("--test-e", ev_test_e, "silver mode: test split, source side");
  ev->add_option("--test-f", ev_test_f, "silver mode: test split, target side");
  ev->add_option("--train-e", ev_train_e, "silver mode: training split for overlap check");
  ev->add_option("--train-f", ev_train_f);
  ev->add_option("--lexicon", ev_lexicon, "score an MT-dict system instead");
  ev->add_option("--restarts", ev_restarts);
  ev->add_option("--seed", ev_seed);
  ev->callback([&] {
    SmatchOptions opts{ev_restarts, ev_seed};
    SmatchResult r;
    if (ev_mode == "files") {
      if (sm_pred.empty() || sm_gold.empty())
        throw ValidationError("files mode needs --pred and --gold");
      cmd_smatch(sm_pred, sm_gold, ev_restarts, ev_seed, false);
      return;
    } else if (ev_mode == "gold") {
      auto gold = read_corpus(ev_corpus);
      if (!ev_lexicon.empty()) {
        auto english = ParserModel::load(ev_parser);
        DictionaryTranslator t = DictionaryTranslator::from_file(ev_lexicon);
        r = evaluate_gold(mt_parser(english, t, Direction::f2e), gold, opts);
      } else {
        r = evaluate_gold(ParserModel::load(ev_parser), gold, opts);
      }
    } else if (ev_mode == "silver") {
      auto test = read_bitext(ev_test_e, ev_test_f);
      std::unordered_set<uint64_t> hashes;
      if (!ev_train_e.empty())
        for (const auto& p : read_bitext(ev_train_e, ev_train_f))
          hashes.insert(pair_hash(p));
      auto english = ParserModel::load(ev_english);
      if (!ev_lexicon.empty()) {
        DictionaryTranslator t = DictionaryTranslator::from_file(ev_lexicon);
        r = evaluate_silver(model_parser(english),
                            mt_parser(english, t, Direction::f2e), test, opts, hashes);
      } else {
        auto target = ParserModel::load(ev_target);
        r = evaluate_silver(english, target, test, opts, hashes);
      }
    } else {
      throw ValidationError("eval --mode must be files, gold or silver "
                            "(full-cycle runs under `amrx run`)");
    }
    std::cout << format_fixed(r.precision, 4) << " " << format_fixed(r.recall, 4) << " "
              << format_fixed(r.f1, 4) << "\n";
  });

  // ---- correlate ----
  auto* co = app.add_subcommand("correlate",
                                "correlation analysis over a score table");
  std::string co_scores, co_out;
  std::vector<std::string> co_exclude;
  bool co_per_language = false;
  co->add_option("--scores", co_scores, "TSV: language system silver gold cycle")
      ->required();
  co->add_option("--exclude-language", co_exclude, "drop a language (repeatable)");
  co->add_flag("--per-language", co_per_language, "also print per-language tau");
  co->add_option("--out", co_out, "also write the report block to a file");
  co->callback([&] { cmd_correlate(co_scores, co_exclude, co_per_language, co_out); });

  // ---- run ----
  auto* rn = app.add_subcommand("run", "run a full experiment from a config file");
  std::string rn_config;
  std::vector<std::string> rn_sets;
  rn->add_option("--config", rn_config, "key=value config file")->required();
  rn->add_option("--set", rn_sets, "override config entries (key=value)");
  rn->callback([&] {
    auto cfg = PipelineConfig::from_file(rn_config);
    cfg.apply_overrides(rn_sets);
    ExperimentRecord rec = run_experiment(cfg);
    std::cout << rec.language << "\t" << rec.system << "\t"
              << format_fixed(rec.silver * 100.0, 2) << "\t"
              << format_fixed(rec.gold * 100.0, 2) << "\t"
              << format_fixed(rec.cycle * 100.0, 2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const StageError& e) {
    std::cerr << "stage error: " << e.what() << "\n";
    return kExitStage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
  return 0;
}
