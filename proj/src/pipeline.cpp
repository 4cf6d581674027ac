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

#include "amrx/pipeline.hpp"

#include <filesystem>
#include <json.hpp>

namespace fs = std::filesystem;

namespace amrx {

DatasetSplits ingest_and_split(const std::vector<std::string>& e_lines,
                               const std::vector<std::string>& f_lines,
                               SplitSizes sizes, uint64_t seed, SplitStrategy strategy) {
  if (sizes.train <= 0 || sizes.dev <= 0 || sizes.test <= 0)
    throw ValidationError("split sizes must be positive");
  if (e_lines.size() != f_lines.size())
    throw ValidationError("bitext length mismatch: " + std::to_string(e_lines.size()) +
                          " vs " + std::to_string(f_lines.size()) + " lines");
  const long need = 2L * sizes.total();
  if (static_cast<long>(e_lines.size()) < need)
    throw ValidationError("insufficient data: need " + std::to_string(need) +
                          " sentence pairs, have " + std::to_string(e_lines.size()));

  std::vector<size_t> order(e_lines.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (strategy == SplitStrategy::random) {
    SplitMix64 rng(seed);
    shuffle(order, rng);
  }

  DatasetSplits ds;
  std::map<uint64_t, std::pair<int, int>> where;  // pair hash -> (direction, split)
  size_t cursor = 0;
  for (int dir = 0; dir < 2; ++dir) {
    const int counts[3] = {sizes.train, sizes.dev, sizes.test};
    for (int split = 0; split < 3; ++split) {
      for (int k = 0; k < counts[split]; ++k, ++cursor) {
        size_t line = order[cursor];
        SentencePair pair{split_ws(e_lines[line]), split_ws(f_lines[line])};
        if (pair.source.empty() || pair.target.empty())
          throw ValidationError("zero-length sentence at line " +
                                std::to_string(line + 1));
        uint64_t h = pair_hash(pair);
        auto [it, fresh] = where.emplace(h, std::make_pair(dir, split));
        if (!fresh && it->second != std::make_pair(dir, split))
          throw ValidationError(
              "sentence pair at line " + std::to_string(line + 1) +
              " appears in two splits (duplicate content in the bitext)");
        ds.splits[dir][split].push_back(std::move(pair));
      }
    }
  }
  return ds;
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  PipelineConfig cfg;
  auto lines = read_lines(path, true);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError(path + ": line " + std::to_string(i + 1) +
                            ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ValidationError(path + ": line " + std::to_string(i + 1) + ": empty key");
    cfg.values[key] = value;
  }
  return cfg;
}

void PipelineConfig::apply_overrides(const std::vector<std::string>& key_value_args) {
  for (const auto& kv : key_value_args) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("override must be key=value: '" + kv + "'");
    values[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
}

const std::string& PipelineConfig::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw ValidationError("config key missing: " + key);
  return it->second;
}

std::string PipelineConfig::get_or(const std::string& key,
                                   const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

long PipelineConfig::get_long(const std::string& key) const {
  try {
    return std::stol(get(key));
  } catch (const std::logic_error&) {
    throw ValidationError("config key " + key + " is not an integer");
  }
}

double PipelineConfig::get_double(const std::string& key, double fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::logic_error&) {
    throw ValidationError("config key " + key + " is not a number");
  }
}

void PipelineConfig::validate() const {
  static const char* required[] = {"system",     "language",  "out",
                                   "bitext.e",   "bitext.f",  "gold.train",
                                   "gold.test",  "gold.target",
                                   "split.train", "split.dev", "split.test"};
  for (const char* key : required) get(key);
  const std::string& system = get("system");
  if (system != "projection" && system != "mt-dict" && system != "mt-file")
    throw ValidationError("config: system must be projection, mt-dict or mt-file");
  if (system == "mt-dict") get("lexicon");
  if (system == "mt-file") {
    get("mt.gold_f2e");
    get("mt.silver_f2e");
    get("mt.cycle_e2f");
    get("mt.cycle_f2e");
  }
  static const char* path_keys[] = {"bitext.e", "bitext.f", "gold.train", "gold.test",
                                    "gold.target", "lexicon", "mt.gold_f2e",
                                    "mt.silver_f2e", "mt.cycle_e2f", "mt.cycle_f2e"};
  for (const char* key : path_keys)
    if (has(key) && !fs::exists(get(key)))
      throw ValidationError("config: path for " + std::string(key) +
                            " does not exist: " + get(key));
  for (const char* key : {"split.train", "split.dev", "split.test"})
    if (get_long(key) <= 0) throw ValidationError("config: split sizes must be positive");
}

StageRunner::StageRunner(std::string out_dir, std::string params_fingerprint)
    : out_dir_(std::move(out_dir)), fingerprint_(std::move(params_fingerprint)) {
  fs::create_directories(out_dir_ + "/manifest");
}

void StageRunner::run(const std::string& name, const std::vector<std::string>& inputs,
                      const std::vector<std::string>& outputs,
                      const std::function<void()>& fn) {
  const std::string manifest_path = out_dir_ + "/manifest/" + name + ".json";
  for (const auto& in : inputs)
    if (!fs::exists(in))
      throw StageError("stage " + name + ": missing input " + in);

  if (fs::exists(manifest_path)) {
    nlohmann::json m = nlohmann::json::parse(read_file(manifest_path));
    if (m.value("fingerprint", "") == fingerprint_) {
      bool inputs_match = true;
      for (const auto& in : inputs) {
        auto it = m["inputs"].find(in);
        if (it == m["inputs"].end() || it->get<std::string>() != hash_hex(hash_file(in))) {
          inputs_match = false;
          break;
        }
      }
      if (inputs_match) {
        bool all_present = true;
        for (const auto& out : outputs) {
          auto it = m["outputs"].find(out);
          if (it == m["outputs"].end() || !fs::exists(out)) {
            all_present = false;
            break;
          }
          if (it->get<std::string>() != hash_hex(hash_file(out)))
            throw StageError("stage " + name + ": artifact hash mismatch for " + out +
                             " (file was modified since it was produced)");
        }
        if (all_present) return;  // cached
      }
    }
  }

  try {
    fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("stage " + name + " (under " + out_dir_ + "): " + e.what());
  }

  nlohmann::json m;
  m["stage"] = name;
  m["fingerprint"] = fingerprint_;
  m["inputs"] = nlohmann::json::object();
  m["outputs"] = nlohmann::json::object();
  for (const auto& in : inputs) m["inputs"][in] = hash_hex(hash_file(in));
  for (const auto& out : outputs) {
    if (!fs::exists(out))
      throw StageError("stage " + name + ": did not produce declared output " + out);
    m["outputs"][out] = hash_hex(hash_file(out));
  }
  write_file(manifest_path, m.dump(2) + "\n");
}

namespace {

void write_smatch_file(const std::string& path, const SmatchResult& r) {
  std::string s;
  s += "precision " + format_fixed(r.precision, 6) + "\n";
  s += "recall " + format_fixed(r.recall, 6) + "\n";
  s += "f1 " + format_fixed(r.f1, 6) + "\n";
  s += "matched " + std::to_string(r.matched) + "\n";
  s += "pred_total " + std::to_string(r.pred_total) + "\n";
  s += "gold_total " + std::to_string(r.gold_total) + "\n";
  write_file(path, s);
}

double read_f1(const std::string& path) {
  for (const auto& line : read_lines(path)) {
    auto parts = split_ws(line);
    if (parts.size() == 2 && parts[0] == "f1") return std::stod(parts[1]);
  }
  throw StageError(path + ": no f1 entry");
}

std::vector<SentencePair> load_split(const std::string& e, const std::string& f) {
  return read_bitext(e, f);
}

std::vector<std::vector<std::string>> side(const std::vector<SentencePair>& pairs,
                                           bool target) {
  std::vector<std::vector<std::string>> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(target ? p.target : p.source);
  return out;
}

void write_pred_blocks(const std::string& path,
                       const std::vector<std::vector<std::string>>& sentences,
                       const std::vector<AmrGraph>& graphs) {
  std::vector<CorpusBlock> blocks;
  for (size_t i = 0; i < graphs.size(); ++i) {
    CorpusBlock b;
    b.id = std::to_string(i);
    b.tokens = i < sentences.size() ? sentences[i] : std::vector<std::string>{};
    b.graph = graphs[i];
    blocks.push_back(std::move(b));
  }
  write_corpus(path, blocks);
}

}  // namespace

ExperimentRecord run_experiment(const PipelineConfig& cfg) {
  cfg.validate();
  const std::string out = cfg.get("out");
  fs::create_directories(out);
  auto P = [&](const std::string& name) { return out + "/" + name; };

  std::string fingerprint = "amrx-pipeline-v1";
  for (const auto& [k, v] : cfg.values)
    if (k != "out") fingerprint += "|" + k + "=" + v;
  StageRunner runner(out, fingerprint);

  const std::string system = cfg.get("system");
  const uint64_t seed = cfg.has("seed") ? cfg.get_long("seed") : 1;
  SplitSizes sizes{static_cast<int>(cfg.get_long("split.train")),
                   static_cast<int>(cfg.get_long("split.dev")),
                   static_cast<int>(cfg.get_long("split.test"))};
  SplitStrategy strategy = cfg.get_or("split.strategy", "head") == "random"
                               ? SplitStrategy::random
                               : SplitStrategy::head;
  AlignerOptions aligner_opts;
  aligner_opts.mode = cfg.get_or("aligner.mode", "diagonal") == "model1"
                          ? AlignerMode::model1
                          : AlignerMode::diagonal;
  aligner_opts.iterations = static_cast<int>(
      cfg.has("aligner.iterations") ? cfg.get_long("aligner.iterations") : 5);
  aligner_opts.null_prob = cfg.get_double("aligner.p0", 0.08);
  aligner_opts.initial_tension = cfg.get_double("aligner.lambda", 4.0);
  Symmetrization symm = cfg.get_or("symmetrize", "intersect") == "union"
                            ? Symmetrization::unionize
                            : Symmetrization::intersect;
  SmatchOptions smatch_opts;
  smatch_opts.restarts =
      static_cast<int>(cfg.has("smatch.restarts") ? cfg.get_long("smatch.restarts") : 4);
  smatch_opts.seed = sub_seed(seed, "smatch");

  // split file paths: split.d<direction>.<split>.<side>
  const char* split_names[3] = {"train", "dev", "test"};
  std::vector<std::string> split_files;
  auto split_path = [&](int dir, int split, char side_ch) {
    return P("split.d" + std::to_string(dir + 1) + "." + split_names[split] + "." +
             side_ch);
  };
  for (int dir = 0; dir < 2; ++dir)
    for (int split = 0; split < 3; ++split) {
      split_files.push_back(split_path(dir, split, 'e'));
      split_files.push_back(split_path(dir, split, 'f'));
    }

  runner.run("ingest", {cfg.get("bitext.e"), cfg.get("bitext.f")}, split_files, [&] {
    auto e_lines = read_lines(cfg.get("bitext.e"), true);
    auto f_lines = read_lines(cfg.get("bitext.f"), true);
    DatasetSplits ds =
        ingest_and_split(e_lines, f_lines, sizes, sub_seed(seed, "ingest"), strategy);
    for (int dir = 0; dir < 2; ++dir)
      for (int split = 0; split < 3; ++split) {
        std::vector<std::string> e_out, f_out;
        for (const auto& pair : ds.splits[dir][split]) {
          e_out.push_back(join(pair.source, " "));
          f_out.push_back(join(pair.target, " "));
        }
        write_lines(split_path(dir, split, 'e'), e_out);
        write_lines(split_path(dir, split, 'f'), f_out);
      }
  });

  runner.run("align-amr-gold", {cfg.get("gold.train")}, {P("gold_train_aligned.amr")},
             [&] {
               auto blocks = read_corpus(cfg.get("gold.train"));
               ensure_alignments(blocks);
               write_corpus(P("gold_train_aligned.amr"), blocks);
             });

  runner.run("train-parser-en", {P("gold_train_aligned.amr")}, {P("parser_en.model")},
             [&] {
               train_parser(read_corpus(P("gold_train_aligned.amr")))
                   .save(P("parser_en.model"));
             });

  if (system == "projection") {
    runner.run("train-aligner-fwd", {cfg.get("bitext.e"), cfg.get("bitext.f")},
               {P("aligner_fwd.model")}, [&] {
                 auto corpus = read_bitext(cfg.get("bitext.e"), cfg.get("bitext.f"));
                 train_aligner(corpus, aligner_opts).save(P("aligner_fwd.model"));
               });
    runner.run("train-aligner-bwd", {cfg.get("bitext.e"), cfg.get("bitext.f")},
               {P("aligner_bwd.model")}, [&] {
                 auto corpus = read_bitext(cfg.get("bitext.f"), cfg.get("bitext.e"));
                 train_aligner(corpus, aligner_opts).save(P("aligner_bwd.model"));
               });

    // direction 1: English annotations projected onto the target side
    runner.run("word-align-e2f",
               {P("aligner_fwd.model"), P("aligner_bwd.model"), split_path(0, 0, 'e'),
                split_path(0, 0, 'f')},
               {P("e2f.pharaoh")}, [&] {
                 auto pairs = load_split(split_path(0, 0, 'e'), split_path(0, 0, 'f'));
                 auto fwd = AlignerModel::load(P("aligner_fwd.model"));
                 auto bwd = AlignerModel::load(P("aligner_bwd.model"));
                 write_pharaoh(P("e2f.pharaoh"), align_pairs(fwd, bwd, pairs, symm));
               });
    runner.run("parse-silver-e2f", {P("parser_en.model"), split_path(0, 0, 'e')},
               {P("silver_e2f.amr")}, [&] {
                 auto model = ParserModel::load(P("parser_en.model"));
                 auto sentences = side(load_split(split_path(0, 0, 'e'),
                                                  split_path(0, 0, 'f')),
                                       false);
                 write_corpus(P("silver_e2f.amr"),
                              parse_silver_corpus(model, sentences));
               });
    runner.run("project-e2f",
               {P("silver_e2f.amr"), split_path(0, 0, 'e'), split_path(0, 0, 'f'),
                P("e2f.pharaoh")},
               {P("projected_f.amr"), P("projected_f.stats")}, [&] {
                 auto blocks = read_corpus(P("silver_e2f.amr"));
                 auto pairs = load_split(split_path(0, 0, 'e'), split_path(0, 0, 'f'));
                 auto w = read_pharaoh(P("e2f.pharaoh"));
                 ProjectionStats stats;
                 auto projected = project_corpus(blocks, pairs, w, &stats);
                 write_corpus(P("projected_f.amr"), projected);
                 write_file(P("projected_f.stats"), stats.to_text());
               });
    runner.run("train-parser-f", {P("projected_f.amr")}, {P("parser_f.model")}, [&] {
      train_parser(read_corpus(P("projected_f.amr"))).save(P("parser_f.model"));
    });

    // direction 2: the inverse projection that feeds full-cycle
    runner.run("word-align-f2e",
               {P("aligner_fwd.model"), P("aligner_bwd.model"), split_path(1, 0, 'e'),
                split_path(1, 0, 'f')},
               {P("f2e.pharaoh")}, [&] {
                 auto pairs = load_split(split_path(1, 0, 'e'), split_path(1, 0, 'f'));
                 auto fwd = AlignerModel::load(P("aligner_fwd.model"));
                 auto bwd = AlignerModel::load(P("aligner_bwd.model"));
                 auto aligned = align_pairs(fwd, bwd, pairs, symm);
                 std::vector<WordAlignment> swapped;
                 swapped.reserve(aligned.size());
                 for (const auto& a : aligned) swapped.push_back(swap_links(a));
                 write_pharaoh(P("f2e.pharaoh"), swapped);
               });
    runner.run("parse-silver-f2e", {P("parser_f.model"), split_path(1, 0, 'f')},
               {P("silver_f2e.amr")}, [&] {
                 auto model = ParserModel::load(P("parser_f.model"));
                 auto sentences = side(load_split(split_path(1, 0, 'e'),
                                                  split_path(1, 0, 'f')),
                                       true);
                 write_corpus(P("silver_f2e.amr"),
                              parse_silver_corpus(model, sentences));
               });
    runner.run("project-f2e",
               {P("silver_f2e.amr"), split_path(1, 0, 'e'), split_path(1, 0, 'f'),
                P("f2e.pharaoh")},
               {P("projected_e.amr"), P("projected_e.stats")}, [&] {
                 auto blocks = read_corpus(P("silver_f2e.amr"));
                 auto pairs =
                     swap_pairs(load_split(split_path(1, 0, 'e'), split_path(1, 0, 'f')));
                 auto w = read_pharaoh(P("f2e.pharaoh"));
                 ProjectionStats stats;
                 auto projected = project_corpus(blocks, pairs, w, &stats);
                 write_corpus(P("projected_e.amr"), projected);
                 write_file(P("projected_e.stats"), stats.to_text());
               });
    runner.run("train-parser-en2", {P("projected_e.amr")}, {P("parser_en2.model")}, [&] {
      train_parser(read_corpus(P("projected_e.amr"))).save(P("parser_en2.model"));
    });
  }

  // --- evaluations ---------------------------------------------------------
  auto make_translator = [&](const std::string& e2f_key,
                             const std::string& f2e_key) -> std::unique_ptr<Translator> {
    if (system == "mt-dict")
      return std::make_unique<DictionaryTranslator>(
          DictionaryTranslator::from_file(cfg.get("lexicon")));
    return std::make_unique<FileTranslator>(cfg.get(e2f_key), cfg.get(f2e_key));
  };

  // GOLD: target-language gold corpus, target parser (or MT round) as candidate
  {
    std::vector<std::string> inputs{cfg.get("gold.target")};
    if (system == "projection")
      inputs.push_back(P("parser_f.model"));
    else {
      inputs.push_back(P("parser_en.model"));
      inputs.push_back(system == "mt-dict" ? cfg.get("lexicon") : cfg.get("mt.gold_f2e"));
    }
    runner.run("eval-gold", inputs, {P("eval_gold.txt"), P("gold_pred.amr")}, [&] {
      auto gold = read_corpus(cfg.get("gold.target"));
      SmatchResult r;
      std::vector<std::vector<std::string>> sentences;
      for (const auto& b : gold) sentences.push_back(b.tokens);
      if (system == "projection") {
        auto model = ParserModel::load(P("parser_f.model"));
        auto preds = model_parser(model)(sentences);
        write_pred_blocks(P("gold_pred.amr"), sentences, preds);
        r = evaluate_gold(model, gold, smatch_opts);
      } else {
        auto english = ParserModel::load(P("parser_en.model"));
        // gold corpus sentences are in the target language: translate f -> e
        auto translator = make_translator("mt.gold_f2e", "mt.gold_f2e");
        CorpusParser parser = mt_parser(english, *translator, Direction::f2e);
        auto preds = parser(sentences);
        write_pred_blocks(P("gold_pred.amr"), sentences, preds);
        r = evaluate_gold(parser, gold, smatch_opts);
      }
      write_smatch_file(P("eval_gold.txt"), r);
    });
  }

  // SILVER: parsed parallel test split as reference; no gold corpus in sight
  {
    std::vector<std::string> inputs{P("parser_en.model"), split_path(0, 2, 'e'),
                                    split_path(0, 2, 'f'), split_path(0, 0, 'e'),
                                    split_path(0, 0, 'f'), split_path(1, 0, 'e'),
                                    split_path(1, 0, 'f')};
    if (system == "projection")
      inputs.push_back(P("parser_f.model"));
    else if (system == "mt-dict")
      inputs.push_back(cfg.get("lexicon"));
    else
      inputs.push_back(cfg.get("mt.silver_f2e"));
    runner.run("eval-silver", inputs,
               {P("eval_silver.txt"), P("silver_ref.amr"), P("silver_cand.amr")}, [&] {
                 auto test = load_split(split_path(0, 2, 'e'), split_path(0, 2, 'f'));
                 std::unordered_set<uint64_t> train_hashes;
                 for (auto& p :
                      load_split(split_path(0, 0, 'e'), split_path(0, 0, 'f')))
                   train_hashes.insert(pair_hash(p));
                 for (auto& p :
                      load_split(split_path(1, 0, 'e'), split_path(1, 0, 'f')))
                   train_hashes.insert(pair_hash(p));

                 auto english = ParserModel::load(P("parser_en.model"));
                 CorpusParser reference = model_parser(english);
                 ParserModel target;
                 std::unique_ptr<Translator> translator;
                 CorpusParser candidate;
                 if (system == "projection") {
                   target = ParserModel::load(P("parser_f.model"));
                   candidate = model_parser(target);
                 } else {
                   translator = make_translator("mt.silver_f2e", "mt.silver_f2e");
                   candidate = mt_parser(english, *translator, Direction::f2e);
                 }
                 auto refs = reference(side(test, false));
                 auto cands = candidate(side(test, true));
                 write_pred_blocks(P("silver_ref.amr"), side(test, false), refs);
                 write_pred_blocks(P("silver_cand.amr"), side(test, true), cands);
                 SmatchResult r = evaluate_silver(reference, candidate, test,
                                                  smatch_opts, train_hashes);
                 write_smatch_file(P("eval_silver.txt"), r);
               });
  }

  // FULL-CYCLE: English gold test only; never touches gold.target
  {
    std::vector<std::string> inputs{cfg.get("gold.test")};
    if (system == "projection")
      inputs.push_back(P("parser_en2.model"));
    else {
      inputs.push_back(P("parser_en.model"));
      if (system == "mt-dict")
        inputs.push_back(cfg.get("lexicon"));
      else {
        inputs.push_back(cfg.get("mt.cycle_e2f"));
        inputs.push_back(cfg.get("mt.cycle_f2e"));
      }
    }
    runner.run("eval-cycle", inputs, {P("eval_cycle.txt"), P("cycle_pred.amr")}, [&] {
      auto gold_test = read_corpus(cfg.get("gold.test"));
      std::vector<std::vector<std::string>> sentences;
      std::vector<AmrGraph> refs;
      for (const auto& b : gold_test) {
        sentences.push_back(b.tokens);
        refs.push_back(b.graph);
      }
      std::vector<AmrGraph> preds;
      if (system == "projection") {
        auto english2 = ParserModel::load(P("parser_en2.model"));
        preds = model_parser(english2)(sentences);
      } else {
        auto english = ParserModel::load(P("parser_en.model"));
        auto translator = make_translator("mt.cycle_e2f", "mt.cycle_f2e");
        preds = back_translate_parser(english, *translator)(sentences);
      }
      write_pred_blocks(P("cycle_pred.amr"), sentences, preds);
      write_smatch_file(P("eval_cycle.txt"), smatch_corpus(preds, refs, smatch_opts).total);
    });
  }

  runner.run("report",
             {P("eval_gold.txt"), P("eval_silver.txt"), P("eval_cycle.txt")},
             {P("results.tsv")}, [&] {
               ExperimentRecord r;
               r.language = cfg.get("language");
               r.system = system;
               r.gold = read_f1(P("eval_gold.txt"));
               r.silver = read_f1(P("eval_silver.txt"));
               r.cycle = read_f1(P("eval_cycle.txt"));
               write_score_table(P("results.tsv"), {r});
             });
  auto records = read_score_table(P("results.tsv"));
  return records.at(0);
}

}  // namespace amrx
