// Command-line entry point wiring the toolkit's pipelines: corpus
// statistics, attribute extraction, weak labeling, CNN training and
// evaluation. One JSON config drives everything; flags override it.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fashmine/fashmine.hpp"

namespace fm = fashmine;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

fm::PipelineOptions pipeline_options(const fm::RunConfig& cfg) {
  fm::PipelineOptions opt;
  if (!cfg.paths.stopwords.empty()) {
    fm::require_path(cfg.paths.stopwords, "stopwords");
    opt.stopwords = fm::load_wordlist(cfg.paths.stopwords);
  }
  return opt;
}

fm::Corpus load_corpus_checked(const fm::RunConfig& cfg) {
  fm::require_path(cfg.paths.corpus, "corpus");
  return fm::load_corpus(cfg.paths.corpus, pipeline_options(cfg));
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fm::DataError("cannot write output: " + path);
  out << j.dump(2) << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fm::DataError("cannot write output: " + path);
  return out;
}

// ---- stats ----

int cmd_stats(const fm::RunConfig& cfg, const std::string& out_path) {
  auto corpus = load_corpus_checked(cfg);

  std::map<std::string, std::set<std::string>> vocabularies;
  for (const auto& [name, path] : cfg.paths.vocabularies) {
    fm::require_path(path, "vocabulary '" + name + "'");
    vocabularies[name] = fm::load_wordlist(path);
  }
  auto noise =
      fm::lexical_noise(corpus, vocabularies, cfg.strip_online_tokens);
  auto dist = fm::text_distribution(corpus);

  json report{{"meta", cfg.meta()},
              {"noise", fm::to_json(noise)},
              {"distribution", fm::to_json(dist)}};
  if (!cfg.paths.language_tags.empty()) {
    fm::require_path(cfg.paths.language_tags, "language tags");
    json langs = json::object();
    for (const auto& [lang, frac] :
         fm::language_distribution(corpus, cfg.paths.language_tags))
      langs[lang] = frac;
    report["languages"] = std::move(langs);
  }
  write_json(out_path, report);
  std::cout << "stats written to " << out_path << "\n";
  return kExitOk;
}

// ---- extract ----

int cmd_extract(const fm::RunConfig& cfg, const std::string& engine,
                bool run_eval, const std::string& out_path,
                const std::string& report_path) {
  if (engine != "semcluster" && engine != "syncluster")
    throw CLI::ValidationError("--engine", "unknown engine: " + engine);

  auto corpus = load_corpus_checked(cfg);
  fm::require_path(cfg.paths.ontology, "ontology");
  auto ontology = fm::Ontology::load(cfg.paths.ontology);
  fm::DistantSupervisionCache cache;
  if (!cfg.paths.cache.empty()) {
    fm::require_path(cfg.paths.cache, "cache");
    cache = fm::DistantSupervisionCache::load(cfg.paths.cache);
  }
  fm::EmbeddingTable table;
  if (engine == "semcluster") {
    fm::require_path(cfg.paths.embeddings, "embeddings");
    table = fm::EmbeddingTable::load(cfg.paths.embeddings);
    for (const auto& w : table.warnings()) std::cerr << "warning: " << w << "\n";
  }

  std::vector<fm::RankedExtraction> extractions;
  extractions.reserve(corpus.size());
  for (const auto& post : corpus.posts()) {
    extractions.push_back(
        engine == "semcluster"
            ? fm::semcluster_extract(post, ontology, table, cache,
                                     cfg.weights, corpus)
            : fm::syncluster_extract(post, ontology, cache, cfg.weights,
                                     corpus));
  }

  auto out = open_out(out_path);
  out << json{{"meta", cfg.meta()}, {"engine", engine}}.dump() << '\n';
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    json rec{{"post_id", corpus.at(i).post.id}};
    for (const auto& [category, ranked] : extractions[i]) {
      json arr = json::array();
      for (const auto& [term, score] : ranked)
        arr.push_back(json::array({term, score}));
      rec[category] = std::move(arr);
    }
    out << rec.dump() << '\n';
  }
  std::cout << "extractions written to " << out_path << "\n";

  if (run_eval) {
    fm::require_path(cfg.paths.gold, "gold");
    auto gold = fm::load_gold(cfg.paths.gold);
    std::vector<fm::RankedExtraction> aligned;
    aligned.reserve(gold.size());
    for (const auto& g : gold) {
      const fm::ProcessedPost* post = corpus.find(g.post_id);
      if (!post)
        throw fm::DataError("gold post id not in corpus: " + g.post_id);
      std::size_t idx = static_cast<std::size_t>(post - corpus.posts().data());
      aligned.push_back(extractions[idx]);
    }
    auto reports = fm::ranking_eval(aligned, gold);
    json cats = json::object();
    for (const auto& [cat, rep] : reports) cats[cat] = fm::to_json(rep);
    write_json(report_path, json{{"meta", cfg.meta()},
                                 {"engine", engine},
                                 {"categories", std::move(cats)}});
    std::cout << "ranking report written to " << report_path << "\n";
  }
  return kExitOk;
}

// ---- label ----

std::vector<fm::NamedLf> build_lfs(const fm::RunConfig& cfg,
                                   const fm::Corpus& corpus,
                                   const fm::Ontology& ontology,
                                   const fm::EmbeddingTable& table,
                                   const fm::DistantSupervisionCache& cache) {
  std::vector<fm::NamedLf> lfs;
  lfs.push_back(fm::semcluster_lf(ontology, table, cache, cfg.weights, corpus,
                                  cfg.lf.semcluster_threshold));
  lfs.push_back(
      fm::keyword_syntactic_lf(cfg.lf.keyword_syntactic_threshold));
  lfs.push_back(
      fm::keyword_semantic_lf(table, cfg.lf.keyword_semantic_threshold));
  for (const auto& vote_path : cfg.paths.votes) {
    fm::require_path(vote_path, "vote file");
    for (auto& lf : fm::load_external_lfs(vote_path, corpus))
      lfs.push_back(std::move(lf));
  }
  return lfs;
}

int cmd_label(const fm::RunConfig& cfg, const std::string& combiner,
              const std::string& out_path, const std::string& params_path) {
  if (combiner != "dp" && combiner != "majority")
    throw CLI::ValidationError("--combiner", "unknown combiner: " + combiner);

  auto corpus = load_corpus_checked(cfg);
  fm::require_path(cfg.paths.ontology, "ontology");
  auto ontology = fm::Ontology::load(cfg.paths.ontology);
  fm::require_path(cfg.paths.embeddings, "embeddings");
  auto table = fm::EmbeddingTable::load(cfg.paths.embeddings);
  fm::DistantSupervisionCache cache;
  if (!cfg.paths.cache.empty()) {
    fm::require_path(cfg.paths.cache, "cache");
    cache = fm::DistantSupervisionCache::load(cfg.paths.cache);
  }

  auto lfs = build_lfs(cfg, corpus, ontology, table, cache);
  auto matrix = fm::apply_lfs(corpus, lfs);

  auto out = open_out(out_path);
  out << json{{"meta", cfg.meta()}, {"combiner", combiner}}.dump() << '\n';

  if (combiner == "majority") {
    auto labels = fm::majority_vote(matrix, cfg.label_model.binarization);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      json classes = json::array();
      for (std::size_t c = 0; c < fm::kNumClasses; ++c)
        if (labels.labels[i][c])
          classes.push_back(std::string(fm::kClassNames[c]));
      out << json{{"post_id", matrix.post_ids()[i]},
                  {"classes", std::move(classes)},
                  {"no_signal", static_cast<bool>(labels.no_signal[i])}}
                 .dump()
          << '\n';
    }
  } else {
    auto params = fm::fit_all_classes(matrix, cfg.label_model);
    for (const auto& block : params.per_class)
      if (block.unidentifiable)
        std::cerr << "warning: class '" << block.class_name
                  << "' had fewer than two contributing labeling functions; "
                     "parameters left at initialization\n";
    auto posteriors =
        fm::posterior_labels(params, matrix, cfg.label_model.binarization);
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      out << json{{"post_id", matrix.post_ids()[i]},
                  {"probs", posteriors[i]}}
                 .dump()
          << '\n';
    json pj = fm::to_json(params);
    pj["meta"] = cfg.meta();
    pj["lf_names"] = params.lf_names;
    write_json(params_path, pj);
    std::cout << "fitted parameters written to " << params_path << "\n";
  }
  std::cout << "labels written to " << out_path << "\n";
  return kExitOk;
}

// ---- train ----

struct LabelFile {
  // post id -> probabilistic label vector
  std::vector<std::pair<std::string, std::vector<double>>> rows;
};

LabelFile load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fm::DataError("cannot open labels: " + path);
  LabelFile lf;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw fm::DataError(path + ": malformed label row at line " +
                          std::to_string(lineno) + ": " + e.what());
    }
    if (j.contains("meta") && !j.contains("post_id")) continue;  // header
    std::vector<double> probs;
    if (j.contains("probs")) {
      probs = j.at("probs").get<std::vector<double>>();
      if (probs.size() != fm::kNumClasses)
        throw fm::DataError(path + ": label vector has wrong length at line " +
                            std::to_string(lineno));
    } else if (j.contains("classes")) {
      probs.assign(fm::kNumClasses, 0.0);
      for (const auto& c : j.at("classes")) {
        auto idx = fm::class_index(c.get<std::string>());
        if (!idx)
          throw fm::DataError(path + ": unknown class at line " +
                              std::to_string(lineno));
        probs[*idx] = 1.0;
      }
    } else {
      throw fm::DataError(path + ": label row needs 'probs' or 'classes'");
    }
    lf.rows.emplace_back(j.at("post_id").get<std::string>(),
                         std::move(probs));
  }
  return lf;
}

int cmd_train(const fm::RunConfig& cfg, const std::string& labels_path,
              const std::string& checkpoint_path,
              const std::string& vocab_path, const std::string& log_path) {
  auto corpus = load_corpus_checked(cfg);
  fm::require_path(labels_path, "labels");
  auto labels = load_labels(labels_path);

  auto vocab = fm::build_vocab(corpus, cfg.min_frequency);
  fm::CnnConfig cnn_cfg = cfg.cnn;
  cnn_cfg.vocab_size = vocab.size();
  cnn_cfg.seed = cfg.seed;
  cnn_cfg.validate();

  std::vector<fm::Batch> batches;
  fm::Batch current;
  for (const auto& [post_id, probs] : labels.rows) {
    const fm::ProcessedPost* post = corpus.find(post_id);
    if (!post)
      throw fm::DataError("label post id not in corpus: " + post_id);
    current.ids.push_back(
        fm::encode_tokens(post->tokens, vocab, cnn_cfg.max_seq_len));
    current.labels.push_back(probs);
    if (static_cast<int>(current.ids.size()) >= cnn_cfg.batch_size) {
      batches.push_back(std::move(current));
      current = {};
    }
  }
  if (!current.ids.empty()) batches.push_back(std::move(current));
  if (batches.empty()) throw fm::DataError("no training examples");

  auto model = fm::CnnModel::init(cnn_cfg);
  auto result = fm::train(std::move(model), batches, cnn_cfg);

  fm::save_checkpoint(checkpoint_path, result.model, vocab.hash(),
                      cfg.hash(), cfg.seed);
  write_json(vocab_path, json{{"meta", cfg.meta()},
                              {"min_frequency", cfg.min_frequency},
                              {"hash", vocab.hash()},
                              {"words", vocab.words()}});
  auto log = open_out(log_path);
  log << "# config_hash=" << cfg.hash() << " seed=" << cfg.seed << "\n";
  log << "epoch,loss\n";
  for (std::size_t e = 0; e < result.epoch_losses.size(); ++e)
    log << (e + 1) << ',' << json(result.epoch_losses[e]).dump() << "\n";

  std::cout << "checkpoint written to " << checkpoint_path << "\n";
  std::cout << "vocabulary written to " << vocab_path << "\n";
  std::cout << "training log written to " << log_path << "\n";
  return kExitOk;
}

// ---- predict ----

fm::Vocab load_vocab(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fm::DataError("cannot open vocabulary: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw fm::DataError("bad vocabulary JSON: " + std::string(e.what()));
  }
  return fm::Vocab(j.at("words").get<std::vector<std::string>>());
}

int cmd_predict(const fm::RunConfig& cfg, const std::string& checkpoint_path,
                const std::string& vocab_path, double threshold,
                const std::string& out_path) {
  auto corpus = load_corpus_checked(cfg);
  fm::require_path(checkpoint_path, "checkpoint");
  fm::require_path(vocab_path, "vocabulary");
  auto ckpt = fm::load_checkpoint(checkpoint_path);
  auto vocab = load_vocab(vocab_path);
  const std::string expected =
      ckpt.header.value("vocab_hash", std::string{});
  if (!expected.empty() && vocab.hash() != expected)
    throw fm::DataError("vocabulary hash does not match checkpoint");

  auto out = open_out(out_path);
  out << json{{"meta", cfg.meta()}, {"threshold", threshold}}.dump() << '\n';
  for (const auto& post : corpus.posts()) {
    auto classes = fm::predict(ckpt.model, post.tokens, vocab, threshold);
    out << json{{"post_id", post.post.id},
                {"classes", std::vector<std::string>(classes.begin(),
                                                      classes.end())}}
               .dump()
        << '\n';
  }
  std::cout << "predictions written to " << out_path << "\n";
  return kExitOk;
}

// ---- eval ----

int cmd_eval(const fm::RunConfig& cfg, const std::string& predictions_path,
             bool micro, const std::string& out_path) {
  fm::require_path(predictions_path, "predictions");
  fm::require_path(cfg.paths.gold, "gold");
  auto gold = fm::load_gold(cfg.paths.gold);

  std::map<std::string, std::set<std::string>> predicted;
  {
    std::ifstream in(predictions_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw fm::DataError(predictions_path + ": malformed row at line " +
                            std::to_string(lineno) + ": " + e.what());
      }
      if (!j.contains("post_id")) continue;  // header
      std::set<std::string> classes;
      for (const auto& c : j.at("classes"))
        classes.insert(c.get<std::string>());
      predicted[j.at("post_id").get<std::string>()] = std::move(classes);
    }
  }

  std::vector<std::set<std::string>> pred_sets, gold_sets;
  for (const auto& g : gold) {
    auto it = predicted.find(g.post_id);
    if (it == predicted.end())
      throw fm::DataError("no prediction for gold post id: " + g.post_id);
    pred_sets.push_back(it->second);
    gold_sets.push_back(g.classes);
  }
  auto metrics =
      micro ? fm::classification_metrics_micro(pred_sets, gold_sets,
                                               fm::kNumClasses)
            : fm::classification_metrics(pred_sets, gold_sets,
                                         fm::kNumClasses);
  write_json(out_path, json{{"meta", cfg.meta()},
                            {"averaging", micro ? "micro" : "example"},
                            {"classification", fm::to_json(metrics)}});
  std::cout << "evaluation written to " << out_path << "\n";
  return kExitOk;
}

// Paired t-test between two extraction ranking reports (per-post AP lists).
int cmd_eval_ttest(const fm::RunConfig& cfg, const std::string& report_a,
                   const std::string& report_b, const std::string& category,
                   const std::string& out_path) {
  auto load_ap = [&category](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fm::DataError("cannot open report: " + path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw fm::DataError("bad report JSON in " + path + ": " + e.what());
    }
    if (!j.at("categories").contains(category))
      throw fm::DataError(path + " has no category '" + category + "'");
    return j.at("categories").at(category).at("per_post_ap")
        .get<std::vector<double>>();
  };
  auto a = load_ap(report_a);
  auto b = load_ap(report_b);
  auto r = fm::paired_ttest(a, b);
  write_json(out_path, json{{"meta", cfg.meta()},
                            {"category", category},
                            {"n", a.size()},
                            {"t", r.t},
                            {"p", r.p}});
  std::cout << "t = " << r.t << ", p = " << r.p << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak-supervision text mining of fashion attributes"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  app.add_option("--config", config_path, "run configuration (JSON)")
      ->required();
  app.add_option("--seed", seed_override, "override the configured seed");

  // stats
  auto* stats = app.add_subcommand("stats", "corpus noise and distribution");
  bool strip = false;
  std::string stats_out;
  stats->add_flag("--strip-online-tokens", strip,
                  "remove hashtags/mentions/emojis/URLs before OOV counting");
  stats->add_option("--out", stats_out, "report path");

  // extract
  auto* extract = app.add_subcommand("extract", "ranked attribute extraction");
  std::string engine = "semcluster";
  bool run_eval = false;
  std::string extract_out, extract_report;
  extract->add_option("--engine", engine, "semcluster | syncluster");
  extract->add_flag("--eval", run_eval, "evaluate against the gold file");
  extract->add_option("--out", extract_out, "extraction JSONL path");
  extract->add_option("--report", extract_report, "ranking report path");

  // label
  auto* label = app.add_subcommand("label", "combine labeling functions");
  std::string combiner = "dp";
  std::string label_out, params_out;
  label->add_option("--combiner", combiner, "dp | majority");
  label->add_option("--out", label_out, "labels JSONL path");
  label->add_option("--params-out", params_out, "fitted parameters path");

  // train
  auto* train = app.add_subcommand("train", "train the text CNN");
  std::string train_labels, train_ckpt, train_vocab, train_log;
  train->add_option("--labels", train_labels, "probabilistic labels JSONL");
  train->add_option("--checkpoint", train_ckpt, "checkpoint output path");
  train->add_option("--vocab", train_vocab, "vocabulary output path");
  train->add_option("--log", train_log, "training log CSV path");

  // predict
  auto* predict = app.add_subcommand("predict", "predict with a checkpoint");
  std::string pred_ckpt, pred_vocab, pred_out;
  std::optional<double> threshold;
  predict->add_option("--checkpoint", pred_ckpt, "checkpoint path");
  predict->add_option("--vocab", pred_vocab, "vocabulary path");
  predict->add_option("--threshold", threshold, "sigmoid threshold");
  predict->add_option("--out", pred_out, "predictions JSONL path");

  // eval
  auto* eval = app.add_subcommand("eval", "metrics against the gold file");
  std::string eval_preds, eval_out, ttest_a, ttest_b;
  std::string ttest_category = "items";
  bool micro = false;
  eval->add_option("--predictions", eval_preds, "predictions JSONL path");
  eval->add_flag("--micro", micro, "micro-averaged metrics");
  eval->add_option("--out", eval_out, "report path");
  eval->add_option("--ttest-a", ttest_a, "first ranking report");
  eval->add_option("--ttest-b", ttest_b, "second ranking report");
  eval->add_option("--ttest-category", ttest_category,
                   "category for the paired t-test");

  CLI11_PARSE(app, argc, argv);

  try {
    fm::RunConfig cfg = fm::RunConfig::load(config_path);
    if (seed_override) {
      cfg.seed = *seed_override;
      cfg.label_model.seed = *seed_override;
    }
    if (strip) cfg.strip_online_tokens = true;
    if (threshold) cfg.predict_threshold = *threshold;

    auto path_or = [&cfg](const std::string& flag_value,
                          const std::string& fallback) {
      return flag_value.empty() ? cfg.out_path(fallback) : flag_value;
    };

    if (stats->parsed())
      return cmd_stats(cfg, path_or(stats_out, "stats.json"));
    if (extract->parsed())
      return cmd_extract(cfg, engine, run_eval,
                         path_or(extract_out, "extract_" + engine + ".jsonl"),
                         path_or(extract_report,
                                 "extract_" + engine + "_report.json"));
    if (label->parsed())
      return cmd_label(cfg, combiner,
                       label_out.empty() ? cfg.out_path(cfg.paths.labels)
                                         : label_out,
                       path_or(params_out, "label_params.json"));
    if (train->parsed())
      return cmd_train(
          cfg,
          train_labels.empty() ? cfg.out_path(cfg.paths.labels)
                               : train_labels,
          train_ckpt.empty() ? cfg.out_path(cfg.paths.checkpoint)
                             : train_ckpt,
          train_vocab.empty() ? cfg.out_path(cfg.paths.vocab) : train_vocab,
          path_or(train_log, "train_log.csv"));
    if (predict->parsed())
      return cmd_predict(
          cfg,
          pred_ckpt.empty() ? cfg.out_path(cfg.paths.checkpoint) : pred_ckpt,
          pred_vocab.empty() ? cfg.out_path(cfg.paths.vocab) : pred_vocab,
          cfg.predict_threshold, path_or(pred_out, "predictions.jsonl"));
    if (eval->parsed()) {
      if (!ttest_a.empty() || !ttest_b.empty()) {
        if (ttest_a.empty() || ttest_b.empty())
          throw CLI::ValidationError("--ttest-a/--ttest-b",
                                     "both reports are required");
        return cmd_eval_ttest(cfg, ttest_a, ttest_b, ttest_category,
                              path_or(eval_out, "ttest.json"));
      }
      return cmd_eval(cfg,
                      eval_preds.empty() ? cfg.out_path("predictions.jsonl")
                                         : eval_preds,
                      micro, path_or(eval_out, "eval_report.json"));
    }
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fm::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const fm::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
