#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/common.hpp"
#include "fashmine/errors.hpp"
#include "fashmine/extract.hpp"
#include "fashmine/textcnn.hpp"
#include "fashmine/weaklabel.hpp"

namespace fashmine {

inline void to_json(nlohmann::json& j, const ScoringWeights& w) {
  j = nlohmann::json{{"caption", w.caption},
                     {"comment", w.comment},
                     {"usertag", w.usertag},
                     {"hashtag", w.hashtag},
                     {"gamma", w.gamma},
                     {"eta", w.eta},
                     {"alpha", w.alpha},
                     {"top_k", w.top_k},
                     {"similarity_gate", w.similarity_gate}};
}

inline void from_json(const nlohmann::json& j, ScoringWeights& w) {
  ScoringWeights d;
  w.caption = j.value("caption", d.caption);
  w.comment = j.value("comment", d.comment);
  w.usertag = j.value("usertag", d.usertag);
  w.hashtag = j.value("hashtag", d.hashtag);
  w.gamma = j.value("gamma", d.gamma);
  w.eta = j.value("eta", d.eta);
  w.alpha = j.value("alpha", d.alpha);
  w.top_k = j.value("top_k", d.top_k);
  w.similarity_gate = j.value("similarity_gate", d.similarity_gate);
}

struct LfConfig {
  double semcluster_threshold = 0.5;
  double keyword_syntactic_threshold = 0.8;
  double keyword_semantic_threshold = 0.8;
};

inline void to_json(nlohmann::json& j, const LfConfig& c) {
  j = nlohmann::json{
      {"semcluster_threshold", c.semcluster_threshold},
      {"keyword_syntactic_threshold", c.keyword_syntactic_threshold},
      {"keyword_semantic_threshold", c.keyword_semantic_threshold}};
}

inline void from_json(const nlohmann::json& j, LfConfig& c) {
  LfConfig d;
  c.semcluster_threshold =
      j.value("semcluster_threshold", d.semcluster_threshold);
  c.keyword_syntactic_threshold =
      j.value("keyword_syntactic_threshold", d.keyword_syntactic_threshold);
  c.keyword_semantic_threshold =
      j.value("keyword_semantic_threshold", d.keyword_semantic_threshold);
}

inline void to_json(nlohmann::json& j, const LabelModelConfig& c) {
  j = nlohmann::json{
      {"max_iterations", c.max_iterations},
      {"tolerance", c.tolerance},
      {"seed", c.seed},
      {"prior", c.prior},
      {"binarization", c.binarization == BinarizationMode::CompletePrediction
                           ? "complete"
                           : "partial-abstain"}};
}

inline void from_json(const nlohmann::json& j, LabelModelConfig& c) {
  LabelModelConfig d;
  c.max_iterations = j.value("max_iterations", d.max_iterations);
  c.tolerance = j.value("tolerance", d.tolerance);
  c.seed = j.value("seed", d.seed);
  c.prior = j.value("prior", d.prior);
  const std::string mode = j.value("binarization", std::string("complete"));
  if (mode == "complete")
    c.binarization = BinarizationMode::CompletePrediction;
  else if (mode == "partial-abstain")
    c.binarization = BinarizationMode::PartialAbstain;
  else
    throw DataError("unknown binarization mode: " + mode);
}

struct RunPaths {
  std::string corpus;
  std::string ontology;
  std::string embeddings;
  std::string cache;
  std::string gold;
  std::vector<std::string> votes;
  std::string stopwords;                          // optional override
  std::map<std::string, std::string> vocabularies;  // stats OOV word lists
  std::string language_tags;                      // optional
  std::string checkpoint = "checkpoint.bin";
  std::string vocab = "vocab.json";
  std::string labels = "labels.jsonl";
  std::string output_dir = ".";
};

inline void to_json(nlohmann::json& j, const RunPaths& p) {
  j = nlohmann::json{{"corpus", p.corpus},
                     {"ontology", p.ontology},
                     {"embeddings", p.embeddings},
                     {"cache", p.cache},
                     {"gold", p.gold},
                     {"votes", p.votes},
                     {"stopwords", p.stopwords},
                     {"vocabularies", p.vocabularies},
                     {"language_tags", p.language_tags},
                     {"checkpoint", p.checkpoint},
                     {"vocab", p.vocab},
                     {"labels", p.labels},
                     {"output_dir", p.output_dir}};
}

inline void from_json(const nlohmann::json& j, RunPaths& p) {
  RunPaths d;
  p.corpus = j.value("corpus", d.corpus);
  p.ontology = j.value("ontology", d.ontology);
  p.embeddings = j.value("embeddings", d.embeddings);
  p.cache = j.value("cache", d.cache);
  p.gold = j.value("gold", d.gold);
  p.votes = j.value("votes", d.votes);
  p.stopwords = j.value("stopwords", d.stopwords);
  p.vocabularies = j.value("vocabularies", d.vocabularies);
  p.language_tags = j.value("language_tags", d.language_tags);
  p.checkpoint = j.value("checkpoint", d.checkpoint);
  p.vocab = j.value("vocab", d.vocab);
  p.labels = j.value("labels", d.labels);
  p.output_dir = j.value("output_dir", d.output_dir);
}

// Single JSON config driving every subcommand; any field can be overridden
// on the command line. The effective config's hash and seed are embedded in
// every output artifact.
struct RunConfig {
  RunPaths paths;
  ScoringWeights weights;
  LfConfig lf;
  LabelModelConfig label_model;
  CnnConfig cnn;
  std::uint64_t seed = 0;
  bool strip_online_tokens = false;
  int min_frequency = 1;
  double predict_threshold = 0.5;

  static RunConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DataError("bad config JSON in " + path + ": " + e.what());
    }
    RunConfig c;
    if (j.contains("paths")) c.paths = j.at("paths").get<RunPaths>();
    if (j.contains("weights"))
      c.weights = j.at("weights").get<ScoringWeights>();
    if (j.contains("lf")) c.lf = j.at("lf").get<LfConfig>();
    if (j.contains("label_model"))
      c.label_model = j.at("label_model").get<LabelModelConfig>();
    if (j.contains("cnn")) c.cnn = j.at("cnn").get<CnnConfig>();
    c.seed = j.value("seed", c.seed);
    c.strip_online_tokens =
        j.value("strip_online_tokens", c.strip_online_tokens);
    c.min_frequency = j.value("min_frequency", c.min_frequency);
    c.predict_threshold = j.value("predict_threshold", c.predict_threshold);
    return c;
  }

  nlohmann::json to_json_value() const {
    return nlohmann::json{{"paths", paths},
                          {"weights", weights},
                          {"lf", lf},
                          {"label_model", label_model},
                          {"cnn", cnn},
                          {"seed", seed},
                          {"strip_online_tokens", strip_online_tokens},
                          {"min_frequency", min_frequency},
                          {"predict_threshold", predict_threshold}};
  }

  // Hash of the canonical (key-sorted) dump of the effective config.
  std::string hash() const { return to_hex(fnv1a64(to_json_value().dump())); }

  nlohmann::json meta() const {
    return nlohmann::json{{"config_hash", hash()}, {"seed", seed}};
  }

  std::string out_path(const std::string& name) const {
    return (std::filesystem::path(paths.output_dir) / name).string();
  }
};

inline void require_path(const std::string& path, const std::string& what) {
  if (path.empty()) throw DataError("config is missing a path for " + what);
  if (!std::filesystem::exists(path))
    throw DataError(what + " path does not exist: " + path);
}

}  // namespace fashmine
