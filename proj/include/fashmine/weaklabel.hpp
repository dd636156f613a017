#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/classes.hpp"
#include "fashmine/corpus.hpp"
#include "fashmine/embeddings.hpp"
#include "fashmine/extract.hpp"

namespace fashmine {

// A labeling-function output: Abstain ("nil"), or a non-empty set of class
// names read as a complete multi-label prediction.
class Vote {
 public:
  static Vote abstain() { return Vote{}; }

  static Vote of(std::set<std::string> classes) {
    if (classes.empty())
      throw DataError("a firing vote must name at least one class");
    Vote v;
    v.classes_ = std::move(classes);
    v.abstain_ = false;
    return v;
  }

  bool is_abstain() const { return abstain_; }
  const std::set<std::string>& classes() const { return classes_; }
  bool names(const std::string& cls) const { return classes_.count(cls); }

 private:
  bool abstain_ = true;
  std::set<std::string> classes_;
};

using LabelingFunction = std::function<Vote(const ProcessedPost&)>;

struct NamedLf {
  std::string name;
  LabelingFunction fn;
};

// posts x labeling functions, rectangular.
class VoteMatrix {
 public:
  VoteMatrix() = default;
  VoteMatrix(std::vector<std::string> post_ids,
             std::vector<std::string> lf_names)
      : post_ids_(std::move(post_ids)), lf_names_(std::move(lf_names)) {
    std::set<std::string> unique(lf_names_.begin(), lf_names_.end());
    if (unique.size() != lf_names_.size())
      throw DataError("duplicate labeling-function names");
    votes_.assign(post_ids_.size(),
                  std::vector<Vote>(lf_names_.size(), Vote::abstain()));
  }

  std::size_t rows() const { return post_ids_.size(); }
  std::size_t cols() const { return lf_names_.size(); }
  const std::vector<std::string>& post_ids() const { return post_ids_; }
  const std::vector<std::string>& lf_names() const { return lf_names_; }

  const Vote& at(std::size_t i, std::size_t j) const { return votes_[i][j]; }
  void set(std::size_t i, std::size_t j, Vote v) {
    votes_[i][j] = std::move(v);
  }

 private:
  std::vector<std::string> post_ids_;
  std::vector<std::string> lf_names_;
  std::vector<std::vector<Vote>> votes_;
};

// --- built-in text labeling functions ---

namespace detail {

inline std::optional<std::string> class_for_term(
    const std::map<std::string, std::vector<std::string>>& class_terms,
    const std::string& term) {
  for (const auto& [cls, terms] : class_terms)
    if (std::find(terms.begin(), terms.end(), term) != terms.end())
      return cls;
  return std::nullopt;
}

}  // namespace detail

// Extraction-backed LF: classes whose item terms rank above score_threshold.
inline NamedLf semcluster_lf(const Ontology& ontology,
                             const EmbeddingTable& table,
                             const DistantSupervisionCache& cache,
                             const ScoringWeights& weights,
                             const Corpus& corpus,
                             double score_threshold = 0.5) {
  const auto& class_terms = default_class_terms();
  return {"semcluster",
          [&ontology, &table, &cache, weights, &corpus, score_threshold,
           &class_terms](const ProcessedPost& post) {
            auto ranked = semcluster_extract(post, ontology, table, cache,
                                             weights, corpus);
            std::set<std::string> classes;
            auto it = ranked.find("items");
            if (it != ranked.end())
              for (const auto& [term, score] : it->second)
                if (score >= score_threshold)
                  if (auto cls = detail::class_for_term(class_terms, term))
                    classes.insert(*cls);
            return classes.empty() ? Vote::abstain()
                                   : Vote::of(std::move(classes));
          }};
}

// Keyword matching with Levenshtein distance against the class term lists.
inline NamedLf keyword_syntactic_lf(double similarity_threshold = 0.8) {
  const auto& class_terms = default_class_terms();
  return {"keyword-syntactic",
          [similarity_threshold, &class_terms](const ProcessedPost& post) {
            std::set<std::string> classes;
            for (const auto& t : post.tokens) {
              if (t.kind != TokenKind::Word || !t.normalized) continue;
              for (const auto& [cls, terms] : class_terms)
                for (const auto& term : terms)
                  if (levenshtein_similarity(*t.normalized, term) >=
                      similarity_threshold)
                    classes.insert(cls);
            }
            return classes.empty() ? Vote::abstain()
                                   : Vote::of(std::move(classes));
          }};
}

// Keyword matching with embedding cosine against the class term lists.
inline NamedLf keyword_semantic_lf(const EmbeddingTable& table,
                                   double similarity_threshold = 0.8) {
  const auto& class_terms = default_class_terms();
  return {"keyword-semantic",
          [&table, similarity_threshold,
           &class_terms](const ProcessedPost& post) {
            std::set<std::string> classes;
            for (const auto& t : post.tokens) {
              if (t.kind != TokenKind::Word || !t.normalized) continue;
              for (const auto& [cls, terms] : class_terms)
                for (const auto& term : terms) {
                  auto sim = table.cosine(*t.normalized, term);
                  if (sim && *sim >= similarity_threshold) classes.insert(cls);
                }
            }
            return classes.empty() ? Vote::abstain()
                                   : Vote::of(std::move(classes));
          }};
}

// External vote files stand in for the vision-API labeling functions.
// JSONL rows: {"post_id": str, "lf": str, "classes": [str] | null}.
// Posts without a row abstain; rows must reference known posts.
inline std::vector<NamedLf> load_external_lfs(const std::string& path,
                                              const Corpus& corpus) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vote file: " + path);
  // lf name -> post id -> vote
  auto by_lf = std::make_shared<
      std::map<std::string, std::map<std::string, Vote>>>();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ": malformed vote at line " +
                      std::to_string(lineno) + ": " + e.what());
    }
    const std::string post_id = j.at("post_id").get<std::string>();
    const std::string lf = j.at("lf").get<std::string>();
    if (!corpus.find(post_id))
      throw DataError(path + ": vote for unknown post id '" + post_id +
                      "' at line " + std::to_string(lineno));
    Vote v = Vote::abstain();
    if (j.contains("classes") && !j.at("classes").is_null()) {
      std::set<std::string> classes;
      for (const auto& c : j.at("classes"))
        classes.insert(c.get<std::string>());
      if (classes.empty())
        throw DataError(path + ": empty class list at line " +
                        std::to_string(lineno) + " (use null to abstain)");
      v = Vote::of(std::move(classes));
    }
    (*by_lf)[lf][post_id] = std::move(v);
  }
  std::vector<NamedLf> lfs;
  for (const auto& [name, votes] : *by_lf) {
    lfs.push_back({name, [by_lf, name](const ProcessedPost& post) {
                     const auto& m = by_lf->at(name);
                     auto it = m.find(post.post.id);
                     return it == m.end() ? Vote::abstain() : it->second;
                   }});
  }
  return lfs;
}

// Fill the matrix column by column; every vote is validated against the
// class set.
inline VoteMatrix apply_lfs(const Corpus& corpus,
                            const std::vector<NamedLf>& lfs) {
  std::vector<std::string> post_ids;
  post_ids.reserve(corpus.size());
  for (const auto& p : corpus.posts()) post_ids.push_back(p.post.id);
  std::vector<std::string> lf_names;
  lf_names.reserve(lfs.size());
  for (const auto& lf : lfs) lf_names.push_back(lf.name);

  VoteMatrix m(std::move(post_ids), std::move(lf_names));
  for (std::size_t j = 0; j < lfs.size(); ++j) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      Vote v = lfs[j].fn(corpus.at(i));
      if (!v.is_abstain())
        for (const auto& cls : v.classes())
          if (!class_index(cls))
            throw DataError("labeling function '" + lfs[j].name +
                            "' voted unknown class '" + cls + "' on post '" +
                            corpus.at(i).post.id + "'");
      m.set(i, j, std::move(v));
    }
  }
  return m;
}

// --- binarization and majority vote ---

enum class BinarizationMode {
  // A firing LF is a complete multi-label prediction: classes it does not
  // name are negatives.
  CompletePrediction,
  // A firing LF only asserts the classes it names; others stay abstain.
  PartialAbstain,
};

// Abstain -> 0; vote containing c -> +1; firing vote without c -> -1 (or 0
// under PartialAbstain).
inline std::vector<std::vector<int>> per_class_votes(
    const VoteMatrix& matrix, const std::string& cls,
    BinarizationMode mode = BinarizationMode::CompletePrediction) {
  if (!class_index(cls)) throw DataError("unknown class: " + cls);
  std::vector<std::vector<int>> out(matrix.rows(),
                                    std::vector<int>(matrix.cols(), 0));
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const Vote& v = matrix.at(i, j);
      if (v.is_abstain()) continue;
      if (v.names(cls))
        out[i][j] = 1;
      else
        out[i][j] = mode == BinarizationMode::CompletePrediction ? -1 : 0;
    }
  return out;
}

struct MajorityLabels {
  // per post: 13 binary labels in ClassSet order
  std::vector<std::array<bool, kNumClasses>> labels;
  // true when every LF abstained on the post (all-negative label emitted)
  std::vector<bool> no_signal;
};

// Strict majority of non-abstaining LFs per class; ties are negative.
inline MajorityLabels majority_vote(
    const VoteMatrix& matrix,
    BinarizationMode mode = BinarizationMode::CompletePrediction) {
  MajorityLabels out;
  out.labels.assign(matrix.rows(), {});
  out.no_signal.assign(matrix.rows(), false);

  std::vector<std::vector<std::vector<int>>> per_class;
  per_class.reserve(kNumClasses);
  for (auto cls : kClassNames)
    per_class.push_back(per_class_votes(matrix, std::string(cls), mode));

  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (!matrix.at(i, j).is_abstain()) any = true;
    out.no_signal[i] = !any;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      int pos = 0, neg = 0;
      for (std::size_t j = 0; j < matrix.cols(); ++j) {
        if (per_class[c][i][j] > 0) ++pos;
        if (per_class[c][i][j] < 0) ++neg;
      }
      out.labels[i][c] = pos > neg;
    }
  }
  return out;
}

// --- per-class two-coin generative model, fitted by EM ---

struct LabelModelConfig {
  int max_iterations = 1000;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;  // recorded in artifacts; the fit is deterministic
  double prior = 0.5;
  BinarizationMode binarization = BinarizationMode::CompletePrediction;
};

struct ClassParams {
  std::string class_name;
  std::vector<double> alpha;  // per LF, clamped to [0.01, 0.99]
  std::vector<double> beta;   // per LF propensity
  double prior = 0.5;
  bool unidentifiable = false;
  int iterations = 0;
  double log_likelihood = 0.0;
};

struct LabelModelParams {
  std::vector<ClassParams> per_class;  // ClassSet order
  std::vector<std::string> lf_names;
};

namespace detail {

constexpr double kAlphaFloor = 0.01;
constexpr double kAlphaCeil = 0.99;

inline double clamp_alpha(double a) {
  return std::min(kAlphaCeil, std::max(kAlphaFloor, a));
}

// log p(votes_i | Y=y) for one item under the two-coin model, including the
// propensity factors (they matter for the likelihood trace, not the
// posterior).
inline double log_item_given_y(const std::vector<int>& row,
                               const std::vector<double>& alpha,
                               const std::vector<double>& beta, int y) {
  constexpr double floor = 1e-300;  // keeps impossible-data rows finite
  double lp = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) {
      lp += std::log(std::max(floor, 1.0 - beta[j]));
    } else {
      lp += std::log(std::max(floor, beta[j]));
      lp += std::log(row[j] == y ? alpha[j] : 1.0 - alpha[j]);
    }
  }
  return lp;
}

inline double posterior_positive(const std::vector<int>& row,
                                 const std::vector<double>& alpha,
                                 const std::vector<double>& beta,
                                 double prior) {
  const double lp = std::log(prior) + log_item_given_y(row, alpha, beta, +1);
  const double ln =
      std::log(1.0 - prior) + log_item_given_y(row, alpha, beta, -1);
  const double mx = std::max(lp, ln);
  const double zp = std::exp(lp - mx);
  const double zn = std::exp(ln - mx);
  return zp / (zp + zn);
}

}  // namespace detail

// EM fit of the two-coin conditionally independent model for one class.
// Closed-form M-steps; alpha initialized at 0.7 (symmetry breaking), beta at
// empirical coverage; the marginal log-likelihood must not decrease.
inline ClassParams fit_generative(const VoteMatrix& matrix,
                                  const std::string& cls,
                                  const LabelModelConfig& config = {}) {
  if (matrix.rows() == 0 || matrix.cols() == 0)
    throw DataError("fit_generative: empty vote matrix");
  if (config.prior <= 0.0 || config.prior >= 1.0)
    throw DataError("fit_generative: prior must be in (0,1)");

  const auto votes = per_class_votes(matrix, cls, config.binarization);
  const std::size_t n = matrix.rows();
  const std::size_t m = matrix.cols();

  ClassParams params;
  params.class_name = cls;
  params.prior = config.prior;
  params.alpha.assign(m, 0.7);
  params.beta.assign(m, 0.0);

  std::size_t contributing = 0;
  std::vector<std::size_t> coverage(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      if (votes[i][j] != 0) ++coverage[j];
    params.beta[j] =
        static_cast<double>(coverage[j]) / static_cast<double>(n);
    if (coverage[j] > 0) ++contributing;
  }
  if (contributing == 0) throw DataError("fit_generative: zero coverage");
  if (contributing < 2) {
    params.unidentifiable = true;
    return params;
  }

  double prev_ll = -std::numeric_limits<double>::infinity();
  std::vector<double> q(n);
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    // E-step
    double ll = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lp = std::log(config.prior) +
                        detail::log_item_given_y(votes[i], params.alpha,
                                                 params.beta, +1);
      const double ln = std::log(1.0 - config.prior) +
                        detail::log_item_given_y(votes[i], params.alpha,
                                                 params.beta, -1);
      const double mx = std::max(lp, ln);
      ll += mx + std::log(std::exp(lp - mx) + std::exp(ln - mx));
      q[i] = 1.0 / (1.0 + std::exp(ln - lp));
    }
    if (ll + 1e-9 * (1.0 + std::fabs(ll)) < prev_ll)
      throw NumericError("fit_generative: log-likelihood decreased");
    params.log_likelihood = ll;
    params.iterations = iter + 1;
    const bool converged =
        iter > 0 && std::fabs(ll - prev_ll) < config.tolerance;
    prev_ll = ll;
    if (converged) break;

    // M-step: alpha_j = expected fraction of correct votes; beta_j is the
    // coverage MLE and never moves.
    for (std::size_t j = 0; j < m; ++j) {
      if (coverage[j] == 0) continue;
      double correct = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (votes[i][j] == 1)
          correct += q[i];
        else if (votes[i][j] == -1)
          correct += 1.0 - q[i];
      }
      params.alpha[j] =
          detail::clamp_alpha(correct / static_cast<double>(coverage[j]));
    }
  }
  return params;
}

// Fit the 13 independent per-class models.
inline LabelModelParams fit_all_classes(const VoteMatrix& matrix,
                                        const LabelModelConfig& config = {}) {
  LabelModelParams out;
  out.lf_names = matrix.lf_names();
  for (auto cls : kClassNames)
    out.per_class.push_back(fit_generative(matrix, std::string(cls), config));
  return out;
}

// Probabilistic multi-labels: per post, the posterior of each class under
// its fitted model, concatenated in ClassSet order.
inline std::vector<std::vector<double>> posterior_labels(
    const LabelModelParams& params, const VoteMatrix& matrix,
    BinarizationMode mode = BinarizationMode::CompletePrediction) {
  if (params.per_class.size() != kNumClasses)
    throw DataError("posterior_labels: params missing classes");
  std::vector<std::vector<double>> out(
      matrix.rows(), std::vector<double>(kNumClasses, 0.0));
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto& block = params.per_class[c];
    const auto votes =
        per_class_votes(matrix, std::string(kClassNames[c]), mode);
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      out[i][c] = detail::posterior_positive(votes[i], block.alpha,
                                             block.beta, block.prior);
  }
  return out;
}

// --- parameter persistence ---

inline nlohmann::json to_json(const LabelModelParams& params) {
  nlohmann::json classes = nlohmann::json::object();
  nlohmann::json priors = nlohmann::json::object();
  for (const auto& block : params.per_class) {
    nlohmann::json lfs = nlohmann::json::object();
    for (std::size_t j = 0; j < params.lf_names.size(); ++j)
      lfs[params.lf_names[j]] = {{"alpha", block.alpha[j]},
                                 {"beta", block.beta[j]}};
    if (block.unidentifiable) lfs["_unidentifiable"] = true;
    classes[block.class_name] = std::move(lfs);
    priors[block.class_name] = block.prior;
  }
  return {{"classes", std::move(classes)}, {"priors", std::move(priors)}};
}

inline LabelModelParams label_params_from_json(const nlohmann::json& j,
                                               std::vector<std::string>
                                                   lf_names) {
  LabelModelParams out;
  out.lf_names = std::move(lf_names);
  for (auto cls : kClassNames) {
    const std::string name(cls);
    const auto& lfs = j.at("classes").at(name);
    ClassParams block;
    block.class_name = name;
    block.prior = j.at("priors").at(name).get<double>();
    for (const auto& lf : out.lf_names) {
      block.alpha.push_back(lfs.at(lf).at("alpha").get<double>());
      block.beta.push_back(lfs.at(lf).at("beta").get<double>());
    }
    block.unidentifiable = lfs.value("_unidentifiable", false);
    out.per_class.push_back(std::move(block));
  }
  return out;
}

}  // namespace fashmine
