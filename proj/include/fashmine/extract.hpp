#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fashmine/corpus.hpp"
#include "fashmine/embeddings.hpp"
#include "fashmine/ontology.hpp"

namespace fashmine {

// Eq-style linear-combination weights. Term scores are per token source; the
// relative weighting of the distant-supervision, TF-IDF and similarity terms
// defaults to equal.
struct ScoringWeights {
  double caption = 2.0;
  double comment = 1.0;
  double usertag = 1.0;
  double hashtag = 3.0;
  double gamma = 1.0;  // distant-supervision scale
  double eta = 1.0;    // tf-idf scale
  double alpha = 1.0;  // similarity scale
  int top_k = 10;
  // A (word, term) pair contributes only at similarity >= gate. The linear
  // combination otherwise lets every unrelated word accumulate score.
  double similarity_gate = 0.45;

  double term_score(TokenSource source) const {
    switch (source) {
      case TokenSource::Caption: return caption;
      case TokenSource::Comment: return comment;
      case TokenSource::Usertag: return usertag;
      case TokenSource::HashtagSegmented: return hashtag;
    }
    return 0.0;
  }
};

// category -> (term, score) descending, max-normalized so the top entry of a
// non-empty list is exactly 1.0.
using RankedExtraction =
    std::map<std::string, std::vector<std::pair<std::string, double>>>;

// tf = raw count of the normalized word in the post's combined text,
// idf = ln((1+N)/(1+df)) + 1.
inline double tfidf(const std::string& word, const ProcessedPost& post,
                    const Corpus& corpus) {
  const int tf = post.term_count(word);
  if (tf == 0) return 0.0;
  const double n = static_cast<double>(corpus.size());
  const double df = static_cast<double>(corpus.df(word));
  return static_cast<double>(tf) * (std::log((1.0 + n) / (1.0 + df)) + 1.0);
}

// Unit-cost edit distance, two-row dynamic program.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline double levenshtein_similarity(const std::string& a,
                                     const std::string& b) {
  const std::size_t m = std::max(a.size(), b.size());
  if (m == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) /
                   static_cast<double>(m);
}

namespace detail {

// Word/term similarity; absent means the pair cannot contribute at all.
using SimilarityFn = std::function<std::optional<double>(
    const std::string& word, const std::string& term)>;

inline RankedExtraction extract_ranked(const ProcessedPost& post,
                                       const Ontology& ontology,
                                       const DistantSupervisionCache& cache,
                                       const ScoringWeights& weights,
                                       const Corpus& corpus,
                                       const SimilarityFn& similarity) {
  RankedExtraction out;
  std::vector<const Token*> words;
  for (const auto& t : post.tokens)
    if (t.kind == TokenKind::Word && t.normalized) words.push_back(&t);
  if (words.empty()) return out;

  for (const auto& [category, terms] : ontology.categories) {
    std::map<std::string, double> scores;
    for (const auto& term : terms) {
      double acc = 0.0;
      bool contributed = false;
      for (const Token* w : words) {
        const std::string& word = *w->normalized;
        auto sim = similarity(word, term);
        if (!sim || *sim < weights.similarity_gate) continue;
        acc += weights.term_score(w->source) +
               weights.gamma * cache.probability(term) +
               weights.eta * tfidf(word, post, corpus) +
               weights.alpha * *sim;
        contributed = true;
      }
      if (contributed) scores[term] = acc;
    }
    if (scores.empty()) continue;

    std::vector<std::pair<std::string, double>> ranked(scores.begin(),
                                                       scores.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    });
    if (static_cast<int>(ranked.size()) > weights.top_k)
      ranked.resize(static_cast<std::size_t>(weights.top_k));
    const double max_score = ranked.front().second;
    if (max_score > 0)
      for (auto& [term, s] : ranked) s /= max_score;
    out.emplace(category, std::move(ranked));
  }
  return out;
}

}  // namespace detail

// SemCluster: semantic matching via embedding cosine.
inline RankedExtraction semcluster_extract(const ProcessedPost& post,
                                           const Ontology& ontology,
                                           const EmbeddingTable& table,
                                           const DistantSupervisionCache& cache,
                                           const ScoringWeights& weights,
                                           const Corpus& corpus) {
  return detail::extract_ranked(
      post, ontology, cache, weights, corpus,
      [&table](const std::string& w, const std::string& t) {
        return table.cosine(w, t);
      });
}

// SynCluster baseline: identical pipeline with normalized Levenshtein
// similarity instead of embeddings, gated at the same threshold.
inline RankedExtraction syncluster_extract(const ProcessedPost& post,
                                           const Ontology& ontology,
                                           const DistantSupervisionCache& cache,
                                           const ScoringWeights& weights,
                                           const Corpus& corpus) {
  return detail::extract_ranked(
      post, ontology, cache, weights, corpus,
      [](const std::string& w, const std::string& t) {
        return std::optional<double>(levenshtein_similarity(w, t));
      });
}

}  // namespace fashmine
