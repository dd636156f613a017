#pragma once

// Independent reference implementations used as oracles by the unit and
// acceptance suites. Everything here recomputes results from definitions and
// must stay independent of the library code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fashmine/corpus.hpp"
#include "fashmine/ontology.hpp"
#include "fashmine/extract.hpp"

namespace oracle {

// --- edit distance: definitional recursion (memo keeps it tractable) ---

inline std::size_t lev_rec(const std::string& a, const std::string& b,
                           std::size_t i, std::size_t j,
                           std::map<std::pair<std::size_t, std::size_t>,
                                    std::size_t>& memo) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::size_t same = a[i] == b[j] ? 0 : 1;
  const std::size_t sub = lev_rec(a, b, i + 1, j + 1, memo) + same;
  const std::size_t del = lev_rec(a, b, i + 1, j, memo) + 1;
  const std::size_t ins = lev_rec(a, b, i, j + 1, memo) + 1;
  const std::size_t best = std::min({sub, del, ins});
  memo[key] = best;
  return best;
}

inline std::size_t naive_levenshtein(const std::string& a,
                                     const std::string& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  return lev_rec(a, b, 0, 0, memo);
}

// --- ranking metrics straight from their definitions ---

inline double ndcg(const std::vector<std::string>& ranked,
                   const std::set<std::string>& relevant, int k) {
  double dcg = 0.0;
  for (int i = 0; i < k && i < static_cast<int>(ranked.size()); ++i)
    if (relevant.count(ranked[static_cast<std::size_t>(i)]))
      dcg += 1.0 / std::log2(i + 2.0);
  double idcg = 0.0;
  for (int i = 0; i < k && i < static_cast<int>(relevant.size()); ++i)
    idcg += 1.0 / std::log2(i + 2.0);
  return dcg / idcg;
}

inline double precision_at_k(const std::vector<std::string>& ranked,
                             const std::set<std::string>& relevant, int k) {
  int hits = 0;
  for (int i = 0; i < k && i < static_cast<int>(ranked.size()); ++i)
    if (relevant.count(ranked[static_cast<std::size_t>(i)])) ++hits;
  return static_cast<double>(hits) / k;
}

inline double average_precision(const std::vector<std::string>& ranked,
                                const std::set<std::string>& relevant) {
  double sum = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (relevant.count(ranked[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  const std::size_t denom = std::min(relevant.size(), ranked.size());
  return denom == 0 ? 0.0 : sum / static_cast<double>(denom);
}

// --- independently coded binary cross-entropy (hard labels) ---

inline double binary_cross_entropy(const std::vector<double>& logits,
                                   const std::vector<double>& labels) {
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    const double s = 1.0 / (1.0 + std::exp(-logits[i]));
    total += labels[i] > 0.5 ? -std::log(s) : -std::log(1.0 - s);
  }
  return total / static_cast<double>(logits.size());
}

// --- extraction oracle: enumerate every (word, term) pair ---

// Recomputed tf-idf: tf scanned from the post's token list, df scanned over
// every post in the corpus.
inline double recount_tfidf(const std::string& word,
                            const fashmine::ProcessedPost& post,
                            const fashmine::Corpus& corpus) {
  int tf = 0;
  for (const auto& t : post.tokens)
    if (t.kind == fashmine::TokenKind::Word && t.normalized &&
        *t.normalized == word)
      ++tf;
  if (tf == 0) return 0.0;
  int df = 0;
  for (const auto& p : corpus.posts()) {
    for (const auto& t : p.tokens)
      if (t.kind == fashmine::TokenKind::Word && t.normalized &&
          *t.normalized == word) {
        ++df;
        break;
      }
  }
  const double n = static_cast<double>(corpus.size());
  return tf * (std::log((1.0 + n) / (1.0 + df)) + 1.0);
}

template <typename SimFn>
fashmine::RankedExtraction enumerate_extraction(
    const fashmine::ProcessedPost& post, const fashmine::Ontology& ontology,
    const fashmine::DistantSupervisionCache& cache,
    const fashmine::ScoringWeights& weights, const fashmine::Corpus& corpus,
    SimFn&& sim) {
  fashmine::RankedExtraction out;
  for (const auto& [category, terms] : ontology.categories) {
    std::vector<std::pair<std::string, double>> scored;
    for (const auto& term : terms) {
      double acc = 0.0;
      bool any = false;
      for (const auto& tok : post.tokens) {
        if (tok.kind != fashmine::TokenKind::Word || !tok.normalized)
          continue;
        auto s = sim(*tok.normalized, term);
        if (!s || *s < weights.similarity_gate) continue;
        double t = 0.0;
        switch (tok.source) {
          case fashmine::TokenSource::Caption: t = weights.caption; break;
          case fashmine::TokenSource::Comment: t = weights.comment; break;
          case fashmine::TokenSource::Usertag: t = weights.usertag; break;
          case fashmine::TokenSource::HashtagSegmented:
            t = weights.hashtag;
            break;
        }
        acc += t + weights.gamma * cache.probability(term) +
               weights.eta * recount_tfidf(*tok.normalized, post, corpus) +
               weights.alpha * *s;
        any = true;
      }
      if (any) scored.emplace_back(term, acc);
    }
    if (scored.empty()) continue;
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) {
                       if (a.second != b.second) return a.second > b.second;
                       return a.first < b.first;
                     });
    if (scored.size() > static_cast<std::size_t>(weights.top_k))
      scored.resize(static_cast<std::size_t>(weights.top_k));
    const double mx = scored.front().second;
    for (auto& [term, s] : scored) s /= mx;
    out.emplace(category, std::move(scored));
  }
  return out;
}

// --- noise recount: single pass over raw tokens ---

struct NoiseRecount {
  long long total = 0;
  long long emoji = 0;
  long long hashtag = 0;
  long long mention = 0;
  std::map<std::string, long long> oov;
  long long oov_base = 0;
};

inline NoiseRecount recount_noise(
    const fashmine::Corpus& corpus,
    const std::map<std::string, std::set<std::string>>& vocabularies,
    bool strip) {
  NoiseRecount r;
  for (const auto& name : vocabularies) r.oov[name.first] = 0;
  for (const auto& p : corpus.posts()) {
    for (const auto& t : p.raw_tokens) {
      ++r.total;
      using K = fashmine::TokenKind;
      if (t.kind == K::Emoji) ++r.emoji;
      if (t.kind == K::Hashtag) ++r.hashtag;
      if (t.kind == K::Mention) ++r.mention;
      const bool online = t.kind == K::Emoji || t.kind == K::Hashtag ||
                          t.kind == K::Mention || t.kind == K::Url;
      if (strip && online) continue;
      ++r.oov_base;
      std::string form = fashmine::ascii_lower(t.surface);
      if (t.kind == K::Word)
        form = fashmine::Lemmatizer::bundled().lemma(form);
      for (const auto& [name, vocab] : vocabularies)
        if (!vocab.count(form)) ++r.oov[name];
    }
  }
  return r;
}

// --- samplers ---

// Bounded discrete power law P(k) proportional to k^-exponent, k in [1,max].
inline std::vector<long long> sample_powerlaw(std::size_t n, double exponent,
                                              long long max_value,
                                              std::uint64_t seed) {
  std::vector<double> cdf(static_cast<std::size_t>(max_value));
  double acc = 0.0;
  for (long long k = 1; k <= max_value; ++k) {
    acc += std::pow(static_cast<double>(k), -exponent);
    cdf[static_cast<std::size_t>(k - 1)] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, acc);
  std::vector<long long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = u(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
    out[i] = static_cast<long long>(it - cdf.begin()) + 1;
  }
  return out;
}

// Two-coin synthetic labeling-function votes with known parameters.
struct SyntheticVotes {
  std::vector<int> truth;              // +-1 per item
  std::vector<std::vector<int>> votes;  // items x lfs in {+1,-1,0}
};

inline SyntheticVotes sample_two_coin(std::size_t n,
                                      const std::vector<double>& alpha,
                                      double beta, double prior,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SyntheticVotes s;
  s.truth.resize(n);
  s.votes.assign(n, std::vector<int>(alpha.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    s.truth[i] = u(rng) < prior ? 1 : -1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (u(rng) >= beta) continue;  // abstain
      const bool correct = u(rng) < alpha[j];
      s.votes[i][j] = correct ? s.truth[i] : -s.truth[i];
    }
  }
  return s;
}

inline double binary_f1(const std::vector<int>& predicted,
                        const std::vector<int>& truth) {
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == 1 && truth[i] == 1) ++tp;
    if (predicted[i] == 1 && truth[i] == -1) ++fp;
    if (predicted[i] == -1 && truth[i] == 1) ++fn;
  }
  const double p = tp + fp ? static_cast<double>(tp) / (tp + fp) : 0.0;
  const double r = tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0;
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

}  // namespace oracle
