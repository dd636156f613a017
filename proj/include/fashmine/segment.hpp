#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "fashmine/common.hpp"
#include "fashmine/errors.hpp"
#include "fashmine/wordlists.hpp"

namespace fashmine {

// Unigram language model for hashtag segmentation. Unknown words score
// 10^(-7 * length), so a split into unknown fragments is never better than
// keeping the fragment whole.
class UnigramModel {
 public:
  UnigramModel() = default;

  explicit UnigramModel(const std::map<std::string, double>& probabilities) {
    for (const auto& [w, p] : probabilities) logp_[w] = std::log(p);
  }

  static UnigramModel from_counts(
      const std::map<std::string, long long>& counts) {
    double total = 0;
    for (const auto& [w, c] : counts) total += static_cast<double>(c);
    UnigramModel m;
    for (const auto& [w, c] : counts)
      m.logp_[w] = std::log(static_cast<double>(c) / total);
    return m;
  }

  static const UnigramModel& bundled() {
    static const UnigramModel instance = [] {
      std::map<std::string, long long> counts;
      for (const auto& [w, c] : wordlists::kUnigramCounts)
        counts.emplace(std::string(w), c);
      return from_counts(counts);
    }();
    return instance;
  }

  double log_prob(const std::string& word) const {
    if (auto it = logp_.find(word); it != logp_.end()) return it->second;
    return kUnknownExponent * static_cast<double>(word.size()) *
           std::log(10.0);
  }

  bool contains(const std::string& word) const { return logp_.count(word); }

  static constexpr double kUnknownExponent = -7.0;

 private:
  std::map<std::string, double> logp_;
};

namespace detail {

struct Segmentation {
  double score = 0;  // sum of log probabilities
  std::vector<std::string> words;
};

// score desc, then fewest segments, then lexicographic word sequence.
inline bool better(const Segmentation& a, const Segmentation& b) {
  constexpr double eps = 1e-9;
  if (a.score > b.score + eps) return true;
  if (a.score < b.score - eps) return false;
  if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
  return a.words < b.words;
}

}  // namespace detail

// Maximum-product-of-unigrams segmentation by dynamic programming over
// suffixes. Ties break to fewest segments, then lexicographically.
inline std::vector<std::string> segment_hashtag(const std::string& tag,
                                                const UnigramModel& model) {
  if (tag.empty() || tag[0] != '#')
    throw DataError("hashtag must start with '#': " + tag);
  const std::string body = ascii_lower(tag.substr(1));
  if (body.empty()) throw DataError("empty hashtag body");
  if (body.size() > 200) return {body};  // degenerate input, keep whole

  const std::size_t n = body.size();
  std::vector<detail::Segmentation> best(n + 1);
  best[n] = {0.0, {}};
  for (std::size_t i = n; i-- > 0;) {
    detail::Segmentation champion;
    bool have = false;
    for (std::size_t j = i + 1; j <= n; ++j) {
      const std::string piece = body.substr(i, j - i);
      detail::Segmentation cand;
      cand.score = model.log_prob(piece) + best[j].score;
      cand.words.reserve(best[j].words.size() + 1);
      cand.words.push_back(piece);
      cand.words.insert(cand.words.end(), best[j].words.begin(),
                        best[j].words.end());
      if (!have || detail::better(cand, champion)) {
        champion = std::move(cand);
        have = true;
      }
    }
    best[i] = std::move(champion);
  }
  return best[0].words;
}

inline std::vector<std::string> segment_hashtag(const std::string& tag) {
  return segment_hashtag(tag, UnigramModel::bundled());
}

}  // namespace fashmine
