#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fashmine/errors.hpp"

namespace fashmine {

// --- ranked-retrieval metrics (binary relevance) ---

// Absent when the relevant set is empty (the post is skipped in averages).
inline std::optional<double> ndcg_at_k(const std::vector<std::string>& ranked,
                                       const std::set<std::string>& relevant,
                                       int k) {
  if (k < 1) throw DataError("ndcg_at_k: k must be >= 1");
  if (relevant.empty()) return std::nullopt;
  double dcg = 0.0;
  const std::size_t depth =
      std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
  for (std::size_t i = 0; i < depth; ++i)
    if (relevant.count(ranked[i]))
      dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
  double idcg = 0.0;
  const std::size_t ideal =
      std::min<std::size_t>(static_cast<std::size_t>(k), relevant.size());
  for (std::size_t i = 0; i < ideal; ++i)
    idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
  return dcg / idcg;
}

// Divides by k even when fewer than k items were returned; the shortfall
// counts as misses.
inline double precision_at_k(const std::vector<std::string>& ranked,
                             const std::set<std::string>& relevant, int k) {
  if (k < 1) throw DataError("precision_at_k: k must be >= 1");
  std::size_t hits = 0;
  const std::size_t depth =
      std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
  for (std::size_t i = 0; i < depth; ++i)
    if (relevant.count(ranked[i])) ++hits;
  return static_cast<double>(hits) / static_cast<double>(k);
}

// AP = sum of precision at each hit position / min(|relevant|, list length).
inline std::optional<double> average_precision(
    const std::vector<std::string>& ranked,
    const std::set<std::string>& relevant) {
  if (relevant.empty()) return std::nullopt;
  if (ranked.empty()) return 0.0;
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (relevant.count(ranked[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  const double denom = static_cast<double>(
      std::min<std::size_t>(relevant.size(), ranked.size()));
  return sum / denom;
}

// Mean over posts with non-empty relevant sets.
inline double mean_average_precision(
    const std::vector<std::vector<std::string>>& ranked_lists,
    const std::vector<std::set<std::string>>& relevant_sets) {
  if (ranked_lists.size() != relevant_sets.size())
    throw DataError("mean_average_precision: length mismatch");
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < ranked_lists.size(); ++i) {
    if (auto ap = average_precision(ranked_lists[i], relevant_sets[i])) {
      sum += *ap;
      ++n;
    }
  }
  if (n == 0) throw DataError("mean_average_precision: no evaluable post");
  return sum / static_cast<double>(n);
}

// --- multi-label classification metrics ---

struct ClassificationMetrics {
  double accuracy = 0.0;   // per-label (Hamming) accuracy, averaged over posts
  double precision = 0.0;  // example-based means
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t posts = 0;
};

// Example-based averaging over aligned prediction/gold class sets drawn from
// a universe of `num_labels` classes (needed for Hamming accuracy).
inline ClassificationMetrics classification_metrics(
    const std::vector<std::set<std::string>>& predictions,
    const std::vector<std::set<std::string>>& gold,
    std::size_t num_labels) {
  if (predictions.size() != gold.size())
    throw DataError("classification_metrics: prediction/gold size mismatch");
  if (predictions.empty())
    throw DataError("classification_metrics: no posts");

  ClassificationMetrics m;
  m.posts = predictions.size();
  double acc = 0, prec = 0, rec = 0, f1 = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const auto& p = predictions[i];
    const auto& g = gold[i];
    std::size_t inter = 0;
    for (const auto& c : p) inter += g.count(c);
    const std::size_t uni = p.size() + g.size() - inter;

    const double pi = p.empty() ? (g.empty() ? 1.0 : 0.0)
                                : static_cast<double>(inter) /
                                      static_cast<double>(p.size());
    const double ri = g.empty() ? 1.0
                                : static_cast<double>(inter) /
                                      static_cast<double>(g.size());
    const double fi = (pi + ri) > 0 ? 2 * pi * ri / (pi + ri) : 0.0;
    // Hamming: labels outside the symmetric difference are correct.
    const std::size_t wrong = uni - inter;
    const double ai = static_cast<double>(num_labels - wrong) /
                      static_cast<double>(num_labels);
    prec += pi;
    rec += ri;
    f1 += fi;
    acc += ai;
  }
  const double n = static_cast<double>(m.posts);
  m.accuracy = acc / n;
  m.precision = prec / n;
  m.recall = rec / n;
  m.f1 = f1 / n;
  return m;
}

// Micro-averaged variant (single contingency table over all posts).
inline ClassificationMetrics classification_metrics_micro(
    const std::vector<std::set<std::string>>& predictions,
    const std::vector<std::set<std::string>>& gold,
    std::size_t num_labels) {
  if (predictions.size() != gold.size())
    throw DataError("classification_metrics: prediction/gold size mismatch");
  if (predictions.empty())
    throw DataError("classification_metrics: no posts");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    std::size_t inter = 0;
    for (const auto& c : predictions[i]) inter += gold[i].count(c);
    tp += inter;
    fp += predictions[i].size() - inter;
    fn += gold[i].size() - inter;
  }
  ClassificationMetrics m;
  m.posts = predictions.size();
  m.precision = (tp + fp) > 0 ? static_cast<double>(tp) /
                                    static_cast<double>(tp + fp)
                              : 1.0;
  m.recall = (tp + fn) > 0 ? static_cast<double>(tp) /
                                 static_cast<double>(tp + fn)
                           : 1.0;
  m.f1 = (m.precision + m.recall) > 0
             ? 2 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  const std::size_t total = num_labels * predictions.size();
  m.accuracy = static_cast<double>(total - fp - fn) /
               static_cast<double>(total);
  return m;
}

// --- paired t-test ---

namespace detail {

// Regularized incomplete beta I_x(a,b) by the continued-fraction expansion
// (Lentz's method), with the symmetry transform for convergence.
inline double incbeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - incbeta(b, a, 1.0 - x);

  const double ln_front = a * std::log(x) + b * std::log(1.0 - x) -
                          std::log(a) - std::lgamma(a) - std::lgamma(b) +
                          std::lgamma(a + b);
  const double front = std::exp(ln_front);

  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  double f = 1.0, c = 1.0, d = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const int m = i / 2;
    double numerator;
    if (i == 0)
      numerator = 1.0;
    else if (i % 2 == 0)
      numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
    else
      numerator = -((a + m) * (a + b + m) * x) /
                  ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
    d = 1.0 + numerator * d;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = 1.0 + numerator / c;
    if (std::fabs(c) < tiny) c = tiny;
    const double cd = c * d;
    f *= cd;
    if (std::fabs(1.0 - cd) < eps) break;
  }
  return front * (f - 1.0);
}

// Two-sided p-value for Student's t with df degrees of freedom.
inline double student_t_two_tailed(double t, double df) {
  const double x = df / (df + t * t);
  return incbeta(df / 2.0, 0.5, x);
}

}  // namespace detail

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
};

// Student's paired t on the differences a[i] - b[i]. Zero-variance
// differences degenerate to p = 1 (mean 0) or p = 0 (mean != 0).
inline TTestResult paired_ttest(const std::vector<double>& a,
                                const std::vector<double>& b) {
  if (a.size() != b.size()) throw DataError("paired_ttest: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) throw DataError("paired_ttest: need at least 2 pairs");

  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (a[i] - b[i]) - mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(n - 1);

  TTestResult r;
  if (var == 0.0) {
    if (mean == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = mean > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.t = mean / std::sqrt(var / static_cast<double>(n));
  r.p = detail::student_t_two_tailed(r.t, static_cast<double>(n - 1));
  return r;
}

}  // namespace fashmine
