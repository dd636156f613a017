#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/corpus.hpp"
#include "fashmine/lemmatize.hpp"

namespace fashmine {

struct NoiseCategory {
  long long count = 0;
  double fraction = 0.0;      // of the category's token base
  double avg_per_post = 0.0;
};

struct OovCategory : NoiseCategory {
  long long token_base = 0;  // denominator (shrinks under stripping)
};

// Lexical-noise measurements over the raw tokenize() output.
struct NoiseReport {
  long long total_tokens = 0;
  long long posts = 0;
  NoiseCategory emoji;
  NoiseCategory hashtag;
  NoiseCategory mention;
  std::map<std::string, OovCategory> oov;  // per named vocabulary
};

struct DistributionReport {
  std::map<long long, long long> comment_histogram;  // count -> #posts
  std::optional<double> slope;
  std::optional<double> r_squared;
  double mean_caption_tokens = 0.0;
  double mean_comment_tokens = 0.0;
  double mean_comments_per_post = 0.0;
};

namespace detail {

inline bool is_online_token(const Token& t) {
  return t.kind == TokenKind::Emoji || t.kind == TokenKind::Hashtag ||
         t.kind == TokenKind::Mention || t.kind == TokenKind::Url;
}

// Case-insensitive, post-normalization form used for the OOV check.
inline std::string oov_check_form(const Token& t, const Lemmatizer& lem) {
  std::string lower = ascii_lower(t.surface);
  if (t.kind == TokenKind::Word) return lem.lemma(lower);
  return lower;
}

}  // namespace detail

// Token-level noise fractions plus OOV rates against each named vocabulary.
// With strip_online_tokens set, hashtags/mentions/emojis/URLs are removed
// before the OOV computation (the emoji/hashtag/mention statistics are
// always measured on the full stream).
inline NoiseReport lexical_noise(
    const Corpus& corpus,
    const std::map<std::string, std::set<std::string>>& vocabularies,
    bool strip_online_tokens = false,
    const Lemmatizer& lemmatizer = Lemmatizer::bundled()) {
  if (corpus.empty()) throw DataError("empty corpus");

  NoiseReport rep;
  rep.posts = static_cast<long long>(corpus.size());
  for (const auto& name : vocabularies) rep.oov[name.first] = {};

  long long oov_base = 0;
  for (const auto& p : corpus.posts()) {
    for (const auto& t : p.raw_tokens) {
      ++rep.total_tokens;
      switch (t.kind) {
        case TokenKind::Emoji: ++rep.emoji.count; break;
        case TokenKind::Hashtag: ++rep.hashtag.count; break;
        case TokenKind::Mention: ++rep.mention.count; break;
        default: break;
      }
      if (strip_online_tokens && detail::is_online_token(t)) continue;
      ++oov_base;
      const std::string form = detail::oov_check_form(t, lemmatizer);
      for (auto& [name, cat] : rep.oov)
        if (!vocabularies.at(name).count(form)) ++cat.count;
    }
  }

  const double n_posts = static_cast<double>(rep.posts);
  const double n_tokens = static_cast<double>(rep.total_tokens);
  auto finish = [&](NoiseCategory& c, double base) {
    c.fraction = base > 0 ? static_cast<double>(c.count) / base : 0.0;
    c.avg_per_post = static_cast<double>(c.count) / n_posts;
  };
  finish(rep.emoji, n_tokens);
  finish(rep.hashtag, n_tokens);
  finish(rep.mention, n_tokens);
  for (auto& [name, cat] : rep.oov) {
    cat.token_base = oov_base;
    finish(cat, static_cast<double>(oov_base));
  }
  return rep;
}

// Least-squares fit of log2(frequency) against log2(count) over non-zero
// histogram bins. Absent with fewer than 3 distinct usable bins.
inline std::optional<std::pair<double, double>> fit_powerlaw(
    const std::map<long long, long long>& histogram) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [count, freq] : histogram)
    if (count > 0 && freq > 0)
      pts.emplace_back(std::log2(static_cast<double>(count)),
                       std::log2(static_cast<double>(freq)));
  if (pts.size() < 3) return std::nullopt;

  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  const double slope = (n * sxy - sx * sy) / denom;
  const double ss_tot = syy - sy * sy / n;
  double r2 = 1.0;
  if (ss_tot > 0) {
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0;
    for (const auto& [x, y] : pts) {
      const double e = y - (slope * x + intercept);
      ss_res += e * e;
    }
    r2 = 1.0 - ss_res / ss_tot;
  }
  return std::make_pair(slope, r2);
}

inline DistributionReport text_distribution(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("empty corpus");
  DistributionReport rep;
  long long caption_tokens = 0, comment_tokens = 0, comments = 0;
  for (const auto& p : corpus.posts()) {
    const long long c = static_cast<long long>(p.post.comments.size());
    ++rep.comment_histogram[c];
    comments += c;
    for (const auto& t : p.raw_tokens) {
      if (t.source == TokenSource::Caption) ++caption_tokens;
      if (t.source == TokenSource::Comment) ++comment_tokens;
    }
  }
  const double n = static_cast<double>(corpus.size());
  rep.mean_caption_tokens = static_cast<double>(caption_tokens) / n;
  rep.mean_comment_tokens =
      comments > 0 ? static_cast<double>(comment_tokens) /
                         static_cast<double>(comments)
                   : 0.0;
  rep.mean_comments_per_post = static_cast<double>(comments) / n;
  if (auto fit = fit_powerlaw(rep.comment_histogram)) {
    rep.slope = fit->first;
    rep.r_squared = fit->second;
  }
  return rep;
}

// Hook for the language-distribution measurement: tags come from an external
// per-comment tag file (TSV post_id<TAB>comment_index<TAB>language); no
// classifier is bundled. Returns language -> fraction of tagged comments.
inline std::map<std::string, double> language_distribution(
    const Corpus& corpus, const std::string& tag_path) {
  std::ifstream in(tag_path);
  if (!in) throw DataError("cannot open language tag file: " + tag_path);
  std::map<std::string, long long> counts;
  long long total = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw DataError(tag_path + ": line " + std::to_string(lineno) +
                      " is not post_id<TAB>index<TAB>lang");
    const std::string post_id = line.substr(0, t1);
    const ProcessedPost* p = corpus.find(post_id);
    if (!p)
      throw DataError(tag_path + ": unknown post id '" + post_id +
                      "' at line " + std::to_string(lineno));
    std::size_t idx;
    try {
      idx = static_cast<std::size_t>(
          std::stoull(line.substr(t1 + 1, t2 - t1 - 1)));
    } catch (const std::exception&) {
      throw DataError(tag_path + ": bad comment index at line " +
                      std::to_string(lineno));
    }
    if (idx >= p->post.comments.size())
      throw DataError(tag_path + ": comment index out of range at line " +
                      std::to_string(lineno));
    ++counts[line.substr(t2 + 1)];
    ++total;
  }
  std::map<std::string, double> fractions;
  for (const auto& [lang, c] : counts)
    fractions[lang] = static_cast<double>(c) / static_cast<double>(total);
  return fractions;
}

inline nlohmann::json to_json(const NoiseCategory& c) {
  return {{"count", c.count},
          {"fraction", c.fraction},
          {"avg_per_post", c.avg_per_post}};
}

inline nlohmann::json to_json(const NoiseReport& r) {
  nlohmann::json oov = nlohmann::json::object();
  for (const auto& [name, cat] : r.oov) {
    auto j = to_json(static_cast<const NoiseCategory&>(cat));
    j["token_base"] = cat.token_base;
    oov[name] = std::move(j);
  }
  return {{"total_tokens", r.total_tokens},
          {"posts", r.posts},
          {"emoji", to_json(r.emoji)},
          {"hashtag", to_json(r.hashtag)},
          {"mention", to_json(r.mention)},
          {"oov", std::move(oov)}};
}

inline nlohmann::json to_json(const DistributionReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [count, freq] : r.comment_histogram)
    hist[std::to_string(count)] = freq;
  nlohmann::json j{{"comment_histogram", std::move(hist)},
                   {"mean_caption_tokens", r.mean_caption_tokens},
                   {"mean_comment_tokens", r.mean_comment_tokens},
                   {"mean_comments_per_post", r.mean_comments_per_post}};
  j["slope"] = r.slope ? nlohmann::json(*r.slope) : nlohmann::json(nullptr);
  j["r_squared"] =
      r.r_squared ? nlohmann::json(*r.r_squared) : nlohmann::json(nullptr);
  return j;
}

}  // namespace fashmine
