#include "fashmine/segment.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace fashmine;

namespace {

// Exhaustive enumeration over all 2^(n-1) segmentations.
struct Enumerated {
  double best_score = -1e300;
  std::vector<std::string> best;
};

void enumerate(const std::string& body, std::size_t from,
               std::vector<std::string>& parts, double score,
               const UnigramModel& model, Enumerated& out) {
  if (from == body.size()) {
    if (score > out.best_score + 1e-9) {
      out.best_score = score;
      out.best = parts;
    } else if (score > out.best_score - 1e-9) {
      if (parts.size() < out.best.size() ||
          (parts.size() == out.best.size() && parts < out.best))
        out.best = parts;
      out.best_score = std::max(out.best_score, score);
    }
    return;
  }
  for (std::size_t to = from + 1; to <= body.size(); ++to) {
    const std::string piece = body.substr(from, to - from);
    parts.push_back(piece);
    enumerate(body, to, parts, score + model.log_prob(piece), model, out);
    parts.pop_back();
  }
}

Enumerated enumerate_best(const std::string& tag, const UnigramModel& model) {
  Enumerated out;
  std::vector<std::string> parts;
  enumerate(tag.substr(1), 0, parts, 0.0, model, out);
  return out;
}

double score_of(const std::vector<std::string>& words,
                const UnigramModel& model) {
  double s = 0;
  for (const auto& w : words) s += model.log_prob(w);
  return s;
}

}  // namespace

TEST_CASE("segment: single dictionary word") {
  CHECK(segment_hashtag("#me") == std::vector<std::string>{"me"});
  CHECK(segment_hashtag("#denim") == std::vector<std::string>{"denim"});
}

TEST_CASE("segment: compound hashtags split") {
  CHECK(segment_hashtag("#streetstyle") ==
        std::vector<std::string>({"street", "style"}));
  auto ootd = segment_hashtag("#outfitoftheday");
  CHECK(ootd == std::vector<std::string>({"outfit", "of", "the", "day"}));
}

TEST_CASE("segment: unknown token falls back to whole body") {
  CHECK(segment_hashtag("#xqz") == std::vector<std::string>{"xqz"});
}

TEST_CASE("segment: uppercase tags are lowered") {
  CHECK(segment_hashtag("#StreetStyle") ==
        std::vector<std::string>({"street", "style"}));
}

TEST_CASE("segment: errors") {
  CHECK_THROWS_AS(segment_hashtag("#"), DataError);
  CHECK_THROWS_AS(segment_hashtag("nohash"), DataError);
}

TEST_CASE("segment: concatenation restores the tag body") {
  for (const std::string tag :
       {"#streetstyle", "#outfitoftheday", "#xqzabc", "#fashionblogger"}) {
    auto parts = segment_hashtag(tag);
    std::string joined;
    for (const auto& p : parts) joined += p;
    REQUIRE(joined == ascii_lower(tag.substr(1)));
  }
}

TEST_CASE("segment: DP equals exhaustive enumeration on random hashtags") {
  // 50-word dictionary with assorted lengths and probabilities.
  std::map<std::string, double> probs;
  const std::vector<std::string> dict = {
      "a",    "an",   "at",   "be",  "it",    "on",    "to",   "we",
      "art",  "bag",  "cat",  "day", "eye",   "fit",   "gem",  "hat",
      "ink",  "joy",  "key",  "lab", "map",   "net",   "oak",  "pod",
      "quiz", "ray",  "sun",  "tan", "urn",   "vat",   "wig",  "xi",
      "yarn", "zip",  "chic", "coat", "knit",  "lace",  "maxi", "mini",
      "silk", "wool", "blue", "gold", "pink",  "street", "style", "denim",
      "dress", "wear"};
  double mass = 0;
  for (std::size_t i = 0; i < dict.size(); ++i) mass += 1.0 / (i + 1.0);
  for (std::size_t i = 0; i < dict.size(); ++i)
    probs[dict[i]] = (1.0 / (i + 1.0)) / mass;
  UnigramModel model(probs);

  std::mt19937_64 rng(99);
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string body;
    if (trial % 3 == 0) {
      // glue dictionary words together
      const int n_words = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < n_words && body.size() < 12; ++i)
        body += dict[rng() % dict.size()];
      if (body.size() > 12) body.resize(12);
    } else {
      const int len = 1 + static_cast<int>(rng() % 12);
      for (int i = 0; i < len; ++i) body += letters[rng() % 26];
    }
    const std::string tag = "#" + body;
    auto dp = segment_hashtag(tag, model);
    auto brute = enumerate_best(tag, model);
    REQUIRE_THAT(score_of(dp, model),
                 Catch::Matchers::WithinAbs(brute.best_score, 1e-9));
    REQUIRE(dp == brute.best);
  }
}
