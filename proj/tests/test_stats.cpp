#include "fashmine/stats.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <sstream>

#include "support/oracles.hpp"

using namespace fashmine;

namespace {

Corpus corpus_of(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return parse_posts(in);
}

// 100 posts mixing words, emojis, hashtags, mentions and URLs.
Corpus synthetic_corpus() {
  std::ostringstream out;
  std::mt19937_64 rng(4242);
  const std::vector<std::string> words = {"dress", "jeans",  "zzxqy", "love",
                                          "chic",  "flurble", "coat", "wow"};
  const std::vector<std::string> online = {"#ootd", "@fan",
                                           "\xF0\x9F\x98\x8D",
                                           "http://a.b/c"};
  for (int i = 0; i < 100; ++i) {
    std::string caption;
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) {
      if (!caption.empty()) caption += ' ';
      caption += (rng() % 3 == 0) ? online[rng() % online.size()]
                                  : words[rng() % words.size()];
    }
    const int n_comments = static_cast<int>(rng() % 4);
    out << R"({"id":"p)" << i << R"(","caption":")" << caption
        << R"(","comments":[)";
    for (int c = 0; c < n_comments; ++c) {
      if (c) out << ',';
      out << R"({"user":"u","text":"so )" << words[rng() % words.size()]
          << R"("})";
    }
    out << R"(],"usertags":[]})" << "\n";
  }
  return corpus_of(out.str());
}

std::map<std::string, std::set<std::string>> english_vocab() {
  return {{"english",
           {"dress", "jeans", "love", "chic", "coat", "wow", "so", "my",
            "new", "the", "be", "nice"}}};
}

}  // namespace

TEST_CASE("lexical_noise: simple fractions") {
  // 10 tokens, 2 emojis
  auto c = corpus_of(
      R"({"id":"a","caption":"one two three four five six seven eight \xF0\x9F\x98\x8D \xF0\x9F\x91\x97","comments":[],"usertags":[]})"
      "\n");
  auto rep = lexical_noise(c, {});
  CHECK(rep.total_tokens == 10);
  CHECK(rep.emoji.count == 2);
  CHECK(rep.emoji.fraction == Catch::Approx(0.2));
  CHECK(rep.emoji.avg_per_post == Catch::Approx(2.0));
}

TEST_CASE("lexical_noise: empty corpus rejected") {
  Corpus empty;
  CHECK_THROWS_AS(lexical_noise(empty, {}), DataError);
}

TEST_CASE("lexical_noise: equals the brute-force recount exactly") {
  auto corpus = synthetic_corpus();
  auto vocab = english_vocab();
  for (bool strip : {false, true}) {
    auto rep = lexical_noise(corpus, vocab, strip);
    auto rec = oracle::recount_noise(corpus, vocab, strip);
    REQUIRE(rep.total_tokens == rec.total);
    REQUIRE(rep.emoji.count == rec.emoji);
    REQUIRE(rep.hashtag.count == rec.hashtag);
    REQUIRE(rep.mention.count == rec.mention);
    for (const auto& [name, cat] : rep.oov) {
      REQUIRE(cat.count == rec.oov.at(name));
      REQUIRE(cat.token_base == rec.oov_base);
      REQUIRE(cat.fraction ==
              static_cast<double>(cat.count) /
                  static_cast<double>(rec.oov_base));
    }
  }
}

TEST_CASE("lexical_noise: stripping conserves token counts") {
  auto corpus = synthetic_corpus();
  auto vocab = english_vocab();
  auto plain = lexical_noise(corpus, vocab, false);
  auto stripped = lexical_noise(corpus, vocab, true);
  for (const auto& [name, cat] : stripped.oov) {
    const double before = plain.oov.at(name).fraction;
    const double stripped_fraction =
        static_cast<double>(plain.total_tokens - cat.token_base) /
        static_cast<double>(plain.total_tokens);
    REQUIRE(cat.fraction <= before + stripped_fraction + 1e-12);
    REQUIRE(cat.fraction <= 1.0);
  }
}

TEST_CASE("text_distribution: degenerate histogram has no slope") {
  auto c = corpus_of(
      R"({"id":"a","caption":"x","comments":[{"user":"u","text":"a"}],"usertags":[]})"
      "\n"
      R"({"id":"b","caption":"y","comments":[{"user":"u","text":"b"}],"usertags":[]})"
      "\n");
  auto rep = text_distribution(c);
  CHECK_FALSE(rep.slope.has_value());
  CHECK(rep.mean_comments_per_post == Catch::Approx(1.0));
}

TEST_CASE("text_distribution: caption means") {
  auto c = corpus_of(
      R"({"id":"a","caption":"one two three four","comments":[],"usertags":[]})"
      "\n"
      R"({"id":"b","caption":"one two three four five six","comments":[],"usertags":[]})"
      "\n");
  auto rep = text_distribution(c);
  CHECK(rep.mean_caption_tokens == Catch::Approx(5.0));
}

TEST_CASE("fit_powerlaw: recovers the exponent of bounded Zipf samples") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    auto samples = oracle::sample_powerlaw(10000, 2.0, 50, seed);
    std::map<long long, long long> hist;
    for (long long v : samples) ++hist[v];
    auto fit = fit_powerlaw(hist);
    REQUIRE(fit.has_value());
    CHECK(fit->first > -2.15);
    CHECK(fit->first < -1.85);
    CHECK(fit->second > 0.8);  // log-log fit should be tight
  }
}

TEST_CASE("fit_powerlaw: needs 3 distinct bins") {
  CHECK_FALSE(fit_powerlaw({{1, 10}}).has_value());
  CHECK_FALSE(fit_powerlaw({{1, 10}, {2, 5}}).has_value());
  CHECK(fit_powerlaw({{1, 10}, {2, 5}, {4, 2}}).has_value());
}

TEST_CASE("language_distribution: reads the external tag file") {
  auto c = corpus_of(
      R"({"id":"a","caption":"x","comments":[{"user":"u","text":"hello"},{"user":"v","text":"hola"}],"usertags":[]})"
      "\n");
  const std::string path = "/tmp/fashmine_langtags_test.tsv";
  {
    std::ofstream out(path);
    out << "a\t0\ten\na\t1\tes\n";
  }
  auto langs = language_distribution(c, path);
  CHECK(langs.at("en") == Catch::Approx(0.5));
  CHECK(langs.at("es") == Catch::Approx(0.5));
}

TEST_CASE("language_distribution: unknown post id rejected") {
  auto c = corpus_of(
      R"({"id":"a","caption":"x","comments":[{"user":"u","text":"hi"}],"usertags":[]})"
      "\n");
  const std::string path = "/tmp/fashmine_langtags_bad.tsv";
  {
    std::ofstream out(path);
    out << "zzz\t0\ten\n";
  }
  CHECK_THROWS_AS(language_distribution(c, path), DataError);
}
