#include "fashmine/lemmatize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fashmine/tokenize.hpp"

using namespace fashmine;

TEST_CASE("lemma: lowercase identity for known base forms") {
  const auto& lem = Lemmatizer::bundled();
  CHECK(lem.lemma("jeans") == "jeans");
  CHECK(lem.lemma("dress") == "dress");
  CHECK(lem.lemma("style") == "style");
  CHECK(lem.lemma("gucci") == "gucci");
}

TEST_CASE("lemma: plural and verb suffixes") {
  const auto& lem = Lemmatizer::bundled();
  CHECK(lem.lemma("dresses") == "dress");
  CHECK(lem.lemma("bags") == "bag");
  CHECK(lem.lemma("babies") == "baby");
  CHECK(lem.lemma("shoes") == "shoe");
  CHECK(lem.lemma("scarves") == "scarf");
  CHECK(lem.lemma("boxes") == "box");
  CHECK(lem.lemma("watches") == "watch");
  CHECK(lem.lemma("running") == "run");
  CHECK(lem.lemma("styling") == "style");
  CHECK(lem.lemma("fitted") == "fit");
  CHECK(lem.lemma("dressed") == "dress");
  CHECK(lem.lemma("wore") == "wear");
  CHECK(lem.lemma("feet") == "foot");
}

TEST_CASE("lemma: domain pluralia tantum survive") {
  const auto& lem = Lemmatizer::bundled();
  CHECK(lem.lemma("jeans") == "jeans");
  CHECK(lem.lemma("shorts") == "shorts");
  CHECK(lem.lemma("tights") == "tights");
  CHECK(lem.lemma("trousers") == "trousers");
  CHECK(lem.lemma("leggings") == "leggings");
}

TEST_CASE("lemma: unknown -ing stems stay put without dictionary evidence") {
  const auto& lem = Lemmatizer::bundled();
  CHECK(lem.lemma("string") == "string");
  CHECK(lem.lemma("evening") == "evening");
}

TEST_CASE("lemma: idempotent over bundled vocabulary and derived forms") {
  const auto& lem = Lemmatizer::bundled();
  for (const auto& [w, c] : wordlists::kUnigramCounts) {
    const std::string once = lem.lemma(std::string(w));
    REQUIRE(lem.lemma(once) == once);
  }
  for (const auto& [k, v] : wordlists::kLemmaExceptions) {
    const std::string once = lem.lemma(std::string(k));
    REQUIRE(lem.lemma(once) == once);
  }
}

TEST_CASE("normalize: lowercase + lemma on words") {
  auto out = normalize(tokenize("Jeans"));
  REQUIRE(out.size() == 1);
  CHECK(out[0].surface == "jeans");
  CHECK(out[0].normalized == "jeans");
}

TEST_CASE("normalize: suffix lemma") {
  auto out = normalize(tokenize("dresses"));
  REQUIRE(out.size() == 1);
  CHECK(out[0].normalized == "dress");
}

TEST_CASE("normalize: stopwords removed") {
  CHECK(normalize(tokenize("the")).empty());
  auto out = normalize(tokenize("the red dress"));
  REQUIRE(out.size() == 2);
  CHECK(out[0].normalized == "red");
  CHECK(out[1].normalized == "dress");
}

TEST_CASE("normalize: non-word kinds pass through unchanged") {
  auto toks = tokenize("#Chic \xF0\x9F\x98\x8D http://x.y !");
  auto out = normalize(toks);
  REQUIRE(out.size() == toks.size());
  CHECK(out[0].kind == TokenKind::Hashtag);
  CHECK(out[0].surface == "#Chic");
  CHECK(out[1].kind == TokenKind::Emoji);
  CHECK_FALSE(out[1].normalized.has_value());
  CHECK(out[2].kind == TokenKind::Url);
  CHECK(out[3].kind == TokenKind::Punct);
}

TEST_CASE("normalize: idempotent") {
  auto toks = tokenize(
      "The Dresses were STUNNING \xF0\x9F\x98\x8D #ootd styled by @stylist "
      "running 2 miles");
  auto once = normalize(toks);
  auto twice = normalize(once);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].surface == twice[i].surface);
    CHECK(once[i].kind == twice[i].kind);
    CHECK(once[i].normalized == twice[i].normalized);
  }
}

TEST_CASE("normalize: custom stopword list") {
  std::set<std::string> stops{"dress"};
  auto out = normalize(tokenize("red dress"), stops);
  REQUIRE(out.size() == 1);
  CHECK(out[0].normalized == "red");
}
