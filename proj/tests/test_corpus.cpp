#include "fashmine/corpus.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <sstream>

using namespace fashmine;

namespace {

Corpus corpus_of(const std::string& jsonl) {
  std::istringstream in(jsonl);
  return parse_posts(in);
}

}  // namespace

TEST_CASE("parse_posts: single record") {
  auto c = corpus_of(
      R"({"id":"a","caption":"red dress","comments":[],"usertags":[]})"
      "\n");
  REQUIRE(c.size() == 1);
  CHECK(c.df("dress") == 1);
  CHECK(c.df("red") == 1);
  CHECK(c.df("absent") == 0);
}

TEST_CASE("parse_posts: empty stream") {
  auto c = corpus_of("");
  CHECK(c.size() == 0);
  CHECK(c.document_frequencies().empty());
}

TEST_CASE("parse_posts: df counts posts, not occurrences") {
  auto c = corpus_of(
      R"({"id":"a","caption":"denim denim jacket","comments":[],"usertags":[]})"
      "\n"
      R"({"id":"b","caption":"love denim","comments":[],"usertags":[]})"
      "\n");
  REQUIRE(c.size() == 2);
  CHECK(c.df("denim") == 2);
  CHECK(c.df("jacket") == 1);
  CHECK(c.at(0).term_count("denim") == 2);
}

TEST_CASE("parse_posts: brute-force df recount agrees") {
  auto c = corpus_of(
      R"({"id":"p1","caption":"my new #denim jeans","comments":[{"user":"u","text":"nice jeans!"}],"usertags":["zalando"]})"
      "\n"
      R"({"id":"p2","caption":"denim on denim","comments":[],"usertags":[]})"
      "\n"
      R"({"id":"p3","caption":"","comments":[{"user":"v","text":"so chic"}],"usertags":[]})"
      "\n");
  std::map<std::string, int> recount;
  for (const auto& p : c.posts()) {
    std::set<std::string> seen;
    for (const auto& t : p.tokens)
      if (t.kind == TokenKind::Word && t.normalized) seen.insert(*t.normalized);
    for (const auto& w : seen) ++recount[w];
  }
  REQUIRE(recount.size() == c.document_frequencies().size());
  for (const auto& [w, n] : recount) REQUIRE(c.df(w) == n);
}

TEST_CASE("parse_posts: malformed line names the line number") {
  std::istringstream in(
      R"({"id":"a","caption":"x","comments":[],"usertags":[]})"
      "\nnot json\n");
  try {
    parse_posts(in);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("parse_posts: duplicate id names the id") {
  std::istringstream in(
      R"({"id":"dup","caption":"x","comments":[],"usertags":[]})"
      "\n"
      R"({"id":"dup","caption":"y","comments":[],"usertags":[]})"
      "\n");
  try {
    parse_posts(in);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("dup") != std::string::npos);
  }
}

TEST_CASE("process_post: sources tagged per field") {
  Post p;
  p.id = "x";
  p.caption = "blue coat";
  p.comments = {{"u1", "lovely bag"}};
  p.usertags = {"gucci"};
  auto pp = process_post(p, PipelineOptions{});
  std::map<std::string, TokenSource> sources;
  for (const auto& t : pp.tokens)
    if (t.normalized) sources[*t.normalized] = t.source;
  CHECK(sources.at("coat") == TokenSource::Caption);
  CHECK(sources.at("bag") == TokenSource::Comment);
  CHECK(sources.at("gucci") == TokenSource::Usertag);
}

TEST_CASE("process_post: hashtags expand into segmented word tokens") {
  Post p;
  p.id = "x";
  p.caption = "#streetstyle";
  auto pp = process_post(p, PipelineOptions{});
  REQUIRE(pp.tokens.size() == 3);
  CHECK(pp.tokens[0].kind == TokenKind::Hashtag);
  CHECK(pp.tokens[1].normalized == "street");
  CHECK(pp.tokens[1].source == TokenSource::HashtagSegmented);
  CHECK(pp.tokens[2].normalized == "style");
  CHECK(pp.term_count("street") == 1);
}

TEST_CASE("process_post: segments_in_df knob") {
  Post p;
  p.id = "x";
  p.caption = "#denim";
  PipelineOptions opt;
  opt.segments_in_df = false;
  auto pp = process_post(p, opt);
  CHECK(pp.term_count("denim") == 0);
  auto c = Corpus({pp});
  CHECK(c.df("denim") == 0);
}

TEST_CASE("corpus: df never exceeds post count") {
  auto c = corpus_of(
      R"({"id":"a","caption":"dress dress","comments":[],"usertags":[]})"
      "\n"
      R"({"id":"b","caption":"dress","comments":[],"usertags":[]})"
      "\n");
  for (const auto& [w, n] : c.document_frequencies()) {
    REQUIRE(n >= 1);
    REQUIRE(n <= static_cast<int>(c.size()));
  }
}
