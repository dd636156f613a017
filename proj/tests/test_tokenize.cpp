#include "fashmine/tokenize.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <sstream>

using namespace fashmine;

namespace {

std::string surfaces_joined(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

// Character-class oracle: every token's surface must be consistent with its
// kind, and no non-whitespace character of the input may be lost.
void check_token_charclasses(const std::vector<Token>& tokens) {
  for (const auto& t : tokens) {
    REQUIRE(!t.surface.empty());
    switch (t.kind) {
      case TokenKind::Hashtag:
        REQUIRE(t.surface[0] == '#');
        REQUIRE(t.surface.size() > 1);
        break;
      case TokenKind::Mention:
        REQUIRE(t.surface[0] == '@');
        REQUIRE(t.surface.size() > 1);
        break;
      case TokenKind::Url:
        REQUIRE(t.surface.find("://") != std::string::npos);
        break;
      case TokenKind::Number:
        REQUIRE(is_ascii_digit(static_cast<unsigned char>(t.surface[0])));
        break;
      default:
        break;
    }
    std::size_t pos = 0;
    while (pos < t.surface.size())
      REQUIRE(!is_space_cp(decode_utf8(t.surface, pos)));
  }
}

std::string strip_whitespace(const std::string& s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t start = pos;
    char32_t cp = decode_utf8(s, pos);
    if (!is_space_cp(cp)) out += s.substr(start, pos - start);
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize: empty string") { REQUIRE(tokenize("").empty()); }

TEST_CASE("tokenize: caption with hashtag, emoji and mention") {
  auto toks = tokenize("I love the #baaag \xF0\x9F\x98\x8D @user1");
  REQUIRE(toks.size() == 6);
  CHECK(toks[0].surface == "I");
  CHECK(toks[0].kind == TokenKind::Word);
  CHECK(toks[1].surface == "love");
  CHECK(toks[2].surface == "the");
  CHECK(toks[3].surface == "#baaag");
  CHECK(toks[3].kind == TokenKind::Hashtag);
  CHECK(toks[3].normalized == "#baaag");
  CHECK(toks[4].kind == TokenKind::Emoji);
  CHECK(toks[5].surface == "@user1");
  CHECK(toks[5].kind == TokenKind::Mention);
}

TEST_CASE("tokenize: url and trailing punct") {
  auto toks = tokenize("http://a.b jeans!");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].surface == "http://a.b");
  CHECK(toks[0].kind == TokenKind::Url);
  CHECK(toks[1].surface == "jeans");
  CHECK(toks[1].kind == TokenKind::Word);
  CHECK(toks[2].surface == "!");
  CHECK(toks[2].kind == TokenKind::Punct);
}

TEST_CASE("tokenize: numbers, hyphens, apostrophes") {
  auto toks = tokenize("my 2 t-shirts don't cost 1,000.50 kr");
  REQUIRE(toks.size() == 7);
  CHECK(toks[1].surface == "2");
  CHECK(toks[1].kind == TokenKind::Number);
  CHECK(toks[2].surface == "t-shirts");
  CHECK(toks[2].kind == TokenKind::Word);
  CHECK(toks[3].surface == "don't");
  CHECK(toks[5].surface == "1,000.50");
  CHECK(toks[5].kind == TokenKind::Number);
}

TEST_CASE("tokenize: emoji kinds and classification") {
  // dress, heart, nail polish from distinct blocks
  auto toks = tokenize("\xF0\x9F\x91\x97 \xE2\x9D\xA4 ok");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::Emoji);
  CHECK(toks[1].kind == TokenKind::Emoji);
  CHECK(toks[2].kind == TokenKind::Word);
  CHECK_FALSE(toks[0].normalized.has_value());
}

TEST_CASE("tokenize: lone hash and at are punct") {
  auto toks = tokenize("# @ #x");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::Punct);
  CHECK(toks[1].kind == TokenKind::Punct);
  CHECK(toks[2].kind == TokenKind::Hashtag);
}

TEST_CASE("tokenize: totality and losslessness modulo whitespace") {
  const std::vector<std::string> inputs = {
      "Happy Monday! Here is my outfit \xF0\x9F\x92\x83 of the day "
      "#streetstyle #me #canada #goals #chic #denim",
      "I love the bag! Is it Gucci? \xF0\x9F\x98\x8D \xF0\x9F\x91\x9C | "
      "#goals @username | I #want the #baaag",
      "Wow! The #jeans \xF0\x9F\x91\x96 \xF0\x9F\x91\x8C",
      "weird   spacing\tand\nnewlines",
      "naive-na\xC3\xAFve r\xC3\xA9sum\xC3\xA9 \xC3\xA0 la mode",
      "...!!! ??? ,,,",
  };
  for (const auto& text : inputs) {
    auto toks = tokenize(text);
    check_token_charclasses(toks);
    std::string nonws;
    for (const auto& t : toks) nonws += t.surface;
    REQUIRE(nonws == strip_whitespace(text));
  }
}

TEST_CASE("tokenize: re-tokenizing joined surfaces is a fixed point") {
  std::mt19937_64 rng(20240817);
  const std::string alphabet =
      "ab#@ :.!xyz123\xF0\x9F\x98\x8D-'qq https://t.co/x \xC3\xA9";
  std::vector<std::string> pool;
  {
    std::size_t pos = 0;
    while (pos < alphabet.size()) {
      std::size_t start = pos;
      decode_utf8(alphabet, pos);
      pool.push_back(alphabet.substr(start, pos - start));
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) text += pool[rng() % pool.size()];
    auto first = tokenize(text);
    auto again = tokenize(surfaces_joined(first));
    REQUIRE(first.size() == again.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].surface == again[i].surface);
      CHECK(first[i].kind == again[i].kind);
    }
  }
}
