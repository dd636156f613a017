#pragma once

#include <optional>
#include <string>

namespace fashmine {

enum class TokenKind { Word, Hashtag, Mention, Emoji, Url, Punct, Number };

enum class TokenSource { Caption, Comment, Usertag, HashtagSegmented };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  TokenSource source = TokenSource::Caption;
  // Lowercased lemma. Absent for emoji/url/punct.
  std::optional<std::string> normalized;

  bool operator==(const Token&) const = default;
};

inline const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "word";
    case TokenKind::Hashtag: return "hashtag";
    case TokenKind::Mention: return "mention";
    case TokenKind::Emoji: return "emoji";
    case TokenKind::Url: return "url";
    case TokenKind::Punct: return "punct";
    case TokenKind::Number: return "number";
  }
  return "?";
}

inline const char* to_string(TokenSource s) {
  switch (s) {
    case TokenSource::Caption: return "caption";
    case TokenSource::Comment: return "comment";
    case TokenSource::Usertag: return "usertag";
    case TokenSource::HashtagSegmented: return "hashtag-segmented";
  }
  return "?";
}

}  // namespace fashmine
