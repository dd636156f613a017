#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fashmine/common.hpp"
#include "fashmine/token.hpp"
#include "fashmine/unicode.hpp"

namespace fashmine {

namespace detail {

inline bool is_ascii_word_char(char32_t cp) {
  return is_ascii_letter(cp) || is_ascii_digit(cp) || cp == '_';
}

// URL schemes look like "xyz://"; returns byte length of the scheme prefix
// including "://" or 0 if none.
inline std::size_t match_scheme(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  if (i >= s.size() || !is_ascii_letter(static_cast<unsigned char>(s[i])))
    return 0;
  ++i;
  while (i < s.size()) {
    char c = s[i];
    if (is_ascii_letter(static_cast<unsigned char>(c)) ||
        is_ascii_digit(static_cast<unsigned char>(c)) || c == '+' ||
        c == '-' || c == '.') {
      ++i;
      continue;
    }
    break;
  }
  if (s.compare(i, 3, "://") == 0) return i + 3 - pos;
  return 0;
}

}  // namespace detail

// Rule-based social-media tokenizer. Total over any string; no character
// outside whitespace is dropped. Emojis, hashtags, mentions and URLs get
// their own kinds; hashtag/mention/number tokens carry a lowercased
// `normalized` form, word lemmas are filled in by normalize().
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  const std::size_t n = text.size();

  auto peek = [&](std::size_t p) {
    std::size_t q = p;
    return decode_utf8(text, q);
  };

  while (pos < n) {
    std::size_t start = pos;
    char32_t cp = decode_utf8(text, pos);

    if (is_space_cp(cp)) continue;

    // URL: scheme-prefixed run up to the next whitespace.
    if (std::size_t sch = detail::match_scheme(text, start); sch > 0) {
      std::size_t end = start + sch;
      while (end < n) {
        std::size_t q = end;
        if (is_space_cp(decode_utf8(text, q))) break;
        end = q;
      }
      out.push_back({std::string(text.substr(start, end - start)),
                     TokenKind::Url, TokenSource::Caption, std::nullopt});
      pos = end;
      continue;
    }

    // Hashtag: '#' + [A-Za-z0-9_]+
    if (cp == '#' && pos < n && detail::is_ascii_word_char(peek(pos))) {
      std::size_t end = pos;
      while (end < n && detail::is_ascii_word_char(
                            static_cast<unsigned char>(text[end])))
        ++end;
      std::string surface(text.substr(start, end - start));
      out.push_back({surface, TokenKind::Hashtag, TokenSource::Caption,
                     ascii_lower(surface)});
      pos = end;
      continue;
    }

    // Mention: '@' + word chars
    if (cp == '@' && pos < n && detail::is_ascii_word_char(peek(pos))) {
      std::size_t end = pos;
      while (end < n && detail::is_ascii_word_char(
                            static_cast<unsigned char>(text[end])))
        ++end;
      std::string surface(text.substr(start, end - start));
      out.push_back({surface, TokenKind::Mention, TokenSource::Caption,
                     ascii_lower(surface)});
      pos = end;
      continue;
    }

    // Emoji cluster: base pictograph plus modifiers / ZWJ continuations.
    if (is_emoji_cp(cp)) {
      std::size_t end = pos;
      while (end < n) {
        std::size_t q = end;
        char32_t next = decode_utf8(text, q);
        if (is_emoji_modifier(next)) {
          end = q;
          continue;
        }
        if (is_zwj(next)) {
          std::size_t q2 = q;
          if (q2 < n && is_emoji_cp(decode_utf8(text, q2))) {
            end = q2;
            continue;
          }
        }
        break;
      }
      out.push_back({std::string(text.substr(start, end - start)),
                     TokenKind::Emoji, TokenSource::Caption, std::nullopt});
      pos = end;
      continue;
    }

    // Number: digit run, separators allowed between digits.
    if (is_ascii_digit(cp)) {
      std::size_t end = pos;
      while (end < n) {
        char c = text[end];
        if (is_ascii_digit(static_cast<unsigned char>(c))) {
          ++end;
          continue;
        }
        if ((c == '.' || c == ',') && end + 1 < n &&
            is_ascii_digit(static_cast<unsigned char>(text[end + 1]))) {
          end += 2;
          continue;
        }
        break;
      }
      std::string surface(text.substr(start, end - start));
      out.push_back({surface, TokenKind::Number, TokenSource::Caption,
                     surface});
      pos = end;
      continue;
    }

    // Word: letter start; internal apostrophes and hyphens stay attached
    // when followed by another word char ("t-shirt", "don't").
    if (is_letter_cp(cp)) {
      std::size_t end = pos;
      while (end < n) {
        std::size_t q = end;
        char32_t next = decode_utf8(text, q);
        if (is_word_cp(next)) {
          end = q;
          continue;
        }
        if (next == '\'' || next == 0x2019 || next == '-') {
          std::size_t q2 = q;
          if (q2 < n && is_word_cp(decode_utf8(text, q2))) {
            end = q;
            continue;
          }
        }
        break;
      }
      out.push_back({std::string(text.substr(start, end - start)),
                     TokenKind::Word, TokenSource::Caption, std::nullopt});
      pos = end;
      continue;
    }

    // Anything else: single-codepoint punct.
    out.push_back({std::string(text.substr(start, pos - start)),
                   TokenKind::Punct, TokenSource::Caption, std::nullopt});
  }
  return out;
}

inline std::vector<Token> tokenize(std::string_view text, TokenSource source) {
  auto tokens = tokenize(text);
  for (auto& t : tokens) t.source = source;
  return tokens;
}

}  // namespace fashmine
