#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace fashmine {

// Minimal UTF-8 decoding. Input is expected to be valid UTF-8 (JSONL ingest
// validates); a bad byte decodes as itself and advances one byte so the
// tokenizer stays total.
inline char32_t decode_utf8(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  auto cont = [&](std::size_t i) {
    return pos + i < s.size() &&
           (static_cast<unsigned char>(s[pos + i]) & 0xc0) == 0x80;
  };
  auto at = [&](std::size_t i) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3f);
  };
  if ((b0 & 0xe0) == 0xc0 && cont(1)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x1f) << 6) | at(1);
    pos += 2;
    return cp;
  }
  if ((b0 & 0xf0) == 0xe0 && cont(1) && cont(2)) {
    char32_t cp =
        (static_cast<char32_t>(b0 & 0x0f) << 12) | (at(1) << 6) | at(2);
    pos += 3;
    return cp;
  }
  if ((b0 & 0xf8) == 0xf0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (at(1) << 12) |
                  (at(2) << 6) | at(3);
    pos += 4;
    return cp;
  }
  pos += 1;
  return b0;
}

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

// Bundled emoji block table. Covers the emoticon, pictograph, transport,
// supplemental-symbol and flag blocks plus the legacy symbol/dingbat ranges.
inline constexpr std::array<CodepointRange, 5> kEmojiRanges{{
    {0x1F1E6, 0x1F1FF},  // regional indicators (flags)
    {0x1F300, 0x1FAFF},  // pictographs .. symbols extended-A
    {0x2600, 0x27BF},    // misc symbols, dingbats
    {0x2B00, 0x2BFF},    // stars, misc arrows
    {0x1F000, 0x1F0FF},  // mahjong / cards
}};

inline bool is_emoji_cp(char32_t cp) {
  for (const auto& r : kEmojiRanges)
    if (cp >= r.lo && cp <= r.hi) return true;
  return false;
}

inline bool is_emoji_modifier(char32_t cp) {
  return (cp >= 0x1F3FB && cp <= 0x1F3FF)  // skin tones
         || cp == 0xFE0E || cp == 0xFE0F;  // variation selectors
}

inline bool is_zwj(char32_t cp) { return cp == 0x200D; }

inline bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_ascii_letter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

// Letters for word tokens: ASCII plus the big alphabetic blocks the corpus
// actually contains (Latin supplements, Greek, Cyrillic, CJK, kana, Hangul,
// Arabic, Hebrew, Thai). Everything else non-emoji becomes punct.
inline bool is_letter_cp(char32_t cp) {
  if (is_ascii_letter(cp)) return true;
  if (cp < 0x80) return false;
  static constexpr CodepointRange blocks[] = {
      {0x00C0, 0x00FF}, {0x0100, 0x024F}, {0x0370, 0x03FF}, {0x0400, 0x04FF},
      {0x0530, 0x058F}, {0x0590, 0x05FF}, {0x0600, 0x06FF}, {0x0E00, 0x0E7F},
      {0x3040, 0x30FF}, {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7AF},
  };
  if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiply/divide signs
  for (const auto& b : blocks)
    if (cp >= b.lo && cp <= b.hi) return true;
  return false;
}

inline bool is_word_cp(char32_t cp) {
  return is_letter_cp(cp) || is_ascii_digit(cp);
}

inline bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0x00A0 || cp == 0x2028 || cp == 0x2029;
}

}  // namespace fashmine
