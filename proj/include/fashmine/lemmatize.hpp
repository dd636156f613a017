#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fashmine/common.hpp"
#include "fashmine/token.hpp"
#include "fashmine/wordlists.hpp"

namespace fashmine {

// Exception dictionary + suffix rules, with a word-dictionary check to
// repair -ing/-ed stems (doubling, dropped e). Not a full morphological
// analyzer; idempotent by construction (tested).
class Lemmatizer {
 public:
  Lemmatizer(std::map<std::string, std::string> exceptions,
             std::set<std::string> dictionary)
      : exceptions_(std::move(exceptions)), dict_(std::move(dictionary)) {}

  static const Lemmatizer& bundled() {
    static const Lemmatizer instance = make_bundled();
    return instance;
  }

  // Expects a lowercased word.
  std::string lemma(const std::string& w) const {
    if (auto it = exceptions_.find(w); it != exceptions_.end())
      return it->second;
    const std::size_t n = w.size();
    if (n < 3) return w;

    if (ends_with(w, "sses")) return w.substr(0, n - 2);
    if (ends_with(w, "ies") && n >= 5) {
      std::string y = w.substr(0, n - 3) + "y";
      if (in_dict(y)) return y;
      std::string s = w.substr(0, n - 1);  // "movies" -> "movie"
      if (in_dict(s)) return s;
      return y;
    }
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is"))
      return w;
    if (ends_with(w, "es") && n >= 4) {
      char before = w[n - 3];
      bool soft = before == 'x' || before == 'z' || before == 'o' ||
                  before == 's' ||
                  (n >= 5 && (w.compare(n - 4, 2, "ch") == 0 ||
                              w.compare(n - 4, 2, "sh") == 0));
      if (soft) {
        std::string es = w.substr(0, n - 2);
        if (in_dict(es)) return es;
        return w.substr(0, n - 1);
      }
    }
    if (w.back() == 's' && n >= 4) return w.substr(0, n - 1);

    if (ends_with(w, "ing") && n >= 6) {
      if (auto r = repair(w.substr(0, n - 3))) return *r;
      return w;
    }
    if (ends_with(w, "ed") && n >= 5) {
      if (auto r = repair(w.substr(0, n - 2))) return *r;
      return w;
    }
    return w;
  }

 private:
  static Lemmatizer make_bundled() {
    std::map<std::string, std::string> ex;
    for (const auto& [k, v] : wordlists::kLemmaExceptions)
      ex.emplace(std::string(k), std::string(v));
    std::set<std::string> dict;
    for (const auto& [w, c] : wordlists::kUnigramCounts)
      dict.insert(std::string(w));
    return Lemmatizer(std::move(ex), std::move(dict));
  }

  bool in_dict(const std::string& w) const { return dict_.count(w) > 0; }

  // Stem repair: accept the stem only with dictionary evidence, trying
  // the bare stem, the undoubled stem ("runn" -> "run") and stem+e
  // ("styl" -> "style"). No evidence -> no lemmatization.
  std::optional<std::string> repair(std::string stem) const {
    if (in_dict(stem)) return stem;
    const std::size_t m = stem.size();
    if (m >= 3 && stem[m - 1] == stem[m - 2]) {
      std::string undoubled = stem.substr(0, m - 1);
      if (in_dict(undoubled)) return undoubled;
    }
    std::string with_e = stem + "e";
    if (in_dict(with_e)) return with_e;
    return std::nullopt;
  }

  std::map<std::string, std::string> exceptions_;
  std::set<std::string> dict_;
};

inline const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> s = [] {
    std::set<std::string> out;
    for (auto w : wordlists::kStopwords) out.insert(std::string(w));
    return out;
  }();
  return s;
}

// Lowercase + lemmatize word tokens, drop stopwords, pass everything else
// through. Idempotent.
inline std::vector<Token> normalize(const std::vector<Token>& tokens,
                                    const std::set<std::string>& stopwords,
                                    const Lemmatizer& lemmatizer) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word) {
      out.push_back(t);
      continue;
    }
    std::string lower = ascii_lower(t.surface);
    if (stopwords.count(lower)) continue;
    std::string lemma = lemmatizer.lemma(lower);
    if (stopwords.count(lemma)) continue;
    Token nt = t;
    nt.surface = std::move(lower);
    nt.normalized = std::move(lemma);
    out.push_back(std::move(nt));
  }
  return out;
}

inline std::vector<Token> normalize(const std::vector<Token>& tokens,
                                    const std::set<std::string>& stopwords) {
  return normalize(tokens, stopwords, Lemmatizer::bundled());
}

inline std::vector<Token> normalize(const std::vector<Token>& tokens) {
  return normalize(tokens, default_stopwords(), Lemmatizer::bundled());
}

}  // namespace fashmine
