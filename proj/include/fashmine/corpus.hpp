#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/errors.hpp"
#include "fashmine/lemmatize.hpp"
#include "fashmine/segment.hpp"
#include "fashmine/tokenize.hpp"

namespace fashmine {

struct Comment {
  std::string user;
  std::string text;
};

struct Post {
  std::string id;
  std::string caption;
  std::vector<Comment> comments;
  std::vector<std::string> usertags;
};

struct PipelineOptions {
  std::set<std::string> stopwords = default_stopwords();
  const Lemmatizer* lemmatizer = &Lemmatizer::bundled();
  const UnigramModel* unigrams = &UnigramModel::bundled();
  bool segment_hashtags = true;
  // Segmented hashtag words also feed document frequencies (not just
  // extraction matching); sensitivity knob.
  bool segments_in_df = true;
};

// A post plus its processed token stream. raw_tokens is the plain tokenize()
// output (noise statistics are measured on it); tokens is the normalized
// stream including hashtag-segmented words (extraction and tf run on it).
struct ProcessedPost {
  Post post;
  std::vector<Token> raw_tokens;
  std::vector<Token> tokens;
  std::unordered_map<std::string, int> term_counts;  // normalized word -> tf

  int term_count(const std::string& word) const {
    auto it = term_counts.find(word);
    return it == term_counts.end() ? 0 : it->second;
  }
};

namespace detail {

inline std::vector<Token> raw_token_stream(const Post& post) {
  std::vector<Token> tokens = tokenize(post.caption, TokenSource::Caption);
  for (const auto& c : post.comments) {
    auto ct = tokenize(c.text, TokenSource::Comment);
    tokens.insert(tokens.end(), ct.begin(), ct.end());
  }
  for (const auto& tag : post.usertags) {
    auto ut = tokenize(tag, TokenSource::Usertag);
    tokens.insert(tokens.end(), ut.begin(), ut.end());
  }
  return tokens;
}

}  // namespace detail

inline ProcessedPost process_post(Post post, const PipelineOptions& opt) {
  ProcessedPost out;
  out.raw_tokens = detail::raw_token_stream(post);
  out.post = std::move(post);

  std::vector<Token> expanded;
  expanded.reserve(out.raw_tokens.size());
  for (const auto& t : out.raw_tokens) {
    expanded.push_back(t);
    if (t.kind == TokenKind::Hashtag && opt.segment_hashtags) {
      for (auto& piece : segment_hashtag(t.surface, *opt.unigrams)) {
        Token st;
        st.surface = std::move(piece);
        st.kind = TokenKind::Word;
        st.source = TokenSource::HashtagSegmented;
        expanded.push_back(std::move(st));
      }
    }
  }
  out.tokens = normalize(expanded, opt.stopwords, *opt.lemmatizer);
  for (const auto& t : out.tokens) {
    if (t.kind != TokenKind::Word || !t.normalized) continue;
    if (t.source == TokenSource::HashtagSegmented && !opt.segments_in_df)
      continue;
    ++out.term_counts[*t.normalized];
  }
  return out;
}

// Immutable post collection with document frequencies over normalized word
// tokens. Safe for concurrent reads after construction.
class Corpus {
 public:
  Corpus() = default;

  explicit Corpus(std::vector<ProcessedPost> posts)
      : posts_(std::move(posts)) {
    for (std::size_t i = 0; i < posts_.size(); ++i) {
      const auto& p = posts_[i];
      if (p.post.id.empty()) throw DataError("post with empty id");
      if (!index_.emplace(p.post.id, i).second)
        throw DataError("duplicate post id: " + p.post.id);
      for (const auto& [word, tf] : p.term_counts) ++df_[word];
    }
  }

  std::size_t size() const { return posts_.size(); }
  bool empty() const { return posts_.empty(); }
  const std::vector<ProcessedPost>& posts() const { return posts_; }

  const ProcessedPost& at(std::size_t i) const { return posts_.at(i); }

  const ProcessedPost* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &posts_[it->second];
  }

  int df(const std::string& word) const {
    auto it = df_.find(word);
    return it == df_.end() ? 0 : it->second;
  }

  const std::unordered_map<std::string, int>& document_frequencies() const {
    return df_;
  }

 private:
  std::vector<ProcessedPost> posts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, int> df_;
};

// JSONL ingest, one post per line:
//   {"id": str, "caption": str, "comments": [{"user": str, "text": str}],
//    "usertags": [str]}
inline Corpus parse_posts(std::istream& in,
                          const PipelineOptions& opt = PipelineOptions{}) {
  std::vector<ProcessedPost> posts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("malformed record at line " + std::to_string(lineno) +
                      ": " + e.what());
    }
    try {
      Post p;
      p.id = j.at("id").get<std::string>();
      p.caption = j.value("caption", std::string{});
      if (j.contains("comments")) {
        for (const auto& c : j.at("comments")) {
          Comment cm;
          cm.user = c.value("user", std::string{});
          cm.text = c.at("text").get<std::string>();
          p.comments.push_back(std::move(cm));
        }
      }
      if (j.contains("usertags")) {
        for (const auto& t : j.at("usertags"))
          p.usertags.push_back(t.get<std::string>());
      }
      posts.push_back(process_post(std::move(p), opt));
    } catch (const nlohmann::json::exception& e) {
      throw DataError("malformed record at line " + std::to_string(lineno) +
                      ": " + e.what());
    }
  }
  return Corpus(std::move(posts));
}

inline Corpus load_corpus(const std::string& path,
                          const PipelineOptions& opt = PipelineOptions{}) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus: " + path);
  return parse_posts(in, opt);
}

}  // namespace fashmine
