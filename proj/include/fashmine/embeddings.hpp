#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fashmine/errors.hpp"

namespace fashmine {

// Word vectors in the text format "<vocab> <dim>" + one row per word.
// Stored as float32, similarity computed in float64. Immutable after load.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  EmbeddingTable(int dimension,
                 const std::vector<std::pair<std::string, std::vector<float>>>&
                     entries) {
    dim_ = dimension;
    for (const auto& [word, vec] : entries) {
      if (static_cast<int>(vec.size()) != dim_)
        throw DataError("vector for '" + word + "' has wrong dimension");
      insert(word, vec.data());
    }
  }

  static EmbeddingTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open embeddings: " + path);
    return load(in, path);
  }

  static EmbeddingTable load(std::istream& in,
                             const std::string& name = "<stream>") {
    EmbeddingTable t;
    std::string line;
    if (!std::getline(in, line))
      throw DataError(name + ": empty embedding file");
    std::istringstream header(line);
    long long vocab = 0;
    if (!(header >> vocab >> t.dim_) || vocab < 0 || t.dim_ <= 0)
      throw DataError(name + ": bad header line");
    std::vector<float> row(static_cast<std::size_t>(t.dim_));
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string word;
      ls >> word;
      for (int i = 0; i < t.dim_; ++i) {
        if (!(ls >> row[static_cast<std::size_t>(i)]))
          throw DataError(name + ": row " + std::to_string(lineno) +
                          " has fewer than " + std::to_string(t.dim_) +
                          " values or a non-numeric field");
      }
      float extra;
      if (ls >> extra)
        throw DataError(name + ": row " + std::to_string(lineno) +
                        " has more than " + std::to_string(t.dim_) +
                        " values");
      if (t.index_.count(word))
        t.warnings_.push_back("duplicate word '" + word + "' at row " +
                              std::to_string(lineno) +
                              ", last occurrence wins");
      t.insert(word, row.data());
    }
    return t;
  }

  int dimension() const { return dim_; }
  std::size_t size() const { return index_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool contains(const std::string& word) const { return index_.count(word); }

  std::optional<std::span<const float>> vector(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return std::span<const float>(
        &data_[it->second * static_cast<std::size_t>(dim_)],
        static_cast<std::size_t>(dim_));
  }

  // Absent (not zero) when either word is missing; the caller chooses the
  // fallback. Zero-norm vectors are a data defect.
  std::optional<double> cosine(const std::string& a,
                               const std::string& b) const {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return std::nullopt;
    return cosine_rows(ia->second, ib->second);
  }

  // Exact top-k neighbours by cosine, descending, ties lexicographic; the
  // query word itself is excluded.
  std::vector<std::pair<std::string, double>> nearest(const std::string& word,
                                                      int k) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw DataError("word not in table: " + word);
    std::vector<std::pair<std::string, double>> scored;
    if (k <= 0) return scored;
    scored.reserve(index_.size());
    for (const auto& [other, row] : index_) {
      if (row == it->second) continue;
      scored.emplace_back(other, cosine_rows(it->second, row));
    }
    auto rank = [](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    };
    const auto cut = std::min<std::size_t>(static_cast<std::size_t>(k),
                                           scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(cut),
                      scored.end(), rank);
    scored.resize(cut);
    return scored;
  }

 private:
  void insert(const std::string& word, const float* row) {
    double sq = 0;
    for (int i = 0; i < dim_; ++i) {
      double v = row[i];
      sq += v * v;
    }
    auto it = index_.find(word);
    std::size_t slot;
    if (it != index_.end()) {
      slot = it->second;
    } else {
      slot = norms_.size();
      index_.emplace(word, slot);
      norms_.push_back(0);
      data_.resize((slot + 1) * static_cast<std::size_t>(dim_));
    }
    std::copy(row, row + dim_,
              data_.begin() + static_cast<long>(
                                  slot * static_cast<std::size_t>(dim_)));
    norms_[slot] = std::sqrt(sq);
  }

  double cosine_rows(std::size_t ra, std::size_t rb) const {
    const double na = norms_[ra];
    const double nb = norms_[rb];
    if (na == 0.0 || nb == 0.0) throw NumericError("degenerate vector");
    const float* a = &data_[ra * static_cast<std::size_t>(dim_)];
    const float* b = &data_[rb * static_cast<std::size_t>(dim_)];
    double dot = 0;
    for (int i = 0; i < dim_; ++i)
      dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return dot / (na * nb);
  }

  int dim_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<float> data_;
  std::vector<double> norms_;
  std::vector<std::string> warnings_;
};

}  // namespace fashmine
