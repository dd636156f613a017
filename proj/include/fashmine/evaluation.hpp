#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/classes.hpp"
#include "fashmine/errors.hpp"
#include "fashmine/extract.hpp"
#include "fashmine/metrics.hpp"
#include "fashmine/ontology.hpp"

namespace fashmine {

// Annotated post: relevant ontology terms per category plus binary class
// truth. JSONL: {"post_id": str, "categories": {cat: [terms]},
// "classes": [str]}.
struct GoldPost {
  std::string post_id;
  std::map<std::string, std::set<std::string>> categories;
  std::set<std::string> classes;
};

inline std::vector<GoldPost> load_gold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open gold file: " + path);
  std::vector<GoldPost> out;
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
      throw DataError(path + ": malformed gold record at line " +
                      std::to_string(lineno) + ": " + e.what());
    }
    GoldPost g;
    g.post_id = j.at("post_id").get<std::string>();
    if (j.contains("categories")) {
      for (const auto& [cat, terms] : j.at("categories").items()) {
        if (std::find(kOntologyCategories.begin(), kOntologyCategories.end(),
                      cat) == kOntologyCategories.end())
          throw DataError(path + ": unknown category '" + cat +
                          "' at line " + std::to_string(lineno));
        std::set<std::string> set;
        for (const auto& t : terms) set.insert(ascii_lower(t.get<std::string>()));
        g.categories.emplace(cat, std::move(set));
      }
    }
    if (j.contains("classes")) {
      for (const auto& c : j.at("classes")) {
        const std::string name = c.get<std::string>();
        if (!class_index(name))
          throw DataError(path + ": unknown class '" + name + "' at line " +
                          std::to_string(lineno));
        g.classes.insert(name);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Per-category ranking metrics against gold term sets, Table-style cutoffs.
struct CategoryRankingReport {
  std::map<int, double> ndcg;  // k -> mean NDCG@k over evaluable posts
  std::map<int, double> p;     // k -> mean P@k
  double map = 0.0;
  std::vector<double> per_post_ap;  // evaluable posts, input order
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // empty relevant set
};

inline const std::vector<int>& ranking_cutoffs() {
  static const std::vector<int> ks{1, 3, 5, 10};
  return ks;
}

// extractions[i] aligns with gold[i].
inline std::map<std::string, CategoryRankingReport> ranking_eval(
    const std::vector<RankedExtraction>& extractions,
    const std::vector<GoldPost>& gold) {
  if (extractions.size() != gold.size())
    throw DataError("ranking_eval: extraction/gold size mismatch");
  std::map<std::string, CategoryRankingReport> out;
  for (auto cat : kOntologyCategories) {
    const std::string category(cat);
    CategoryRankingReport rep;
    std::map<int, double> ndcg_sum, p_sum;
    std::map<int, std::size_t> ndcg_n;
    for (std::size_t i = 0; i < extractions.size(); ++i) {
      auto git = gold[i].categories.find(category);
      const std::set<std::string> relevant =
          git == gold[i].categories.end() ? std::set<std::string>{}
                                          : git->second;
      if (relevant.empty()) {
        ++rep.skipped;
        continue;
      }
      std::vector<std::string> ranked;
      if (auto eit = extractions[i].find(category);
          eit != extractions[i].end())
        for (const auto& [term, score] : eit->second) ranked.push_back(term);

      for (int k : ranking_cutoffs()) {
        if (auto v = ndcg_at_k(ranked, relevant, k)) {
          ndcg_sum[k] += *v;
          ++ndcg_n[k];
        }
        p_sum[k] += precision_at_k(ranked, relevant, k);
      }
      rep.per_post_ap.push_back(*average_precision(ranked, relevant));
      ++rep.evaluated;
    }
    if (rep.evaluated > 0) {
      for (int k : ranking_cutoffs()) {
        rep.ndcg[k] = ndcg_sum[k] / static_cast<double>(ndcg_n[k]);
        rep.p[k] = p_sum[k] / static_cast<double>(rep.evaluated);
      }
      double s = 0;
      for (double ap : rep.per_post_ap) s += ap;
      rep.map = s / static_cast<double>(rep.evaluated);
    }
    out.emplace(category, std::move(rep));
  }
  return out;
}

inline nlohmann::json to_json(const CategoryRankingReport& r) {
  nlohmann::json ndcg = nlohmann::json::object();
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : r.ndcg) ndcg["@" + std::to_string(k)] = v;
  for (const auto& [k, v] : r.p) p["@" + std::to_string(k)] = v;
  return {{"ndcg", std::move(ndcg)}, {"p", std::move(p)},   {"map", r.map},
          {"per_post_ap", r.per_post_ap}, {"evaluated", r.evaluated},
          {"skipped", r.skipped}};
}

inline nlohmann::json to_json(const ClassificationMetrics& m) {
  return {{"accuracy", m.accuracy},
          {"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"posts", m.posts}};
}

}  // namespace fashmine
