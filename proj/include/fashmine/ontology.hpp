#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "fashmine/common.hpp"
#include "fashmine/errors.hpp"

namespace fashmine {

inline constexpr std::array<std::string_view, 5> kOntologyCategories{
    "items", "brands", "patterns", "materials", "styles"};

// Flat five-category fashion lexicon. Terms are lowercase and unique per
// category.
struct Ontology {
  std::map<std::string, std::vector<std::string>> categories;

  static Ontology from_json(const nlohmann::json& j) {
    Ontology o;
    for (auto cat : kOntologyCategories) {
      const std::string name(cat);
      if (!j.contains(name))
        throw DataError("ontology missing category: " + name);
      std::set<std::string> seen;
      std::vector<std::string> terms;
      for (const auto& t : j.at(name)) {
        std::string term = ascii_lower(t.get<std::string>());
        if (seen.insert(term).second) terms.push_back(std::move(term));
      }
      o.categories.emplace(name, std::move(terms));
    }
    if (j.size() != kOntologyCategories.size())
      for (const auto& [key, _] : j.items())
        if (std::find(kOntologyCategories.begin(), kOntologyCategories.end(),
                      key) == kOntologyCategories.end())
          throw DataError("ontology has unknown category: " + key);
    return o;
  }

  static Ontology load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open ontology: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DataError("bad ontology JSON in " + path + ": " + e.what());
    }
    return from_json(j);
  }

  bool empty() const {
    for (const auto& [_, terms] : categories)
      if (!terms.empty()) return false;
    return true;
  }
};

// Offline stand-in for the sense-probability API: term -> probability the
// term is used in its fashion sense. Neutral 0.5 for absent terms.
class DistantSupervisionCache {
 public:
  DistantSupervisionCache() = default;

  explicit DistantSupervisionCache(
      std::unordered_map<std::string, double> values)
      : values_(std::move(values)) {
    for (const auto& [term, p] : values_)
      if (p < 0.0 || p > 1.0)
        throw DataError("cache probability out of [0,1] for term: " + term);
  }

  // TSV rows: term<TAB>probability
  static DistantSupervisionCache load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open cache: " + path);
    std::unordered_map<std::string, double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw DataError(path + ": line " + std::to_string(lineno) +
                        " is not term<TAB>probability");
      std::string term = ascii_lower(line.substr(0, tab));
      double p;
      try {
        p = std::stod(line.substr(tab + 1));
      } catch (const std::exception&) {
        throw DataError(path + ": bad probability at line " +
                        std::to_string(lineno));
      }
      if (p < 0.0 || p > 1.0)
        throw DataError(path + ": probability out of [0,1] at line " +
                        std::to_string(lineno));
      values[term] = p;
    }
    return DistantSupervisionCache(std::move(values));
  }

  double probability(const std::string& term) const {
    auto it = values_.find(term);
    return it == values_.end() ? kNeutral : it->second;
  }

  std::size_t size() const { return values_.size(); }

  static constexpr double kNeutral = 0.5;

 private:
  std::unordered_map<std::string, double> values_;
};

}  // namespace fashmine
