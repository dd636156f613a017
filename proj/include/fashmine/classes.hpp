#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fashmine {

// The 13 clothing classes, in the fixed order label vectors use.
inline constexpr std::array<std::string_view, 13> kClassNames{
    "dresses",
    "coats",
    "blouses & tunics",
    "bags",
    "accessories",
    "skirts",
    "shoes",
    "jumpers & cardigans",
    "jeans",
    "jackets",
    "tights & socks",
    "tops & t-shirts",
    "trousers & shorts",
};

inline constexpr std::size_t kNumClasses = kClassNames.size();

inline std::optional<std::size_t> class_index(std::string_view name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (kClassNames[i] == name) return i;
  return std::nullopt;
}

// Ontology item terms that indicate each class; used by the keyword and
// extraction labeling functions to turn matched terms into class votes.
inline const std::map<std::string, std::vector<std::string>>&
default_class_terms() {
  static const std::map<std::string, std::vector<std::string>> terms{
      {"dresses", {"dress", "gown", "sundress"}},
      {"coats", {"coat", "trench", "parka", "overcoat"}},
      {"blouses & tunics", {"blouse", "tunic"}},
      {"bags", {"bag", "handbag", "purse", "tote", "clutch", "backpack"}},
      {"accessories",
       {"accessory", "belt", "hat", "scarf", "necklace", "bracelet",
        "earring", "watch", "sunglasses", "glove", "cap", "jewelry"}},
      {"skirts", {"skirt", "miniskirt"}},
      {"shoes",
       {"shoe", "boot", "heel", "sneaker", "loafer", "sandal", "pump",
        "stiletto", "flat"}},
      {"jumpers & cardigans",
       {"jumper", "cardigan", "sweater", "pullover", "hoodie", "knitwear"}},
      {"jeans", {"jeans", "denim", "jegging"}},
      {"jackets", {"jacket", "blazer", "bomber", "windbreaker"}},
      {"tights & socks", {"tights", "sock", "stocking", "legging"}},
      {"tops & t-shirts", {"top", "t-shirt", "tshirt", "tee", "shirt",
                           "tank", "camisole"}},
      {"trousers & shorts",
       {"trousers", "shorts", "pants", "chinos", "culottes", "slacks"}},
  };
  return terms;
}

}  // namespace fashmine
