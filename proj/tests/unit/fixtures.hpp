#pragma once

#include <string>

#include "scd/poset.hpp"

namespace fx {

using scd::FinitePoset;

inline FinitePoset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FinitePoset::from_covers(names, covers);
}

inline FinitePoset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return FinitePoset::from_covers(names, {});
}

inline FinitePoset diamond() {
  return FinitePoset::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline FinitePoset m3() {
  return FinitePoset::from_covers({"0", "a", "b", "c", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline FinitePoset n5() {
  return FinitePoset::from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// Bottom with two atoms.
inline FinitePoset vee() { return FinitePoset::from_covers({"0", "a1", "a2"}, {{"0", "a1"}, {"0", "a2"}}); }

}  // namespace fx
