#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scd/maps.hpp"
#include "scd/poset.hpp"

namespace scd {

struct PosetBlock {
  std::string name;
  FinitePoset poset;
};

struct MapBlock {
  std::string name;
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> sends;
};

/// A parsed input file. The first poset block is the primary one; further
/// blocks exist so that maps can run between different posets.
struct PosetDocument {
  std::vector<PosetBlock> posets;
  std::vector<MapBlock> maps;

  const PosetBlock& primary() const { return posets.front(); }
  const PosetBlock& poset_named(const std::string& name) const;  // UnknownName
  PosetMap map_named(const std::string& name) const;             // UnknownName
};

/// Throws ParseError carrying the first offending line.
PosetDocument parse_poset_text(const std::string& text);
PosetDocument read_poset_file(const std::string& path);

}  // namespace scd
