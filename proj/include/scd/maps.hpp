#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scd/poset.hpp"

namespace scd {

struct PosetMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<ElementId> table;  // image of each source element

  /// Throws BadArity unless the table is total and lands in the target.
  void validate() const;
  ElementId operator()(std::size_t x) const { return table.at(x); }
};

Subset preimage(const PosetMap& f, const Subset& u);
/// Up-closure of the image of `s`.
Subset up_image(const PosetMap& f, const Subset& s);

struct MapCounterexample {
  Subset directed;
  ElementId x{};
};

struct MapReport {
  bool monotone = false;
  bool scott_continuous = false;
  bool strong_scott_continuous = false;  // condition (1)
  bool pulls_back_base_to_topology = false;  // condition (2)
  bool pulls_back_base_to_base = false;      // condition (3)
  bool condition4 = false;
  bool sup_semilattices = false;
  bool preserves_finite_sups = false;  // binary sups; false unless both sides are sup semilattices
  std::optional<MapCounterexample> counterexample;  // first failure of condition (4)
};

MapReport check_map(const PosetMap& f);

/// Condition (4) quantified over every directed subset; an oracle for the
/// singleton reduction used by check_map. Small sources only.
std::optional<MapCounterexample> condition4_bruteforce(const PosetMap& f);

struct DirectionsReport {
  MapReport map;
  bool four_implies_three = false;
  bool three_implies_two = false;
  bool two_iff_one = false;
  bool four_implies_monotone = false;
  bool equivalence_applies = false;
  bool all_equivalent = false;

  bool ok() const {
    return four_implies_three && three_implies_two && two_iff_one && four_implies_monotone &&
           (!equivalence_applies || all_equivalent);
  }
};

DirectionsReport condition_implications(const PosetMap& f);

struct RetractReport {
  bool composition_identity = false;
  bool f_continuous = false;
  bool g_continuous = false;
  bool source_strongly_continuous = false;
  bool target_strongly_continuous = false;
  bool transfer_holds = false;  // premises imply the target is strongly continuous
  bool mechanism_holds = false;  // the interior-chasing step succeeds for every open and point

  bool ok() const { return transfer_holds && mechanism_holds; }
};

/// f: P -> Q and g: Q -> P.
RetractReport retract_transfer(const PosetMap& f, const PosetMap& g);

}  // namespace scd
