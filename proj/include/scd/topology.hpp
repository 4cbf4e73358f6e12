#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scd/poset.hpp"

namespace scd {

enum class TopologyKind { upper, scott, strongScott, lower, lawson, strongLawson, custom };

std::string_view to_string(TopologyKind kind);
std::optional<TopologyKind> parse_topology_kind(std::string_view token);

/// Explicit family of open subsets of a finite carrier, kept in canonical
/// order (cardinality, then mask) so equality of topologies is list equality.
class FiniteTopology {
 public:
  /// Validates that `opens` contains the empty set and the carrier and is
  /// closed under pairwise union and intersection; throws NotATopology.
  FiniteTopology(std::size_t carrier, std::vector<Subset> opens, TopologyKind kind,
                 std::vector<std::string> names = {});

  /// Topology generated by `subbasis`: finite intersections form a base,
  /// arbitrary unions of base sets are the opens. The whole carrier is always
  /// added. Throws CarrierTooLarge past `limit` sets.
  static FiniteTopology generated_by_subbasis(std::size_t carrier, const std::vector<Subset>& subbasis,
                                              TopologyKind kind, std::vector<std::string> names = {},
                                              std::size_t limit = std::size_t{1} << 20);

  /// Topology whose opens are all unions of members of `base`.
  static FiniteTopology generated_by_base(std::size_t carrier, const std::vector<Subset>& base,
                                          TopologyKind kind, std::vector<std::string> names = {},
                                          std::size_t limit = std::size_t{1} << 20);

  std::size_t carrier() const noexcept { return carrier_; }
  const std::vector<Subset>& opens() const noexcept { return opens_; }
  TopologyKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool is_open(const Subset& s) const;
  bool is_closed(const Subset& s) const { return is_open(s.complement()); }

  /// Every open of `this` is open in `other`.
  bool coarser_than(const FiniteTopology& other) const;
  bool same_opens(const FiniteTopology& other) const { return opens_ == other.opens_; }

  /// Smallest open set containing x (finite topologies are closed under
  /// arbitrary intersection).
  Subset neighborhood(std::size_t x) const { return Subset(carrier_, min_nbhd_[x]); }

 private:
  FiniteTopology() = default;
  void finish();

  std::size_t carrier_ = 0;
  std::vector<Subset> opens_;
  TopologyKind kind_ = TopologyKind::custom;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> min_nbhd_;
};

/// Common refinement: generated by the union of both open families.
FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b, TopologyKind kind);

FiniteTopology generate_topology(const FinitePoset& p, TopologyKind kind);

/// The strongly Scott open sets of a finite poset, found with the
/// greatest-element reduction of the (D, x) condition.
std::vector<Subset> strongly_scott_open_sets(const FinitePoset& p);

/// Definitional check: U is an upper set and, for every nonempty directed D
/// (enumerated) and every x, up(D-bounds) meet up(x) inside U forces some
/// d in D with up(d) meet up(x) inside U.
bool is_strong_scott_open_definitional(const FinitePoset& p, const Subset& u);

/// Definitional Scott openness: upper and inaccessible by directed sups.
bool is_scott_open_definitional(const FinitePoset& p, const Subset& u);

struct InteriorClosure {
  Subset interior;
  Subset closure;
};

InteriorClosure interior_closure(const FiniteTopology& t, const Subset& a);
Subset interior(const FiniteTopology& t, const Subset& a);
Subset closure(const FiniteTopology& t, const Subset& a);

/// Specialization order x <= y iff x in cl{y}. Throws NotT0.
FinitePoset specialization_order(const FiniteTopology& t);

enum class SpaceProperty { T0, T1, T2, sober, compact, locallyCompact, cSpace };

std::string_view to_string(SpaceProperty prop);

bool space_property(const FiniteTopology& t, SpaceProperty prop);

/// A is nonempty and any two opens meeting A meet inside A.
bool is_irreducible(const FiniteTopology& t, const Subset& a);

/// Opens ordered by inclusion. Throws CarrierTooLarge past kMaxCarrier opens.
FinitePoset open_set_lattice(const FiniteTopology& t);

/// Name used for an open set when it becomes an element of a poset, e.g. "{a,b}".
std::string format_subset(const Subset& s, const std::vector<std::string>& names);

}  // namespace scd
