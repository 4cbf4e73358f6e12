#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scd/poset.hpp"

namespace scd {

enum class RelationKind { leq, wayBelow, strongWayBelow, prec, triangle, wayBelowLocal };

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view token);

/// A binary relation on a finite carrier; row x holds {y : x r y}.
class RelationMatrix {
 public:
  RelationMatrix(std::size_t carrier, RelationKind kind);

  std::size_t carrier() const noexcept { return rows_.size(); }
  RelationKind kind() const noexcept { return kind_; }

  bool holds(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1U; }
  void set(std::size_t x, std::size_t y) { rows_[x] |= std::uint64_t{1} << y; }

  /// {y : x r y}
  Subset above(std::size_t x) const { return Subset(carrier(), rows_[x]); }
  /// {y : y r x}
  Subset below(std::size_t x) const;

  bool contained_in(const RelationMatrix& other) const;
  bool same_pairs(const RelationMatrix& other) const { return rows_ == other.rows_; }

 private:
  RelationKind kind_;
  std::vector<std::uint64_t> rows_;
};

/// Computes the relation by its definition, with directed sets restricted to
/// principal ideals (a finite directed set and its generated ideal have the
/// same greatest element and the same sup). `triangle` needs a complete
/// lattice (NotACompleteLattice) and at most 12 elements.
RelationMatrix aux_relation(const FinitePoset& p, RelationKind kind);

/// Same relation, quantifying over every directed subset. Only for the
/// directed-set based kinds (wayBelow, strongWayBelow, wayBelowLocal).
RelationMatrix aux_relation_bruteforce(const FinitePoset& p, RelationKind kind);

/// Interior of `a` in the upper topology, in closed form: y is interior iff
/// the complement of down{f : not y <= f} lies inside a.
Subset upper_topology_interior(const FinitePoset& p, const Subset& a);

struct SliceSets {
  Subset below;
  Subset above;
};

SliceSets slice_sets(const FinitePoset& p, const RelationMatrix& r, ElementId x);

struct Counterexample {
  std::string clause;
  std::vector<ElementId> elements;
};

struct AxiomReport {
  bool order_compatible = true;   // u <= x r y <= z implies u r z
  bool contained_in_way_below = true;
  bool contained_in_leq = true;
  bool join_stable = true;        // x r z, y r z implies (x v y) r z
  bool bottom_rule = true;        // 0 r x
  bool interpolation = true;      // x r y implies x r z r y for some z
  std::vector<Counterexample> counterexamples;

  bool all_ok() const {
    return order_compatible && contained_in_way_below && contained_in_leq && join_stable && bottom_rule &&
           interpolation;
  }
};

/// Only wayBelow and strongWayBelow are accepted (UnsupportedKind).
AxiomReport relation_axioms(const FinitePoset& p, const RelationMatrix& r);

}  // namespace scd
