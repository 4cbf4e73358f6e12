#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scd/relations.hpp"
#include "scd/topology.hpp"

namespace scd {

/// Everything the classifier derives from one finite poset, computed once.
struct PosetAnalysis {
  explicit PosetAnalysis(FinitePoset p);

  FinitePoset poset;
  StructureFlags flags;
  FiniteTopology upper;
  FiniteTopology scott;
  FiniteTopology strong_scott;
  FiniteTopology lower;
  FiniteTopology strong_lawson;
  std::vector<Subset> strongly_open;  // the strongly Scott open sets (base of strong_scott)
  RelationMatrix way_below;
  RelationMatrix strong_way_below;
  RelationMatrix prec;
};

struct ClassVerdict {
  bool value = false;
  std::vector<std::string> routes;  // route tags that were evaluated and agreed
  std::string witness;              // failing element / open set, empty when value is true
};

struct ClassificationReport {
  ClassVerdict continuous;
  ClassVerdict hypercontinuous;
  ClassVerdict strongly_continuous;
  std::optional<ClassVerdict> prime_continuous;        // complete lattices only
  std::optional<ClassVerdict> completely_distributive; // complete lattices only
};

/// Decides each class by two independent routes; throws
/// InternalInconsistency if they disagree.
ClassificationReport classify(const FinitePoset& p);
ClassificationReport classify(const PosetAnalysis& a);

/// x's slice {y : y r x} is directed and has supremum x.
bool slice_approximates(const FinitePoset& p, const RelationMatrix& r, std::size_t x);

/// Complete distributivity of a finite complete lattice by the triple law.
bool cd_by_distributivity(const FinitePoset& lattice);
/// Same, by "continuous and every element is a sup of co-primes".
bool cd_by_coprimes(const FinitePoset& lattice);
/// Continuity of a finite lattice: every element is the directed sup of its
/// way-below slice.
bool lattice_is_continuous(const FinitePoset& lattice);

/// Co-prime / prime elements of the lattice of opens (ordered by inclusion).
bool is_coprime_open(const FiniteTopology& t, const Subset& u);
bool is_prime_open(const FiniteTopology& t, const Subset& u);

struct TheoremEntry {
  enum class Mode { equivalence, assertion };

  std::string id;
  Mode mode = Mode::equivalence;
  bool applicable = true;
  std::vector<std::pair<std::string, bool>> conditions;
  std::string counterexample;

  /// Equivalences pass when all conditions agree; assertions when all hold.
  /// Not-applicable entries count as passed.
  bool passed() const;
};

struct TheoremReport {
  std::vector<TheoremEntry> entries;

  bool all_passed() const;
  const TheoremEntry* find(std::string_view id) const;
};

TheoremReport verify_theorems(const FinitePoset& p);
TheoremReport verify_theorems(const PosetAnalysis& a);

struct BridgeEntry {
  TopologyKind kind;
  bool c_space = false;
  bool cd_distributive = false;
  bool cd_coprimes = false;
  bool agree() const { return c_space == cd_distributive && cd_distributive == cd_coprimes; }
};

/// For each of the six generated topologies: C-space property against
/// complete distributivity of the open-set lattice (both routes).
std::vector<BridgeEntry> c_space_bridge(const FinitePoset& p);

}  // namespace scd
