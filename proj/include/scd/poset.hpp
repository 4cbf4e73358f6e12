#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scd/subset.hpp"

namespace scd {

/// Index of an element in a finite carrier.
enum class ElementId : std::uint32_t {};

constexpr std::size_t idx(ElementId e) noexcept { return static_cast<std::size_t>(e); }
constexpr ElementId elem(std::size_t i) noexcept { return static_cast<ElementId>(i); }

/// An exact finite partial order. The order is stored as one up-set mask and
/// one down-set mask per element, so every order query is a bit test.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Reflexive-transitive closure of `covers` (pairs lo, hi with lo < hi).
  static FinitePoset from_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  /// From an explicit order table; `above[x]` is the mask of all y with x <= y.
  /// Throws CycleDetected if the table is not a partial order.
  static FinitePoset from_up_masks(std::vector<std::string> names,
                                   const std::vector<std::uint64_t>& above);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId e) const { return names_.at(idx(e)); }
  std::optional<ElementId> find(std::string_view name) const;
  ElementId at(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const { return (up_[idx(a)] >> idx(b)) & 1U; }
  bool leq(std::size_t a, std::size_t b) const { return (up_[a] >> b) & 1U; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  Subset up(std::size_t x) const { return Subset(size(), up_[x]); }
  Subset down(std::size_t x) const { return Subset(size(), down_[x]); }
  std::uint64_t up_mask(std::size_t x) const { return up_[x]; }
  std::uint64_t down_mask(std::size_t x) const { return down_[x]; }

  Subset empty_set() const { return Subset::empty_of(size()); }
  Subset full_set() const { return Subset::full_of(size()); }

  /// Cover pairs (lo, hi): lo < hi with nothing strictly between.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  FinitePoset dual() const;

  /// Induced sub-poset on `keep`, in increasing index order.
  FinitePoset restrict_to(const Subset& keep) const;

  bool operator==(const FinitePoset&) const = default;

 private:
  FinitePoset(std::vector<std::string> names, std::vector<std::uint64_t> up);
  void fill_down();

  std::vector<std::string> names_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

/// build_poset: validates names and closes the cover relation.
FinitePoset build_poset(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& covers);

enum class Direction { up, down };

/// Upward or downward closure of `s`.
Subset up_down(const FinitePoset& p, const Subset& s, Direction direction);

struct Bounds {
  std::optional<ElementId> sup;
  std::optional<ElementId> inf;
  Subset upper_bounds;
  Subset lower_bounds;
};

Bounds bounds(const FinitePoset& p, const Subset& s);

std::optional<ElementId> join(const FinitePoset& p, std::size_t a, std::size_t b);
std::optional<ElementId> meet(const FinitePoset& p, std::size_t a, std::size_t b);

struct StructureFlags {
  bool is_dcpo = false;
  bool is_sup_semilattice = false;
  bool is_inf_semilattice = false;
  bool is_complete_semilattice = false;
  bool is_complete_lattice = false;
  bool is_lattice_distributive = false;
  std::optional<ElementId> bottom;
  std::optional<ElementId> top;
};

StructureFlags structure_flags(const FinitePoset& p);

/// True when every two elements of `s` have an upper bound inside `s` and `s`
/// is nonempty. Checked pairwise, without assuming a greatest element exists.
bool is_directed(const FinitePoset& p, const Subset& s);
bool is_filtered(const FinitePoset& p, const Subset& s);

bool is_upper_set(const FinitePoset& p, const Subset& s);
bool is_lower_set(const FinitePoset& p, const Subset& s);
bool is_ideal(const FinitePoset& p, const Subset& s);
bool is_filter(const FinitePoset& p, const Subset& s);

/// Greatest element of `s`, if any.
std::optional<ElementId> greatest(const FinitePoset& p, const Subset& s);

/// Streams every nonempty directed subset to `sink` (brute force over all
/// subsets). Stops after `cap` emissions when cap > 0, or when `sink` returns
/// false. Limited to 24 elements.
void directed_subsets(const FinitePoset& p, std::size_t cap,
                      const std::function<bool(const Subset&)>& sink);
std::vector<Subset> directed_subsets(const FinitePoset& p, std::size_t cap = 0);

struct PrimeSets {
  Subset prime;
  Subset coprime;
};

/// PRIME and COPRIME of a finite lattice. Throws NotALattice otherwise.
PrimeSets primes_coprimes(const FinitePoset& p);

/// Enumerates all upper (or lower) sets, output-sensitively. Throws
/// CarrierTooLarge once more than `limit` sets have been produced.
std::vector<Subset> upper_sets(const FinitePoset& p, std::size_t limit = std::size_t{1} << 20);
std::vector<Subset> lower_sets(const FinitePoset& p, std::size_t limit = std::size_t{1} << 20);

}  // namespace scd
