#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace scd {

inline constexpr std::uint64_t kInfIndex = std::numeric_limits<std::uint64_t>::max();

/// One element of a symbolic model. Non-parameterized families use index 0.
struct ModelElement {
  std::uint32_t family = 0;
  std::uint64_t index = 0;

  friend bool operator==(const ModelElement&, const ModelElement&) = default;
  friend auto operator<=>(const ModelElement&, const ModelElement&) = default;
};

/// Closed index range [lo, hi] inside one family; hi may be kInfIndex.
struct Interval {
  std::uint32_t family = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool infinite() const { return hi == kInfIndex; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A possibly infinite set of model elements, kept as a normalized union of
/// disjoint, non-adjacent intervals sorted by (family, lo).
class SymSet {
 public:
  SymSet() = default;
  explicit SymSet(std::vector<Interval> parts);

  static SymSet point(ModelElement e) { return SymSet({{e.family, e.index, e.index}}); }
  static SymSet range(std::uint32_t family, std::uint64_t lo, std::uint64_t hi = kInfIndex) {
    return SymSet({{family, lo, hi}});
  }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool finite() const;
  bool contains(ModelElement e) const;
  bool is_subset_of(const SymSet& other) const { return (*this - other).empty(); }

  SymSet operator|(const SymSet& other) const;
  SymSet operator&(const SymSet& other) const;
  SymSet operator-(const SymSet& other) const;

  /// Members whose index is at most `max_index`, ordered by (index, family).
  std::vector<ModelElement> elements_up_to(std::uint64_t max_index) const;

  friend bool operator==(const SymSet&, const SymSet&) = default;

 private:
  std::vector<Interval> parts_;
};

/// Builds the subset of `base` where `pred` holds. Indices above `horizon`
/// take the value `pred` has at the last evaluated index of their interval.
SymSet select(const SymSet& base, std::uint64_t horizon, const std::function<bool(ModelElement)>& pred);

}  // namespace scd
