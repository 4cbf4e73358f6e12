#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "scd/error.hpp"

namespace scd {

/// Largest carrier any finite structure in this library accepts. Subsets are
/// stored as a single 64-bit mask.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a finite carrier {0, ..., n-1}.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t carrier, std::uint64_t mask = 0);

  static Subset empty_of(std::size_t carrier) { return Subset(carrier); }
  static Subset full_of(std::size_t carrier);
  static Subset singleton(std::size_t carrier, std::size_t element);

  std::size_t carrier() const noexcept { return carrier_; }
  std::uint64_t mask() const noexcept { return mask_; }

  bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1U; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept { return *this == full_of(carrier_); }

  void insert(std::size_t i) { mask_ |= bit(i); }
  void erase(std::size_t i) { mask_ &= ~bit(i); }

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset complement() const;
  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset operator-(const Subset& o) const;

  std::vector<std::size_t> elements() const;

  bool operator==(const Subset&) const = default;

 private:
  std::uint64_t bit(std::size_t i) const { return std::uint64_t{1} << i; }
  void require_same_carrier(const Subset& o) const;

  std::size_t carrier_ = 0;
  std::uint64_t mask_ = 0;
};

/// Canonical order used for open-set families: by cardinality, then mask.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.mask() < b.mask();
}

inline std::uint64_t full_mask(std::size_t carrier) {
  return carrier >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << carrier) - 1;
}

/// Calls f(i) for every set bit of `mask`, lowest first.
template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    f(i);
    mask &= mask - 1;
  }
}

}  // namespace scd
