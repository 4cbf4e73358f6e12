#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "scd/poset.hpp"

namespace scd {

enum class Shape { any, lattice };

Shape parse_shape(std::string_view token);  // SyntaxError

/// Deterministic in (n, seed, shape); elements are named e0, e1, ...
/// Throws BadArity unless 1 <= n <= 24.
FinitePoset random_poset(std::size_t n, std::uint64_t seed, Shape shape);

/// Every labeled partial order on n elements, each exactly once. n <= 5,
/// otherwise TooLarge.
void enumerate_labeled_posets(std::size_t n, const std::function<void(const FinitePoset&)>& sink);
std::vector<FinitePoset> enumerate_labeled_posets(std::size_t n);

}  // namespace scd
