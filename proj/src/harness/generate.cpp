#include "scd/harness/generate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "scd/error.hpp"

namespace scd {

Shape parse_shape(std::string_view token) {
  if (token == "any") return Shape::any;
  if (token == "lattice") return Shape::lattice;
  throw Error(ErrorCode::SyntaxError, "unknown shape " + std::string(token));
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

FinitePoset random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::uint64_t> above(n);
  for (std::size_t i = 0; i < n; ++i) above[i] = std::uint64_t{1} << i;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) above[perm[i]] |= std::uint64_t{1} << perm[j];
    }
  }
  // Edges only go forward along perm, so closing in reverse order is enough.
  for (std::size_t k = n; k-- > 0;) {
    const auto x = perm[k];
    for_each_bit(above[x], [&](std::size_t y) { above[x] |= above[y]; });
  }
  return FinitePoset::from_up_masks(default_names(n), above);
}

// A family of subsets closed under intersection and containing the ground set
// is a lattice under inclusion. Grow one until it has n members; if random
// additions keep overshooting, add a new bottom, which always adds exactly
// one member. Random additions never drop the upper n "reserve" points, so a
// new bottom can always be cut out of the current one.
FinitePoset random_lattice(std::size_t n, std::mt19937_64& rng) {
  const std::size_t ground = 2 * n;
  std::set<std::uint64_t> family{full_mask(ground)};
  auto with = [&](std::uint64_t s) {
    auto next = family;
    next.insert(s);
    for (auto a : family) next.insert(a & s);
    return next;
  };
  while (family.size() < n) {
    bool grown = false;
    for (int attempt = 0; attempt < 8 && !grown; ++attempt) {
      auto it = family.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng));
      const auto drop = rng() & rng() & full_mask(n);
      const auto next = with(*it & ~drop);
      if (next.size() > family.size() && next.size() <= n) {
        family = next;
        grown = true;
      }
    }
    if (!grown) {
      const auto bottom = std::accumulate(family.begin(), family.end(), full_mask(ground),
                                          [](std::uint64_t a, std::uint64_t b) { return a & b; });
      family.insert(bottom & ~(std::uint64_t{1} << (63 - std::countl_zero(bottom))));
    }
  }
  std::vector<std::uint64_t> sets(family.begin(), family.end());
  std::shuffle(sets.begin(), sets.end(), rng);
  std::vector<std::uint64_t> above(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((sets[i] & ~sets[j]) == 0) above[i] |= std::uint64_t{1} << j;
    }
  }
  return FinitePoset::from_up_masks(default_names(n), above);
}

}  // namespace

FinitePoset random_poset(std::size_t n, std::uint64_t seed, Shape shape) {
  if (n < 1 || n > 24) throw Error(ErrorCode::BadArity, "random posets need 1 <= n <= 24");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n * 2 + (shape == Shape::lattice ? 1 : 0));
  return shape == Shape::lattice ? random_lattice(n, rng) : random_order(n, rng);
}

void enumerate_labeled_posets(std::size_t n, const std::function<void(const FinitePoset&)>& sink) {
  if (n > 5) throw Error(ErrorCode::TooLarge, "labeled enumeration is limited to n <= 5");
  const auto names = default_names(n);
  std::vector<std::uint64_t> above(n, 0);
  // Element k is placed with a down-set D and an up-set U of the poset on
  // 0..k-1 such that all of D lies below all of U.
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      sink(FinitePoset::from_up_masks(names, above));
      return;
    }
    const auto all = full_mask(k);
    for (std::uint64_t d = 0; d <= all; ++d) {
      bool down_closed = true;
      for_each_bit(d, [&](std::size_t x) {
        for (std::size_t y = 0; y < k; ++y) {
          if ((above[y] >> x & 1) && !(d >> y & 1)) down_closed = false;
        }
      });
      if (!down_closed) continue;
      for (std::uint64_t u = 0; u <= all; ++u) {
        if (u & d) continue;
        bool ok = true;
        for_each_bit(u, [&](std::size_t x) {
          if ((above[x] & all & ~u) != 0) ok = false;
        });
        for_each_bit(d, [&](std::size_t x) {
          if ((above[x] & u) != u) ok = false;
        });
        if (!ok) continue;
        const auto saved = above;
        for_each_bit(d, [&](std::size_t x) { above[x] |= std::uint64_t{1} << k; });
        above[k] = u | (std::uint64_t{1} << k);
        extend(k + 1);
        above = saved;
      }
    }
  };
  extend(0);
}

std::vector<FinitePoset> enumerate_labeled_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  enumerate_labeled_posets(n, [&](const FinitePoset& p) { out.push_back(p); });
  return out;
}

}  // namespace scd
