#include "scd/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace scd {

namespace {

void require_carrier(const FinitePoset& p, const Subset& s) {
  if (s.carrier() != p.size()) {
    throw Error(ErrorCode::CarrierMismatch, "subset over " + std::to_string(s.carrier()) +
                                                " elements, poset has " + std::to_string(p.size()));
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<std::uint64_t> up)
    : names_(std::move(names)), up_(std::move(up)) {
  fill_down();
}

void FinitePoset::fill_down() {
  down_.assign(names_.size(), 0);
  for (std::size_t x = 0; x < names_.size(); ++x) {
    for_each_bit(up_[x], [&](std::size_t y) { down_[y] |= std::uint64_t{1} << x; });
  }
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<std::string, std::string>>& covers) {
  if (names.empty()) throw Error(ErrorCode::BadArity, "a poset needs at least one element");
  if (names.size() > kMaxCarrier) {
    throw Error(ErrorCode::CarrierTooLarge, std::to_string(names.size()) + " elements");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateName, n);
  }
  auto index_of = [&](const std::string& n) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw Error(ErrorCode::UnknownName, n);
    return static_cast<std::size_t>(it - names.begin());
  };
  const std::size_t n = names.size();
  std::vector<std::uint64_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) up[i] = std::uint64_t{1} << i;
  for (const auto& [lo, hi] : covers) {
    const auto a = index_of(lo);
    const auto b = index_of(hi);
    if (a == b) throw Error(ErrorCode::CycleDetected, "cover " + lo + " " + hi);
    up[a] |= std::uint64_t{1} << b;
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((up[i] >> k) & 1U) up[i] |= up[k];
    }
  }
  return from_up_masks(std::move(names), up);
}

FinitePoset FinitePoset::from_up_masks(std::vector<std::string> names,
                                       const std::vector<std::uint64_t>& above) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::BadArity, "a poset needs at least one element");
  if (n > kMaxCarrier) throw Error(ErrorCode::CarrierTooLarge, std::to_string(n) + " elements");
  if (above.size() != n) throw Error(ErrorCode::CarrierMismatch, "order table size");
  std::set<std::string> seen;
  for (const auto& nm : names) {
    if (!seen.insert(nm).second) throw Error(ErrorCode::DuplicateName, nm);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if ((above[x] & ~full_mask(n)) != 0) throw Error(ErrorCode::CarrierMismatch, "order table row");
    if (((above[x] >> x) & 1U) == 0) {
      throw Error(ErrorCode::CycleDetected, "order is not reflexive at " + names[x]);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && ((above[x] >> y) & 1U) && ((above[y] >> x) & 1U)) {
        throw Error(ErrorCode::CycleDetected, names[x] + " and " + names[y] + " are mutually below");
      }
    }
    for_each_bit(above[x], [&](std::size_t y) {
      if ((above[y] & ~above[x]) != 0) {
        throw Error(ErrorCode::CycleDetected, "order is not transitive through " + names[y]);
      }
    });
  }
  return FinitePoset(std::move(names), above);
}

std::optional<ElementId> FinitePoset::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return elem(i);
  }
  return std::nullopt;
}

ElementId FinitePoset::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorCode::UnknownName, std::string(name));
}

std::vector<std::pair<ElementId, ElementId>> FinitePoset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint64_t strict_up = up_[a] & ~(std::uint64_t{1} << a);
    for_each_bit(strict_up, [&](std::size_t b) {
      const std::uint64_t between = strict_up & down_[b] & ~(std::uint64_t{1} << b);
      if (between == 0) out.emplace_back(elem(a), elem(b));
    });
  }
  return out;
}

FinitePoset FinitePoset::dual() const { return FinitePoset(names_, down_); }

FinitePoset FinitePoset::restrict_to(const Subset& keep) const {
  require_carrier(*this, keep);
  const auto kept = keep.elements();
  std::vector<std::string> names;
  std::vector<std::uint64_t> up(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    names.push_back(names_[kept[i]]);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (leq(kept[i], kept[j])) up[i] |= std::uint64_t{1} << j;
    }
  }
  return FinitePoset(std::move(names), std::move(up));
}

FinitePoset build_poset(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
  return FinitePoset::from_covers(std::move(names), covers);
}

Subset up_down(const FinitePoset& p, const Subset& s, Direction direction) {
  require_carrier(p, s);
  std::uint64_t out = 0;
  for_each_bit(s.mask(), [&](std::size_t x) {
    out |= direction == Direction::up ? p.up_mask(x) : p.down_mask(x);
  });
  return Subset(p.size(), out);
}

Bounds bounds(const FinitePoset& p, const Subset& s) {
  require_carrier(p, s);
  const std::size_t n = p.size();
  std::uint64_t ub = full_mask(n);
  std::uint64_t lb = full_mask(n);
  for_each_bit(s.mask(), [&](std::size_t x) {
    ub &= p.up_mask(x);
    lb &= p.down_mask(x);
  });
  Bounds b{std::nullopt, std::nullopt, Subset(n, ub), Subset(n, lb)};
  for_each_bit(ub, [&](std::size_t u) {
    if ((ub & ~p.up_mask(u)) == 0) b.sup = elem(u);
  });
  for_each_bit(lb, [&](std::size_t l) {
    if ((lb & ~p.down_mask(l)) == 0) b.inf = elem(l);
  });
  return b;
}

std::optional<ElementId> join(const FinitePoset& p, std::size_t a, std::size_t b) {
  const std::uint64_t ub = p.up_mask(a) & p.up_mask(b);
  std::optional<ElementId> out;
  for_each_bit(ub, [&](std::size_t u) {
    if ((ub & ~p.up_mask(u)) == 0) out = elem(u);
  });
  return out;
}

std::optional<ElementId> meet(const FinitePoset& p, std::size_t a, std::size_t b) {
  const std::uint64_t lb = p.down_mask(a) & p.down_mask(b);
  std::optional<ElementId> out;
  for_each_bit(lb, [&](std::size_t l) {
    if ((lb & ~p.down_mask(l)) == 0) out = elem(l);
  });
  return out;
}

StructureFlags structure_flags(const FinitePoset& p) {
  const std::size_t n = p.size();
  StructureFlags f;
  const auto all = bounds(p, p.full_set());
  f.top = all.sup;
  f.bottom = all.inf;

  // Every finite directed set has a greatest element g, and sup(D) = g. The
  // principal ideals are checked as the representatives of those sets.
  f.is_dcpo = true;
  for (std::size_t g = 0; g < n; ++g) {
    if (bounds(p, p.down(g)).sup != elem(g)) f.is_dcpo = false;
  }

  f.is_sup_semilattice = true;
  f.is_inf_semilattice = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!join(p, a, b)) f.is_sup_semilattice = false;
      if (!meet(p, a, b)) f.is_inf_semilattice = false;
    }
  }
  // Finite: nonempty infs exist iff binary infs exist.
  f.is_complete_semilattice = f.is_dcpo && f.is_inf_semilattice;
  f.is_complete_lattice = f.is_complete_semilattice && f.is_sup_semilattice && f.top && f.bottom;

  if (f.is_complete_lattice) {
    f.is_lattice_distributive = true;
    for (std::size_t x = 0; x < n && f.is_lattice_distributive; ++x) {
      for (std::size_t y = 0; y < n && f.is_lattice_distributive; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const auto lhs = meet(p, x, idx(*join(p, y, z)));
          const auto rhs = join(p, idx(*meet(p, x, y)), idx(*meet(p, x, z)));
          if (lhs != rhs) {
            f.is_lattice_distributive = false;
            break;
          }
        }
      }
    }
  }
  return f;
}

bool is_directed(const FinitePoset& p, const Subset& s) {
  require_carrier(p, s);
  if (s.empty()) return false;
  const auto xs = s.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if ((p.up_mask(xs[i]) & p.up_mask(xs[j]) & s.mask()) == 0) return false;
    }
  }
  return true;
}

bool is_filtered(const FinitePoset& p, const Subset& s) {
  require_carrier(p, s);
  if (s.empty()) return false;
  const auto xs = s.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if ((p.down_mask(xs[i]) & p.down_mask(xs[j]) & s.mask()) == 0) return false;
    }
  }
  return true;
}

bool is_upper_set(const FinitePoset& p, const Subset& s) {
  return up_down(p, s, Direction::up) == s;
}

bool is_lower_set(const FinitePoset& p, const Subset& s) {
  return up_down(p, s, Direction::down) == s;
}

bool is_ideal(const FinitePoset& p, const Subset& s) { return is_lower_set(p, s) && is_directed(p, s); }

bool is_filter(const FinitePoset& p, const Subset& s) { return is_upper_set(p, s) && is_filtered(p, s); }

std::optional<ElementId> greatest(const FinitePoset& p, const Subset& s) {
  require_carrier(p, s);
  std::optional<ElementId> out;
  for_each_bit(s.mask(), [&](std::size_t g) {
    if ((s.mask() & ~p.down_mask(g)) == 0) out = elem(g);
  });
  return out;
}

void directed_subsets(const FinitePoset& p, std::size_t cap,
                      const std::function<bool(const Subset&)>& sink) {
  const std::size_t n = p.size();
  if (n > 24) throw Error(ErrorCode::CarrierTooLarge, "directed subset enumeration is limited to 24 elements");
  std::size_t emitted = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < limit; ++m) {
    const Subset s(n, m);
    if (!is_directed(p, s)) continue;
    if (!sink(s)) return;
    if (cap != 0 && ++emitted >= cap) return;
  }
}

std::vector<Subset> directed_subsets(const FinitePoset& p, std::size_t cap) {
  std::vector<Subset> out;
  directed_subsets(p, cap, [&](const Subset& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

PrimeSets primes_coprimes(const FinitePoset& p) {
  const auto flags = structure_flags(p);
  if (!flags.is_complete_lattice) throw Error(ErrorCode::NotALattice, "primes need a lattice with top and bottom");
  const std::size_t n = p.size();
  auto primes_of = [n](const FinitePoset& q, std::size_t top) {
    Subset out(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (x == top || is_filter(q, q.down(x).complement())) out.insert(x);
    }
    return out;
  };
  const auto dual = p.dual();
  return PrimeSets{primes_of(p, idx(*flags.top)), primes_of(dual, idx(*flags.bottom))};
}

namespace {

// Elements ordered so that every element comes after all elements strictly
// above it (descending down-set size is such an order).
std::vector<std::size_t> top_down_order(const FinitePoset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down(a).count() > p.down(b).count();
  });
  return order;
}

void enumerate_upper(const FinitePoset& p, const std::vector<std::size_t>& order, std::size_t pos,
                     std::uint64_t current, std::size_t limit, std::vector<Subset>& out) {
  if (pos == order.size()) {
    if (out.size() >= limit) {
      throw Error(ErrorCode::CarrierTooLarge, "more than " + std::to_string(limit) + " upper sets");
    }
    out.emplace_back(p.size(), current);
    return;
  }
  const std::size_t x = order[pos];
  enumerate_upper(p, order, pos + 1, current, limit, out);
  const std::uint64_t strict_up = p.up_mask(x) & ~(std::uint64_t{1} << x);
  if ((strict_up & ~current) == 0) {
    enumerate_upper(p, order, pos + 1, current | (std::uint64_t{1} << x), limit, out);
  }
}

}  // namespace

std::vector<Subset> upper_sets(const FinitePoset& p, std::size_t limit) {
  std::vector<Subset> out;
  enumerate_upper(p, top_down_order(p), 0, 0, limit, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Subset> lower_sets(const FinitePoset& p, std::size_t limit) {
  return upper_sets(p.dual(), limit);
}

}  // namespace scd
