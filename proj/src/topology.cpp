#include "scd/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace scd {

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::upper: return "upper";
    case TopologyKind::scott: return "scott";
    case TopologyKind::strongScott: return "strong-scott";
    case TopologyKind::lower: return "lower";
    case TopologyKind::lawson: return "lawson";
    case TopologyKind::strongLawson: return "strong-lawson";
    case TopologyKind::custom: return "custom";
  }
  return "custom";
}

std::optional<TopologyKind> parse_topology_kind(std::string_view token) {
  for (auto k : {TopologyKind::upper, TopologyKind::scott, TopologyKind::strongScott, TopologyKind::lower,
                 TopologyKind::lawson, TopologyKind::strongLawson, TopologyKind::custom}) {
    if (to_string(k) == token) return k;
  }
  return std::nullopt;
}

std::string_view to_string(SpaceProperty prop) {
  switch (prop) {
    case SpaceProperty::T0: return "T0";
    case SpaceProperty::T1: return "T1";
    case SpaceProperty::T2: return "T2";
    case SpaceProperty::sober: return "sober";
    case SpaceProperty::compact: return "compact";
    case SpaceProperty::locallyCompact: return "locally-compact";
    case SpaceProperty::cSpace: return "c-space";
  }
  return "?";
}

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.size() == n) return names;
  names.clear();
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<Subset> to_sorted_family(std::size_t carrier, const std::unordered_set<std::uint64_t>& masks) {
  std::vector<Subset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(carrier, m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::unordered_set<std::uint64_t> union_closure(const std::vector<std::uint64_t>& base, std::size_t limit) {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> work{0};
  while (!work.empty()) {
    const auto cur = work.back();
    work.pop_back();
    for (auto b : base) {
      const auto next = cur | b;
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::CarrierTooLarge, "topology exceeds " + std::to_string(limit) + " opens");
        }
        work.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

FiniteTopology::FiniteTopology(std::size_t carrier, std::vector<Subset> opens, TopologyKind kind,
                               std::vector<std::string> names)
    : carrier_(carrier), opens_(std::move(opens)), kind_(kind), names_(default_names(carrier, std::move(names))) {
  for (const auto& o : opens_) {
    if (o.carrier() != carrier_) throw Error(ErrorCode::CarrierMismatch, "open set carrier");
  }
  std::sort(opens_.begin(), opens_.end(), canonical_less);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (!is_open(Subset::empty_of(carrier_)) || !is_open(Subset::full_of(carrier_))) {
    throw Error(ErrorCode::NotATopology, "empty set and carrier must be open");
  }
  for (const auto& a : opens_) {
    for (const auto& b : opens_) {
      if (!is_open(a | b) || !is_open(a & b)) {
        throw Error(ErrorCode::NotATopology, "family is not closed under union and intersection");
      }
    }
  }
  finish();
}

void FiniteTopology::finish() {
  min_nbhd_.assign(carrier_, full_mask(carrier_));
  for (const auto& o : opens_) {
    for_each_bit(o.mask(), [&](std::size_t x) { min_nbhd_[x] &= o.mask(); });
  }
}

FiniteTopology FiniteTopology::generated_by_base(std::size_t carrier, const std::vector<Subset>& base,
                                                 TopologyKind kind, std::vector<std::string> names,
                                                 std::size_t limit) {
  std::vector<std::uint64_t> masks;
  for (const auto& b : base) {
    if (b.carrier() != carrier) throw Error(ErrorCode::CarrierMismatch, "base set carrier");
    masks.push_back(b.mask());
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  FiniteTopology t;
  t.carrier_ = carrier;
  t.kind_ = kind;
  t.names_ = default_names(carrier, std::move(names));
  auto closed = union_closure(masks, limit);
  // A base must cover the carrier; the carrier itself is always open.
  closed.insert(full_mask(carrier));
  t.opens_ = to_sorted_family(carrier, closed);
  t.finish();
  return t;
}

FiniteTopology FiniteTopology::generated_by_subbasis(std::size_t carrier, const std::vector<Subset>& subbasis,
                                                     TopologyKind kind, std::vector<std::string> names,
                                                     std::size_t limit) {
  std::vector<std::uint64_t> sub{full_mask(carrier)};
  for (const auto& s : subbasis) {
    if (s.carrier() != carrier) throw Error(ErrorCode::CarrierMismatch, "subbasis set carrier");
    sub.push_back(s.mask());
  }
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  // Finite intersections: intersecting with subbasis members suffices.
  std::unordered_set<std::uint64_t> base(sub.begin(), sub.end());
  std::vector<std::uint64_t> work(sub.begin(), sub.end());
  while (!work.empty()) {
    const auto cur = work.back();
    work.pop_back();
    for (auto s : sub) {
      if (base.insert(cur & s).second) {
        if (base.size() > limit) {
          throw Error(ErrorCode::CarrierTooLarge, "base exceeds " + std::to_string(limit) + " sets");
        }
        work.push_back(cur & s);
      }
    }
  }
  std::vector<Subset> base_sets;
  base_sets.reserve(base.size());
  for (auto m : base) base_sets.emplace_back(carrier, m);
  return generated_by_base(carrier, base_sets, kind, std::move(names), limit);
}

bool FiniteTopology::is_open(const Subset& s) const {
  if (s.carrier() != carrier_) throw Error(ErrorCode::CarrierMismatch, "subset carrier");
  return std::binary_search(opens_.begin(), opens_.end(), s, canonical_less);
}

bool FiniteTopology::coarser_than(const FiniteTopology& other) const {
  if (other.carrier_ != carrier_) throw Error(ErrorCode::CarrierMismatch, "topology carriers differ");
  return std::all_of(opens_.begin(), opens_.end(), [&](const Subset& o) { return other.is_open(o); });
}

FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b, TopologyKind kind) {
  if (a.carrier() != b.carrier()) throw Error(ErrorCode::CarrierMismatch, "topology carriers differ");
  std::vector<Subset> sub = a.opens();
  sub.insert(sub.end(), b.opens().begin(), b.opens().end());
  return FiniteTopology::generated_by_subbasis(a.carrier(), sub, kind, a.names());
}

std::vector<Subset> strongly_scott_open_sets(const FinitePoset& p) {
  // Condition (ii) for a finite directed D: the intersection of up(d) over D
  // is up(g) for the greatest element g of D, and g itself is the required d.
  // So every upper set qualifies.
  return upper_sets(p);
}

bool is_strong_scott_open_definitional(const FinitePoset& p, const Subset& u) {
  if (u.carrier() != p.size()) throw Error(ErrorCode::CarrierMismatch, "subset carrier");
  if (!is_upper_set(p, u)) return false;
  const std::size_t n = p.size();
  bool ok = true;
  directed_subsets(p, 0, [&](const Subset& d) {
    std::uint64_t all_up = full_mask(n);
    for_each_bit(d.mask(), [&](std::size_t e) { all_up &= p.up_mask(e); });
    for (std::size_t x = 0; x < n && ok; ++x) {
      if ((all_up & p.up_mask(x) & ~u.mask()) != 0) continue;
      bool witnessed = false;
      for_each_bit(d.mask(), [&](std::size_t e) {
        if ((p.up_mask(e) & p.up_mask(x) & ~u.mask()) == 0) witnessed = true;
      });
      ok = witnessed;
    }
    return ok;
  });
  return ok;
}

bool is_scott_open_definitional(const FinitePoset& p, const Subset& u) {
  if (u.carrier() != p.size()) throw Error(ErrorCode::CarrierMismatch, "subset carrier");
  if (!is_upper_set(p, u)) return false;
  bool ok = true;
  directed_subsets(p, 0, [&](const Subset& d) {
    const auto b = bounds(p, d);
    if (b.sup && u.contains(idx(*b.sup)) && !d.intersects(u)) ok = false;
    return ok;
  });
  return ok;
}

FiniteTopology generate_topology(const FinitePoset& p, TopologyKind kind) {
  const std::size_t n = p.size();
  switch (kind) {
    case TopologyKind::upper: {
      std::vector<Subset> sub;
      for (std::size_t x = 0; x < n; ++x) sub.push_back(p.down(x).complement());
      return FiniteTopology::generated_by_subbasis(n, sub, kind, p.names());
    }
    case TopologyKind::lower: {
      std::vector<Subset> sub;
      for (std::size_t x = 0; x < n; ++x) sub.push_back(p.up(x).complement());
      return FiniteTopology::generated_by_subbasis(n, sub, kind, p.names());
    }
    case TopologyKind::scott:
      // Finite: every directed set contains its sup, so Scott open = upper.
      return FiniteTopology::generated_by_base(n, upper_sets(p), kind, p.names());
    case TopologyKind::strongScott:
      return FiniteTopology::generated_by_base(n, strongly_scott_open_sets(p), kind, p.names());
    case TopologyKind::lawson:
      return join_topologies(generate_topology(p, TopologyKind::scott), generate_topology(p, TopologyKind::lower),
                             kind);
    case TopologyKind::strongLawson:
      return join_topologies(generate_topology(p, TopologyKind::strongScott),
                             generate_topology(p, TopologyKind::lower), kind);
    case TopologyKind::custom:
      break;
  }
  throw Error(ErrorCode::UnsupportedKind, "cannot generate a custom topology from a poset");
}

Subset interior(const FiniteTopology& t, const Subset& a) {
  if (a.carrier() != t.carrier()) throw Error(ErrorCode::CarrierMismatch, "subset carrier");
  std::uint64_t out = 0;
  for (const auto& o : t.opens()) {
    if ((o.mask() & ~a.mask()) == 0) out |= o.mask();
  }
  return Subset(t.carrier(), out);
}

Subset closure(const FiniteTopology& t, const Subset& a) { return interior(t, a.complement()).complement(); }

InteriorClosure interior_closure(const FiniteTopology& t, const Subset& a) {
  return InteriorClosure{interior(t, a), closure(t, a)};
}

FinitePoset specialization_order(const FiniteTopology& t) {
  const std::size_t n = t.carrier();
  std::vector<std::uint64_t> up(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (closure(t, Subset::singleton(n, y)).contains(x)) up[x] |= std::uint64_t{1} << y;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (((up[x] >> y) & 1U) && ((up[y] >> x) & 1U)) {
        throw Error(ErrorCode::NotT0, t.names()[x] + " and " + t.names()[y] + " are indistinguishable");
      }
    }
  }
  return FinitePoset::from_up_masks(t.names(), up);
}

bool is_irreducible(const FiniteTopology& t, const Subset& a) {
  if (a.empty()) return false;
  // Any open meeting A at p contains the minimal neighborhood of p, and those
  // neighborhoods are themselves open, so checking them is exhaustive.
  const auto pts = a.elements();
  for (auto p : pts) {
    for (auto q : pts) {
      if ((t.neighborhood(p) & t.neighborhood(q) & a).empty()) return false;
    }
  }
  return true;
}

namespace {

bool is_t0(const FiniteTopology& t) {
  const std::size_t n = t.carrier();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (t.neighborhood(x).contains(y) && t.neighborhood(y).contains(x)) return false;
    }
  }
  return true;
}

bool is_sober(const FiniteTopology& t) {
  const std::size_t n = t.carrier();
  std::vector<Subset> point_closures;
  for (std::size_t x = 0; x < n; ++x) point_closures.push_back(closure(t, Subset::singleton(n, x)));
  for (const auto& o : t.opens()) {
    const auto c = o.complement();
    if (!is_irreducible(t, c)) continue;
    const auto hits = std::count(point_closures.begin(), point_closures.end(), c);
    if (hits != 1) return false;
  }
  return true;
}

bool is_c_space(const FiniteTopology& t) {
  if (!is_t0(t)) return false;
  const auto spec = specialization_order(t);
  const std::size_t n = t.carrier();
  std::vector<Subset> up_int;
  for (std::size_t y = 0; y < n; ++y) up_int.push_back(interior(t, spec.up(y)));
  for (const auto& u : t.opens()) {
    for (auto x : u.elements()) {
      bool found = false;
      for (auto y : u.elements()) {
        if (up_int[y].contains(x) && spec.up(y).is_subset_of(u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool space_property(const FiniteTopology& t, SpaceProperty prop) {
  const std::size_t n = t.carrier();
  switch (prop) {
    case SpaceProperty::T0:
      return is_t0(t);
    case SpaceProperty::T1:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y && t.neighborhood(x).contains(y)) return false;
        }
      }
      return true;
    case SpaceProperty::T2:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (t.neighborhood(x).intersects(t.neighborhood(y))) return false;
        }
      }
      return true;
    case SpaceProperty::sober:
      return is_sober(t);
    case SpaceProperty::compact: {
      // Cover by all opens; pick one member per point and check it covers.
      std::uint64_t covered = 0;
      for (std::size_t x = 0; x < n; ++x) {
        for (const auto& o : t.opens()) {
          if (o.contains(x)) {
            covered |= o.mask();
            break;
          }
        }
      }
      return covered == full_mask(n);
    }
    case SpaceProperty::locallyCompact:
      // Neighborhood basis of compact sets; every finite set is compact, so
      // the minimal neighborhood serves for every open around x.
      for (const auto& o : t.opens()) {
        for (auto x : o.elements()) {
          if (!t.is_open(t.neighborhood(x)) || !t.neighborhood(x).is_subset_of(o)) return false;
        }
      }
      return true;
    case SpaceProperty::cSpace:
      return is_c_space(t);
  }
  return false;
}

std::string format_subset(const Subset& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ",";
    first = false;
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
  }
  return out + "}";
}

FinitePoset open_set_lattice(const FiniteTopology& t) {
  const auto& opens = t.opens();
  if (opens.size() > kMaxCarrier) {
    throw Error(ErrorCode::CarrierTooLarge,
                std::to_string(opens.size()) + " opens exceed " + std::to_string(kMaxCarrier));
  }
  std::vector<std::string> names;
  std::vector<std::uint64_t> up(opens.size(), 0);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    names.push_back(format_subset(opens[i], t.names()));
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (opens[i].is_subset_of(opens[j])) up[i] |= std::uint64_t{1} << j;
    }
  }
  return FinitePoset::from_up_masks(std::move(names), up);
}

}  // namespace scd
