#include "scd/relations.hpp"

namespace scd {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::leq: return "leq";
    case RelationKind::wayBelow: return "way-below";
    case RelationKind::strongWayBelow: return "strong-way-below";
    case RelationKind::prec: return "prec";
    case RelationKind::triangle: return "triangle";
    case RelationKind::wayBelowLocal: return "way-below-local";
  }
  return "?";
}

std::optional<RelationKind> parse_relation_kind(std::string_view token) {
  for (auto k : {RelationKind::leq, RelationKind::wayBelow, RelationKind::strongWayBelow, RelationKind::prec,
                 RelationKind::triangle, RelationKind::wayBelowLocal}) {
    if (to_string(k) == token) return k;
  }
  return std::nullopt;
}

RelationMatrix::RelationMatrix(std::size_t carrier, RelationKind kind) : kind_(kind), rows_(carrier, 0) {
  if (carrier > kMaxCarrier) throw Error(ErrorCode::CarrierTooLarge, "relation carrier");
}

Subset RelationMatrix::below(std::size_t x) const {
  Subset out(carrier());
  for (std::size_t y = 0; y < carrier(); ++y) {
    if (holds(y, x)) out.insert(y);
  }
  return out;
}

bool RelationMatrix::contained_in(const RelationMatrix& other) const {
  if (other.carrier() != carrier()) throw Error(ErrorCode::CarrierMismatch, "relation carriers differ");
  for (std::size_t x = 0; x < carrier(); ++x) {
    if ((rows_[x] & ~other.rows_[x]) != 0) return false;
  }
  return true;
}

Subset upper_topology_interior(const FinitePoset& p, const Subset& a) {
  const std::size_t n = p.size();
  Subset out(n);
  for (std::size_t y = 0; y < n; ++y) {
    // Largest admissible F = {f : y not<= f}; larger F gives a smaller basic
    // open L \ down(F), still containing y.
    std::uint64_t down_f = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (!p.leq(y, f)) down_f |= p.down_mask(f);
    }
    const std::uint64_t basic = full_mask(n) & ~down_f;
    if ((basic & ~a.mask()) == 0) out.insert(y);
  }
  return out;
}

namespace {

// Does the directed set `d` (with its intersection of up-sets `all_up`)
// satisfy the strong way-below obligation for (x, y)?
bool strong_obligation(const FinitePoset& p, std::uint64_t d, std::uint64_t all_up, std::size_t x,
                       std::size_t y) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    if ((all_up & p.up_mask(a) & ~p.up_mask(y)) != 0) continue;
    bool witnessed = false;
    for_each_bit(d, [&](std::size_t e) {
      if ((p.up_mask(e) & p.up_mask(a) & ~p.up_mask(x)) == 0) witnessed = true;
    });
    if (!witnessed) return false;
  }
  return true;
}

// Sup of `d` computed inside the sub-poset down(z).
std::optional<std::size_t> local_sup(const FinitePoset& p, std::uint64_t d, std::size_t z) {
  std::uint64_t ub = p.down_mask(z);
  for_each_bit(d, [&](std::size_t e) { ub &= p.up_mask(e); });
  std::optional<std::size_t> out;
  for_each_bit(ub, [&](std::size_t u) {
    if ((ub & ~p.up_mask(u)) == 0) out = u;
  });
  return out;
}

bool way_below_obligation(const FinitePoset& p, std::uint64_t d, std::size_t x, std::size_t y) {
  const auto b = bounds(p, Subset(p.size(), d));
  if (!b.sup || !p.leq(y, idx(*b.sup))) return true;
  return (p.up_mask(x) & d) != 0;
}

bool local_obligation(const FinitePoset& p, std::uint64_t d, std::size_t x, std::size_t y) {
  std::uint64_t ub = full_mask(p.size());
  for_each_bit(d, [&](std::size_t e) { ub &= p.up_mask(e); });
  bool ok = true;
  for_each_bit(ub, [&](std::size_t z) {
    const auto s = local_sup(p, d, z);
    if (s && p.leq(y, *s) && (p.up_mask(x) & d) == 0) ok = false;
  });
  return ok;
}

RelationMatrix triangle_relation(const FinitePoset& p) {
  const auto flags = structure_flags(p);
  if (!flags.is_complete_lattice) throw Error(ErrorCode::NotACompleteLattice, "triangle needs a complete lattice");
  if (p.size() > 12) throw Error(ErrorCode::CarrierTooLarge, "triangle is limited to 12 elements");
  const std::size_t n = p.size();
  // Only down(S) matters in "y <= sup S implies x in down(S)".
  std::vector<std::uint64_t> forced(n, full_mask(n));
  for (const auto& s : lower_sets(p)) {
    const auto sup = bounds(p, s).sup;
    for (std::size_t y = 0; y < n; ++y) {
      if (p.leq(y, idx(*sup))) forced[y] &= s.mask();
    }
  }
  RelationMatrix r(n, RelationKind::triangle);
  for (std::size_t y = 0; y < n; ++y) {
    for_each_bit(forced[y], [&](std::size_t x) { r.set(x, y); });
  }
  return r;
}

}  // namespace

RelationMatrix aux_relation(const FinitePoset& p, RelationKind kind) {
  const std::size_t n = p.size();
  if (kind == RelationKind::triangle) return triangle_relation(p);
  RelationMatrix r(n, kind);
  if (kind == RelationKind::prec) {
    for (std::size_t x = 0; x < n; ++x) {
      for (auto y : upper_topology_interior(p, p.up(x)).elements()) r.set(x, y);
    }
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) {
        const std::uint64_t ideal = p.down_mask(g);
        switch (kind) {
          case RelationKind::leq:
            ok = p.leq(x, y);
            break;
          case RelationKind::wayBelow:
            ok = way_below_obligation(p, ideal, x, y);
            break;
          case RelationKind::strongWayBelow:
            // Intersection of up(d) over down(g) is up(g).
            ok = strong_obligation(p, ideal, p.up_mask(g), x, y);
            break;
          case RelationKind::wayBelowLocal:
            ok = local_obligation(p, ideal, x, y);
            break;
          default:
            break;
        }
      }
      if (ok) r.set(x, y);
    }
  }
  return r;
}

RelationMatrix aux_relation_bruteforce(const FinitePoset& p, RelationKind kind) {
  if (kind != RelationKind::wayBelow && kind != RelationKind::strongWayBelow &&
      kind != RelationKind::wayBelowLocal) {
    throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " has no directed-set definition");
  }
  const std::size_t n = p.size();
  const auto directed = directed_subsets(p);
  RelationMatrix r(n, kind);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool ok = true;
      for (const auto& d : directed) {
        if (kind == RelationKind::wayBelow) {
          ok = way_below_obligation(p, d.mask(), x, y);
        } else if (kind == RelationKind::strongWayBelow) {
          std::uint64_t all_up = full_mask(n);
          for_each_bit(d.mask(), [&](std::size_t e) { all_up &= p.up_mask(e); });
          ok = strong_obligation(p, d.mask(), all_up, x, y);
        } else {
          ok = local_obligation(p, d.mask(), x, y);
        }
        if (!ok) break;
      }
      if (ok) r.set(x, y);
    }
  }
  return r;
}

SliceSets slice_sets(const FinitePoset& p, const RelationMatrix& r, ElementId x) {
  if (r.carrier() != p.size()) throw Error(ErrorCode::CarrierMismatch, "relation carrier");
  if (idx(x) >= p.size()) throw Error(ErrorCode::CarrierMismatch, "element outside carrier");
  return SliceSets{r.below(idx(x)), r.above(idx(x))};
}

AxiomReport relation_axioms(const FinitePoset& p, const RelationMatrix& r) {
  if (r.kind() != RelationKind::wayBelow && r.kind() != RelationKind::strongWayBelow) {
    throw Error(ErrorCode::UnsupportedKind, std::string(to_string(r.kind())));
  }
  if (r.carrier() != p.size()) throw Error(ErrorCode::CarrierMismatch, "relation carrier");
  const std::size_t n = p.size();
  constexpr std::size_t kMaxReported = 8;
  AxiomReport rep;
  auto record = [&](bool& flag, const char* clause, std::vector<ElementId> es) {
    flag = false;
    if (rep.counterexamples.size() < kMaxReported) rep.counterexamples.push_back({clause, std::move(es)});
  };

  const auto wb = aux_relation(p, RelationKind::wayBelow);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.holds(x, y)) continue;
      if (!p.leq(x, y)) record(rep.contained_in_leq, "r within <=", {elem(x), elem(y)});
      if (!wb.holds(x, y)) record(rep.contained_in_way_below, "r within way-below", {elem(x), elem(y)});
      for_each_bit(p.down_mask(x), [&](std::size_t u) {
        for_each_bit(p.up_mask(y), [&](std::size_t z) {
          if (!r.holds(u, z)) record(rep.order_compatible, "order compatibility", {elem(u), elem(x), elem(y), elem(z)});
        });
      });
      bool interpolated = false;
      for (std::size_t z = 0; z < n && !interpolated; ++z) interpolated = r.holds(x, z) && r.holds(z, y);
      if (!interpolated) record(rep.interpolation, "interpolation", {elem(x), elem(y)});
    }
  }
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!r.holds(x, z) || !r.holds(y, z)) continue;
        if (auto j = join(p, x, y); j && !r.holds(idx(*j), z)) {
          record(rep.join_stable, "join stability", {elem(x), elem(y), elem(z)});
        }
      }
    }
  }
  if (auto bottom = bounds(p, p.full_set()).inf) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!r.holds(idx(*bottom), x)) record(rep.bottom_rule, "bottom rule", {*bottom, elem(x)});
    }
  }
  return rep;
}

}  // namespace scd
