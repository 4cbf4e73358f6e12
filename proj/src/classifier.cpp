#include "scd/classifier.hpp"

#include <algorithm>
#include <functional>

namespace scd {

PosetAnalysis::PosetAnalysis(FinitePoset p)
    : poset(std::move(p)),
      flags(structure_flags(poset)),
      upper(generate_topology(poset, TopologyKind::upper)),
      scott(generate_topology(poset, TopologyKind::scott)),
      strong_scott(generate_topology(poset, TopologyKind::strongScott)),
      lower(generate_topology(poset, TopologyKind::lower)),
      strong_lawson(join_topologies(strong_scott, lower, TopologyKind::strongLawson)),
      strongly_open(strongly_scott_open_sets(poset)),
      way_below(aux_relation(poset, RelationKind::wayBelow)),
      strong_way_below(aux_relation(poset, RelationKind::strongWayBelow)),
      prec(aux_relation(poset, RelationKind::prec)) {}

bool slice_approximates(const FinitePoset& p, const RelationMatrix& r, std::size_t x) {
  const auto slice = r.below(x);
  return is_directed(p, slice) && bounds(p, slice).sup == elem(x);
}

namespace {

// First element failing `pred`, as a witness string; empty if none fails.
std::string first_failure(const FinitePoset& p, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!pred(x)) return p.names()[x];
  }
  return {};
}

ClassVerdict two_routes(const std::string& what, const char* tag_a, const std::string& witness_a, const char* tag_b,
                        bool value_b) {
  const bool value_a = witness_a.empty();
  if (value_a != value_b) {
    throw Error(ErrorCode::InternalInconsistency,
                what + ": route " + tag_a + " says " + (value_a ? "true" : "false") + ", route " + tag_b + " says " +
                    (value_b ? "true" : "false"));
  }
  return ClassVerdict{value_a, {tag_a, tag_b}, witness_a};
}

bool every_element_is_sup_of(const FinitePoset& p, const Subset& generators) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (bounds(p, generators & p.down(x)).sup != elem(x)) return false;
  }
  return true;
}

}  // namespace

bool lattice_is_continuous(const FinitePoset& lattice) {
  const auto wb = aux_relation(lattice, RelationKind::wayBelow);
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (!slice_approximates(lattice, wb, x)) return false;
  }
  return true;
}

bool cd_by_distributivity(const FinitePoset& lattice) {
  const auto f = structure_flags(lattice);
  if (!f.is_complete_lattice) throw Error(ErrorCode::NotACompleteLattice, "distributivity check");
  return f.is_lattice_distributive;
}

bool cd_by_coprimes(const FinitePoset& lattice) {
  const auto primes = primes_coprimes(lattice);
  return lattice_is_continuous(lattice) && every_element_is_sup_of(lattice, primes.coprime);
}

ClassificationReport classify(const FinitePoset& p) { return classify(PosetAnalysis(p)); }

ClassificationReport classify(const PosetAnalysis& a) {
  const auto& p = a.poset;
  if (p.size() == 0) throw Error(ErrorCode::BadArity, "empty poset");
  ClassificationReport rep;
  rep.continuous = two_routes(
      "continuous", "way-below-slices",
      first_failure(p, [&](std::size_t x) { return slice_approximates(p, a.way_below, x); }), "c-space-scott",
      space_property(a.scott, SpaceProperty::cSpace));
  rep.hypercontinuous = two_routes(
      "hypercontinuous", "prec-slices",
      first_failure(p, [&](std::size_t x) { return slice_approximates(p, a.prec, x); }), "c-space-upper",
      space_property(a.upper, SpaceProperty::cSpace));
  rep.strongly_continuous = two_routes(
      "strongly continuous", "strong-slices",
      first_failure(p,
                    [&](std::size_t x) {
                      return slice_approximates(p, a.strong_way_below, x) &&
                             a.strong_scott.is_open(a.strong_way_below.above(x));
                    }),
      "c-space-strong-scott", space_property(a.strong_scott, SpaceProperty::cSpace));

  if (a.flags.is_complete_lattice) {
    if (p.size() <= 12) {
      const auto tri = aux_relation(p, RelationKind::triangle);
      ClassVerdict pc;
      pc.witness = first_failure(p, [&](std::size_t x) { return bounds(p, tri.below(x)).sup == elem(x); });
      pc.value = pc.witness.empty();
      pc.routes = {"triangle-slices"};
      rep.prime_continuous = pc;
    }
    const bool by_coprimes = cd_by_coprimes(p);
    ClassVerdict cd = two_routes("completely distributive", "triple-law",
                                 cd_by_distributivity(p) ? std::string{} : std::string{"triple law"},
                                 "continuous-and-coprimes", by_coprimes);
    rep.completely_distributive = cd;
  }
  return rep;
}

bool is_coprime_open(const FiniteTopology& t, const Subset& u) {
  if (u.empty()) return true;  // bottom of the lattice
  std::vector<std::uint64_t> missing;  // opens V with U not inside V
  for (const auto& v : t.opens()) {
    if (!u.is_subset_of(v)) missing.push_back(v.mask());
  }
  for (auto v : missing) {
    for (auto w : missing) {
      if ((u.mask() & ~(v | w)) == 0) return false;
    }
  }
  return true;
}

bool is_prime_open(const FiniteTopology& t, const Subset& u) {
  if (u.is_full()) return true;  // top of the lattice
  std::vector<std::uint64_t> outside;  // opens V not below U
  for (const auto& v : t.opens()) {
    if (!v.is_subset_of(u)) outside.push_back(v.mask());
  }
  for (auto v : outside) {
    for (auto w : outside) {
      if (((v & w) & ~u.mask()) == 0) return false;
    }
  }
  return true;
}

bool TheoremEntry::passed() const {
  if (!applicable) return true;
  if (conditions.empty()) return true;
  if (mode == Mode::assertion) {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.second; });
  }
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const auto& c) { return c.second == conditions.front().second; });
}

bool TheoremReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.passed(); });
}

const TheoremEntry* TheoremReport::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

using Mode = TheoremEntry::Mode;

// Continuity of a finite family of sets closed under union and intersection,
// ordered by inclusion (or reverse inclusion when `reversed`). Way-below is
// evaluated with the greatest-element reduction: U << V iff U <= W for every
// member W >= V.
bool family_is_continuous(const std::vector<Subset>& family, bool reversed) {
  auto le = [reversed](const Subset& a, const Subset& b) { return reversed ? b.is_subset_of(a) : a.is_subset_of(b); };
  for (const auto& v : family) {
    std::vector<const Subset*> slice;
    for (const auto& u : family) {
      bool wb = true;
      for (const auto& w : family) {
        if (le(v, w) && !le(u, w)) {
          wb = false;
          break;
        }
      }
      if (wb) slice.push_back(&u);
    }
    if (slice.empty()) return false;
    for (auto* s1 : slice) {
      for (auto* s2 : slice) {
        const bool bounded =
            std::any_of(slice.begin(), slice.end(), [&](const Subset* s3) { return le(*s1, *s3) && le(*s2, *s3); });
        if (!bounded) return false;
      }
    }
    // v must be the least upper bound of the slice.
    for (const auto& w : family) {
      const bool is_ub = std::all_of(slice.begin(), slice.end(), [&](const Subset* s) { return le(*s, w); });
      if (is_ub && !le(v, w)) return false;
    }
    if (!std::all_of(slice.begin(), slice.end(), [&](const Subset* s) { return le(*s, v); })) return false;
  }
  return true;
}

bool union_of_members_inside(const Subset& u, const std::vector<Subset>& members) {
  std::uint64_t acc = 0;
  for (const auto& m : members) {
    if (m.is_subset_of(u)) acc |= m.mask();
  }
  return acc == u.mask();
}

std::optional<ElementId> sup_of_infs(const FinitePoset& p, const FiniteTopology& t, std::size_t x) {
  Subset infs(p.size());
  for (const auto& u : t.opens()) {
    if (!u.contains(x)) continue;
    auto inf = bounds(p, u).inf;
    if (!inf) return std::nullopt;
    infs.insert(idx(*inf));
  }
  return bounds(p, infs).sup;
}

std::string disagreement(const TheoremEntry& e) {
  std::string out;
  for (const auto& [name, value] : e.conditions) {
    if (!out.empty()) out += ", ";
    out += name + "=" + (value ? "true" : "false");
  }
  return out;
}

bool all_x(const FinitePoset& p, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!pred(x)) return false;
  }
  return true;
}

// Subsets to sweep for statements quantified over all X inside L.
std::vector<Subset> sweep_subsets(std::size_t n) {
  std::vector<Subset> out;
  if (n <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
    return out;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < 1024; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    out.emplace_back(n, (state >> 7) & full_mask(n));
  }
  return out;
}

}  // namespace

TheoremReport verify_theorems(const FinitePoset& p) { return verify_theorems(PosetAnalysis(p)); }

TheoremReport verify_theorems(const PosetAnalysis& a) {
  const auto& p = a.poset;
  const std::size_t n = p.size();
  const auto& sw = a.strong_way_below;
  const auto& ss = a.strong_scott;
  TheoremReport rep;
  auto add = [&](TheoremEntry e) {
    if (!e.passed()) e.counterexample = disagreement(e);
    rep.entries.push_back(std::move(e));
  };
  auto not_applicable = [&](std::string id, Mode mode) {
    TheoremEntry e{std::move(id), mode, false, {}, {}};
    rep.entries.push_back(std::move(e));
  };

  const bool cont_def = all_x(p, [&](std::size_t x) { return slice_approximates(p, a.way_below, x); });
  const bool hyper_def = all_x(p, [&](std::size_t x) { return slice_approximates(p, a.prec, x); });
  const bool sc = space_property(ss, SpaceProperty::cSpace);
  const bool up_slices_open = all_x(p, [&](std::size_t x) { return ss.is_open(sw.above(x)); });
  const bool sc_slices =
      all_x(p, [&](std::size_t x) { return slice_approximates(p, sw, x); }) && up_slices_open;
  const bool semilattice = a.flags.is_complete_semilattice;

  add({"scott-c-space", Mode::equivalence, true,
       {{"continuous", cont_def}, {"scott c-space", space_property(a.scott, SpaceProperty::cSpace)}}, {}});
  add({"upper-c-space", Mode::equivalence, true,
       {{"hypercontinuous", hyper_def}, {"upper c-space", space_property(a.upper, SpaceProperty::cSpace)}}, {}});

  {
    bool base_inside = std::all_of(a.upper.opens().begin(), a.upper.opens().end(), [&](const Subset& u) {
      return std::find(a.strongly_open.begin(), a.strongly_open.end(), u) != a.strongly_open.end();
    });
    bool strong_inside = std::all_of(a.strongly_open.begin(), a.strongly_open.end(),
                                     [&](const Subset& u) { return ss.is_open(u); });
    add({"topology-inclusions", Mode::assertion, true,
         {{"upper in strongly-open", base_inside},
          {"strongly-open in strong-scott", strong_inside},
          {"strong-scott in scott", ss.coarser_than(a.scott)}},
         {}});
  }

  {
    const auto ax = relation_axioms(p, sw);
    const bool sup_clause = !a.flags.is_sup_semilattice || sw.same_pairs(a.way_below);
    add({"strong-way-below-axioms", Mode::assertion, true,
         {{"strong within way-below", ax.contained_in_way_below},
          {"order compatible", ax.order_compatible},
          {"join stable", ax.join_stable},
          {"bottom rule", ax.bottom_rule},
          {"sup semilattice: strong = way-below", sup_clause}},
         {}});
  }

  {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      const auto slice = sw.below(x);
      bool premise = false;
      // Directed D inside the slice with sup D = x.
      for (std::uint64_t m = slice.mask(); m != 0 && !premise; m = (m - 1) & slice.mask()) {
        const Subset d(n, m);
        premise = is_directed(p, d) && bounds(p, d).sup == elem(x);
      }
      if (premise) ok = is_directed(p, slice) && bounds(p, slice).sup == elem(x);
    }
    add({"directed-approximant", Mode::assertion, true, {{"directed approximant forces approximating slice", ok}}, {}});
  }

  add({"strong-continuity-slices", Mode::equivalence, true, {{"strongly continuous", sc}, {"strong slices", sc_slices}}, {}});

  if (sc) {
    bool ok = true;
    std::vector<Subset> directed = n <= 10 ? directed_subsets(p) : std::vector<Subset>{};
    if (directed.empty()) {
      for (std::size_t g = 0; g < n; ++g) directed.push_back(p.down(g));
    }
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t z = 0; z < n && ok; ++z) {
        if (!sw.holds(x, z)) continue;
        for (const auto& d : directed) {
          const auto s = bounds(p, d).sup;
          if (!s || !p.leq(z, idx(*s))) continue;
          bool hit = false;
          for (auto e : d.elements()) hit = hit || sw.holds(x, e);
          if (!hit) {
            ok = false;
            break;
          }
        }
      }
    }
    add({"strong-approximant-entry", Mode::assertion, true, {{"strong approximant enters directed set", ok}}, {}});
    bool interp = true;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!sw.holds(x, y)) continue;
        bool found = false;
        for (std::size_t z = 0; z < n && !found; ++z) found = sw.holds(x, z) && sw.holds(z, y);
        interp = interp && found;
      }
    }
    add({"interpolation", Mode::assertion, true, {{"interpolation", interp}}, {}});
  } else {
    not_applicable("strong-approximant-entry", Mode::assertion);
    not_applicable("interpolation", Mode::assertion);
  }

  add({"hyper-vs-continuous", Mode::equivalence, true,
       {{"hypercontinuous", hyper_def},
        {"continuous and way-below = prec", cont_def && a.way_below.same_pairs(a.prec)},
        {"continuous and upper = scott", cont_def && a.upper.same_opens(a.scott)}},
       {}});

  add({"hyper-vs-strong", Mode::equivalence, true,
       {{"hypercontinuous", hyper_def},
        {"strongly continuous and strong = prec", sc && sw.same_pairs(a.prec)},
        {"strongly continuous and upper = strong-scott", sc && a.upper.same_opens(ss)}},
       {}});

  add({"strong-vs-continuous", Mode::equivalence, true,
       {{"strongly continuous", sc},
        {"continuous, strong = way-below, up-slices open", cont_def && sw.same_pairs(a.way_below) && up_slices_open},
        {"continuous and strong-scott = scott", cont_def && ss.same_opens(a.scott)}},
       {}});

  {
    bool closures = all_x(p, [&](std::size_t x) { return closure(ss, Subset::singleton(n, x)) == p.down(x); });
    bool upper_is_intersection = true;
    for (const auto& up_set : upper_sets(p)) {
      std::uint64_t meet_all = full_mask(n);
      for (const auto& u : ss.opens()) {
        if (up_set.is_subset_of(u)) meet_all &= u.mask();
      }
      upper_is_intersection = upper_is_intersection && meet_all == up_set.mask();
    }
    add({"strong-scott-basics", Mode::assertion, true,
         {{"point closures are principal down-sets", closures},
          {"T0", space_property(ss, SpaceProperty::T0)},
          {"upper sets are intersections of opens", upper_is_intersection}},
         {}});
  }

  {
    bool forward = true;
    bool backward = true;
    for (std::size_t x = 0; x < n; ++x) {
      const auto inside = interior(ss, p.up(x));
      for (std::size_t y = 0; y < n; ++y) {
        if (inside.contains(y) && !sw.holds(x, y)) forward = false;
        if (sw.holds(x, y) && !inside.contains(y)) backward = false;
      }
    }
    add({"interior-vs-strong-way-below", Mode::assertion, true,
         {{"interior implies strong way-below", forward}, {"strongly continuous: converse", !sc || backward}},
         {}});
  }

  if (sc) {
    bool c1 = true;
    for (const auto& u : upper_sets(p)) {
      bool covered = true;
      for (auto x : u.elements()) {
        bool found = false;
        for (auto w : u.elements()) found = found || sw.holds(w, x);
        covered = covered && found;
      }
      c1 = c1 && (ss.is_open(u) == covered);
    }
    std::vector<Subset> up_slices;
    for (std::size_t x = 0; x < n; ++x) up_slices.push_back(sw.above(x));
    bool c2 = std::all_of(up_slices.begin(), up_slices.end(), [&](const Subset& s) { return ss.is_open(s); }) &&
              std::all_of(ss.opens().begin(), ss.opens().end(),
                          [&](const Subset& u) { return union_of_members_inside(u, up_slices); });
    bool c3 = all_x(p, [&](std::size_t x) { return interior(ss, p.up(x)) == sw.above(x); });
    bool c4 = true;
    for (const auto& xs : sweep_subsets(n)) {
      std::uint64_t acc = 0;
      for (const auto& s : up_slices) {
        if (s.is_subset_of(xs)) acc |= s.mask();
      }
      c4 = c4 && interior(ss, xs).mask() == acc;
    }
    add({"strong-scott-basis", Mode::assertion, true,
         {{"open iff covered by up-slices", c1},
          {"up-slices form a basis", c2},
          {"interior of up(x) is the up-slice", c3},
          {"interior formula", c4}},
         {}});
  } else {
    not_applicable("strong-scott-basis", Mode::assertion);
  }

  {
    bool c1 = true;
    for (const auto& u : ss.opens()) {
      // The empty open is co-prime as the lattice bottom but is not a filter.
      if (u.empty()) continue;
      c1 = c1 && (is_coprime_open(ss, u) == is_filter(p, u));
    }
    bool c2a = all_x(p, [&](std::size_t x) { return is_prime_open(ss, p.down(x).complement()); });
    bool c2b = true;
    if (sc) {
      for (const auto& u : ss.opens()) {
        if (u.is_full() || !is_prime_open(ss, u)) continue;
        c2b = c2b && !all_x(p, [&](std::size_t x) { return u != p.down(x).complement(); });
      }
    }
    add({"prime-and-coprime-opens", Mode::assertion, true,
         {{"co-prime opens are the open filters", c1},
          {"complements of principal down-sets are prime", c2a},
          {"strongly continuous: every other prime is one", c2b}},
         {}});
  }

  const bool sober = space_property(ss, SpaceProperty::sober);
  add({"sobriety", Mode::assertion, true, {{"strongly continuous implies sober", !sc || sober}}, {}});
  add({"local-compactness", Mode::assertion, true,
       {{"locally compact sober", !sc || (sober && space_property(ss, SpaceProperty::locallyCompact))},
        {"compact with bottom", !sc || !a.flags.bottom || space_property(ss, SpaceProperty::compact)}},
       {}});

  {
    const auto& opens = ss.opens();
    std::vector<Subset> filters;
    std::vector<Subset> coprimes;
    for (const auto& u : opens) {
      if (is_filter(p, u)) filters.push_back(u);
      if (is_coprime_open(ss, u)) coprimes.push_back(u);
    }
    const bool cont_lattice = family_is_continuous(opens, false);
    const bool c2 = up_slices_open && std::all_of(opens.begin(), opens.end(), [&](const Subset& u) {
                      std::uint64_t acc = 0;
                      for (auto x : u.elements()) acc |= sw.above(x).mask();
                      return acc == u.mask();
                    });
    const bool c3 = cont_lattice && std::all_of(opens.begin(), opens.end(), [&](const Subset& u) {
                      return union_of_members_inside(u, filters);
                    });
    const bool c4 = cont_lattice && std::all_of(opens.begin(), opens.end(), [&](const Subset& u) {
                      return union_of_members_inside(u, coprimes);
                    });
    bool c5 = false;
    if (opens.size() <= kMaxCarrier) {
      c5 = cd_by_distributivity(open_set_lattice(ss));
    } else {
      // A family of sets closed under union and intersection is a
      // distributive lattice under those operations; finite, hence CD.
      c5 = std::all_of(opens.begin(), opens.end(), [&](const Subset& u) {
        return std::all_of(opens.begin(), opens.end(),
                           [&](const Subset& v) { return ss.is_open(u | v) && ss.is_open(u & v); });
      });
    }
    const bool c6 = cont_lattice && family_is_continuous(opens, true);
    TheoremEntry e{"open-set-lattice",
                   Mode::equivalence,
                   true,
                   {{"strongly continuous", sc},
                    {"up-slices open and generate", c2},
                    {"open filters form a basis, continuous lattice", c3},
                    {"enough co-primes, continuous lattice", c4},
                    {"completely distributive", c5},
                    {"lattice and dual continuous", c6}},
                   {}};
    if (semilattice) {
      const bool c7 = up_slices_open && all_x(p, [&](std::size_t x) { return sup_of_infs(p, ss, x) == elem(x); });
      e.conditions.emplace_back("points are sups of infs of neighborhoods", c7);
    }
    add(std::move(e));
  }

  if (semilattice) {
    add({"hyper-via-infima", Mode::equivalence, true,
         {{"hypercontinuous", hyper_def},
          {"points are sups of infs of upper-topology neighborhoods",
           all_x(p, [&](std::size_t x) { return sup_of_infs(p, a.upper, x) == elem(x); })}},
         {}});
    add({"strong-lawson-compact-t1", Mode::assertion, true,
         {{"strong lawson compact", space_property(a.strong_lawson, SpaceProperty::compact)},
          {"strong lawson T1", space_property(a.strong_lawson, SpaceProperty::T1)}},
         {}});
  } else {
    not_applicable("hyper-via-infima", Mode::equivalence);
    not_applicable("strong-lawson-compact-t1", Mode::assertion);
  }

  const bool t2 = space_property(a.strong_lawson, SpaceProperty::T2);
  add({"strong-lawson-hausdorff", Mode::assertion, true, {{"strongly continuous implies strong lawson T2", !sc || t2}}, {}});
  if (semilattice) {
    add({"strong-lawson-compact-hausdorff", Mode::assertion, true,
         {{"compact and Hausdorff", !sc || (t2 && space_property(a.strong_lawson, SpaceProperty::compact))}},
         {}});
  } else {
    not_applicable("strong-lawson-compact-hausdorff", Mode::assertion);
  }
  return rep;
}

std::vector<BridgeEntry> c_space_bridge(const FinitePoset& p) {
  std::vector<BridgeEntry> out;
  for (auto kind : {TopologyKind::upper, TopologyKind::scott, TopologyKind::strongScott, TopologyKind::lower,
                    TopologyKind::lawson, TopologyKind::strongLawson}) {
    const auto t = generate_topology(p, kind);
    const auto lattice = open_set_lattice(t);
    out.push_back(BridgeEntry{kind, space_property(t, SpaceProperty::cSpace), cd_by_distributivity(lattice),
                              cd_by_coprimes(lattice)});
  }
  return out;
}

}  // namespace scd
