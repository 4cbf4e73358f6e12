#include "scd/maps.hpp"

#include "scd/classifier.hpp"
#include "scd/error.hpp"
#include "scd/topology.hpp"

namespace scd {

void PosetMap::validate() const {
  if (table.size() != source.size()) throw Error(ErrorCode::BadArity, "map table does not cover the source");
  for (auto e : table) {
    if (idx(e) >= target.size()) throw Error(ErrorCode::BadArity, "map image outside the target");
  }
}

Subset preimage(const PosetMap& f, const Subset& u) {
  Subset out = f.source.empty_set();
  for (std::size_t x = 0; x < f.source.size(); ++x) {
    if (u.contains(idx(f(x)))) out.insert(x);
  }
  return out;
}

Subset up_image(const PosetMap& f, const Subset& s) {
  Subset out = f.target.empty_set();
  for (auto x : s.elements()) out = out | f.target.up(idx(f(x)));
  return out;
}

namespace {

bool preimages_open(const PosetMap& f, const std::vector<Subset>& opens, const FiniteTopology& in) {
  for (const auto& u : opens) {
    if (!in.is_open(preimage(f, u))) return false;
  }
  return true;
}

// Both sides of condition (4) for one directed set and one point.
bool condition4_at(const PosetMap& f, const Subset& d, std::size_t x) {
  const auto& p = f.source;
  const auto& q = f.target;
  Subset meet = p.up(x);
  Subset image_meet = q.up(idx(f(x)));
  for (auto e : d.elements()) {
    meet = meet & p.up(e);
    image_meet = image_meet & q.up(idx(f(e)));
  }
  return up_image(f, meet) == image_meet;
}

}  // namespace

std::optional<MapCounterexample> condition4_bruteforce(const PosetMap& f) {
  for (const auto& d : directed_subsets(f.source)) {
    for (std::size_t x = 0; x < f.source.size(); ++x) {
      if (!condition4_at(f, d, x)) return MapCounterexample{d, elem(x)};
    }
  }
  return std::nullopt;
}

MapReport check_map(const PosetMap& f) {
  f.validate();
  const auto& p = f.source;
  const auto& q = f.target;
  MapReport r;

  r.monotone = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) && !q.leq(idx(f(x)), idx(f(y)))) r.monotone = false;
    }
  }

  const auto p_scott = generate_topology(p, TopologyKind::scott);
  const auto q_scott = generate_topology(q, TopologyKind::scott);
  r.scott_continuous = preimages_open(f, q_scott.opens(), p_scott);

  const auto p_strong = generate_topology(p, TopologyKind::strongScott);
  const auto q_strong = generate_topology(q, TopologyKind::strongScott);
  const auto q_base = strongly_scott_open_sets(q);
  r.strong_scott_continuous = preimages_open(f, q_strong.opens(), p_strong);
  r.pulls_back_base_to_topology = preimages_open(f, q_base, p_strong);

  r.pulls_back_base_to_base = true;
  const auto p_base = strongly_scott_open_sets(p);
  for (const auto& u : q_base) {
    const auto pre = preimage(f, u);
    const bool member = p.size() <= 10 ? is_strong_scott_open_definitional(p, pre)
                                       : std::binary_search(p_base.begin(), p_base.end(), pre, canonical_less);
    if (!member) {
      r.pulls_back_base_to_base = false;
      break;
    }
  }

  // Finite directed sets have a greatest element, so singletons suffice once
  // the singleton instances have forced monotonicity.
  r.condition4 = true;
  for (std::size_t g = 0; g < p.size() && r.condition4; ++g) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!condition4_at(f, Subset::singleton(p.size(), g), x)) {
        r.condition4 = false;
        r.counterexample = MapCounterexample{Subset::singleton(p.size(), g), elem(x)};
        break;
      }
    }
  }

  r.sup_semilattices = structure_flags(p).is_sup_semilattice && structure_flags(q).is_sup_semilattice;
  if (r.sup_semilattices) {
    r.preserves_finite_sups = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (join(q, idx(f(x)), idx(f(y))) != f(idx(*join(p, x, y)))) r.preserves_finite_sups = false;
      }
    }
  }
  return r;
}

DirectionsReport condition_implications(const PosetMap& f) {
  DirectionsReport d;
  d.map = check_map(f);
  const auto& m = d.map;
  d.four_implies_three = !m.condition4 || m.pulls_back_base_to_base;
  d.three_implies_two = !m.pulls_back_base_to_base || m.pulls_back_base_to_topology;
  d.two_iff_one = m.pulls_back_base_to_topology == m.strong_scott_continuous;
  d.four_implies_monotone = !m.condition4 || m.monotone;
  d.equivalence_applies = m.sup_semilattices && m.preserves_finite_sups;
  d.all_equivalent = m.strong_scott_continuous == m.pulls_back_base_to_topology &&
                     m.pulls_back_base_to_topology == m.pulls_back_base_to_base &&
                     m.pulls_back_base_to_base == m.condition4;
  return d;
}

RetractReport retract_transfer(const PosetMap& f, const PosetMap& g) {
  f.validate();
  g.validate();
  if (!(f.source == g.target) || !(f.target == g.source)) {
    throw Error(ErrorCode::CarrierMismatch, "maps are not opposite to each other");
  }
  const auto& p = f.source;
  const auto& q = f.target;
  RetractReport r;
  r.composition_identity = true;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (idx(f(idx(g(y)))) != y) r.composition_identity = false;
  }
  const auto p_strong = generate_topology(p, TopologyKind::strongScott);
  const auto q_strong = generate_topology(q, TopologyKind::strongScott);
  r.f_continuous = preimages_open(f, q_strong.opens(), p_strong);
  r.g_continuous = preimages_open(g, p_strong.opens(), q_strong);
  r.source_strongly_continuous = classify(p).strongly_continuous.value;
  r.target_strongly_continuous = classify(q).strongly_continuous.value;
  const bool premises = r.composition_identity && r.f_continuous && r.g_continuous && r.source_strongly_continuous;
  r.transfer_holds = !premises || r.target_strongly_continuous;

  r.mechanism_holds = true;
  if (premises) {
    for (const auto& u : q_strong.opens()) {
      const auto pulled = preimage(f, u);
      for (auto y : u.elements()) {
        bool found = false;
        for (std::size_t w = 0; w < p.size() && !found; ++w) {
          const auto inner = interior(p_strong, p.up(w));
          if (!inner.contains(idx(g(y))) || !p.up(w).is_subset_of(pulled)) continue;
          const auto back = preimage(g, inner);
          const auto target_up = q.up(idx(f(w)));
          found = back.contains(y) && back.is_subset_of(target_up) && target_up.is_subset_of(u) &&
                  interior(q_strong, target_up).contains(y);
        }
        if (!found) r.mechanism_holds = false;
      }
    }
  }
  return r;
}

}  // namespace scd
