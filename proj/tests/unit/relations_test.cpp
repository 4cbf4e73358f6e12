#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scd/classifier.hpp"
#include "scd/error.hpp"
#include "scd/harness/generate.hpp"
#include "scd/relations.hpp"

using namespace scd;

namespace {
Subset set_of(const FinitePoset& p, std::initializer_list<const char*> names) {
  Subset s = p.empty_set();
  for (auto n : names) s.insert(idx(p.at(n)));
  return s;
}

bool is_order(const FinitePoset& p, const RelationMatrix& r) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (r.above(x) != p.up(x)) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("finite collapse on the named examples") {
    CHECK(is_order(fx::chain(2), aux_relation(fx::chain(2), RelationKind::wayBelow)));
    CHECK(is_order(fx::diamond(), aux_relation(fx::diamond(), RelationKind::strongWayBelow)));
    const auto v = fx::vee();
    const auto sw = aux_relation(v, RelationKind::strongWayBelow);
    CHECK(slice_sets(v, sw, v.at("a1")).below == set_of(v, {"0", "a1"}));
    const auto d = fx::diamond();
    CHECK(slice_sets(d, aux_relation(d, RelationKind::leq), d.at("a")).below == d.down(idx(d.at("a"))));
  }

  TEST_CASE("triangle on M3") {
    const auto m = fx::m3();
    const auto tri = aux_relation(m, RelationKind::triangle);
    const auto one = idx(m.at("1"));
    CHECK(tri.below(one) == set_of(m, {"0"}));
    CHECK_THROWS_AS(aux_relation(fx::antichain(2), RelationKind::triangle), Error);
  }

  TEST_CASE("prec on the diamond is the upper-topology interior") {
    const auto d = fx::diamond();
    const auto pr = aux_relation(d, RelationKind::prec);
    const auto upper = generate_topology(d, TopologyKind::upper);
    const auto top = idx(d.at("1"));
    CHECK(pr.above(top) == interior(upper, d.up(top)));
  }

  TEST_CASE("relations agree with the brute-force oracles") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto p = random_poset(1 + seed % 7, seed, seed % 3 ? Shape::any : Shape::lattice);
      const auto wb = aux_relation(p, RelationKind::wayBelow);
      const auto sw = aux_relation(p, RelationKind::strongWayBelow);
      const auto pr = aux_relation(p, RelationKind::prec);
      const auto loc = aux_relation(p, RelationKind::wayBelowLocal);
      for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t y = 0; y < p.size(); ++y) {
          CHECK(wb.holds(x, y) == oracle::way_below(p, x, y));
          CHECK(sw.holds(x, y) == oracle::strong_way_below(p, x, y));
          CHECK(pr.holds(x, y) == oracle::prec(p, x, y));
        }
      }
      CHECK(is_order(p, loc));
      for (auto kind : {RelationKind::wayBelow, RelationKind::strongWayBelow, RelationKind::wayBelowLocal}) {
        CHECK(aux_relation_bruteforce(p, kind).same_pairs(aux_relation(p, kind)));
      }
      if (structure_flags(p).is_complete_lattice) {
        const auto tri = aux_relation(p, RelationKind::triangle);
        for (std::size_t x = 0; x < p.size(); ++x) {
          for (std::size_t y = 0; y < p.size(); ++y) CHECK(tri.holds(x, y) == oracle::triangle(p, x, y));
        }
      }
    }
  }

  TEST_CASE("containments and collapse over all small posets") {
    auto check = [](const FinitePoset& p) {
      const auto leq = aux_relation(p, RelationKind::leq);
      const auto wb = aux_relation(p, RelationKind::wayBelow);
      const auto sw = aux_relation(p, RelationKind::strongWayBelow);
      const auto pr = aux_relation(p, RelationKind::prec);
      CHECK(pr.contained_in(sw));
      CHECK(sw.contained_in(wb));
      CHECK(wb.contained_in(leq));
      CHECK(is_order(p, wb));
      CHECK(is_order(p, sw));
      CHECK(aux_relation_bruteforce(p, RelationKind::strongWayBelow).same_pairs(sw));
      if (structure_flags(p).is_sup_semilattice) CHECK(sw.same_pairs(wb));
    };
    for (std::size_t n = 1; n <= 5; ++n) enumerate_labeled_posets(n, check);
  }

  TEST_CASE("axiom reports") {
    const auto d = fx::diamond();
    const auto rep = relation_axioms(d, aux_relation(d, RelationKind::strongWayBelow));
    CHECK(rep.all_ok());
    CHECK(rep.counterexamples.empty());
    CHECK(relation_axioms(fx::antichain(1), aux_relation(fx::antichain(1), RelationKind::wayBelow)).all_ok());
    CHECK(relation_axioms(fx::chain(3), aux_relation(fx::chain(3), RelationKind::strongWayBelow)).join_stable);
    CHECK_THROWS_AS(relation_axioms(d, aux_relation(d, RelationKind::prec)), Error);

    // A relation that is not order compatible is caught with a witness.
    RelationMatrix broken(3, RelationKind::wayBelow);
    const auto c = fx::chain(3);
    for (std::size_t x = 0; x < 3; ++x) broken.set(x, x);
    const auto bad = relation_axioms(c, broken);
    CHECK_FALSE(bad.order_compatible);
    CHECK_FALSE(bad.counterexamples.empty());
  }

  TEST_CASE("directed approximants force approximating slices") {
    for (std::size_t n = 1; n <= 5; ++n) {
      enumerate_labeled_posets(n, [](const FinitePoset& p) {
        const auto sw = aux_relation(p, RelationKind::strongWayBelow);
        for (std::size_t x = 0; x < p.size(); ++x) {
          const auto slice = sw.below(x);
          for (std::uint64_t m = slice.mask(); m; m = (m - 1) & slice.mask()) {
            const Subset dset(p.size(), m);
            if (is_directed(p, dset) && bounds(p, dset).sup == elem(x)) {
              CHECK(is_directed(p, slice));
              CHECK(bounds(p, slice).sup == elem(x));
            }
          }
        }
      });
    }
  }

  TEST_CASE("strong approximants enter directed sets") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto p = random_poset(1 + seed % 6, seed, Shape::any);
      const auto sw = aux_relation(p, RelationKind::strongWayBelow);
      for (const auto& dset : directed_subsets(p)) {
        const auto s = bounds(p, dset).sup;
        for (std::size_t x = 0; x < p.size(); ++x) {
          for (std::size_t z = 0; z < p.size(); ++z) {
            if (!sw.holds(x, z) || !s || !p.leq(z, idx(*s))) continue;
            bool hit = false;
            for (auto e : dset.elements()) hit = hit || sw.holds(x, e);
            CHECK(hit);
          }
        }
      }
    }
  }

  TEST_CASE("prime continuity matches distributivity on finite lattices") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const auto l = random_poset(1 + seed % 10, seed, Shape::lattice);
      const auto tri = aux_relation(l, RelationKind::triangle);
      bool prime_continuous = true;
      for (std::size_t x = 0; x < l.size(); ++x) {
        prime_continuous = prime_continuous && bounds(l, tri.below(x)).sup == elem(x);
      }
      CHECK(prime_continuous == oracle::distributive_lattice(l));
      CHECK(prime_continuous == classify(l).completely_distributive->value);
    }
  }
}
