#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scd/error.hpp"
#include "scd/harness/generate.hpp"
#include "scd/poset.hpp"

using namespace scd;

namespace {
Subset set_of(const FinitePoset& p, std::initializer_list<const char*> names) {
  Subset s = p.empty_set();
  for (auto n : names) s.insert(idx(p.at(n)));
  return s;
}
}  // namespace

TEST_SUITE("core-order") {
  TEST_CASE("subset algebra is exact and carrier-checked") {
    Subset a(4, 0b0011), b(4, 0b0110);
    CHECK((a | b).mask() == 0b0111);
    CHECK((a & b).mask() == 0b0010);
    CHECK((a - b).mask() == 0b0001);
    CHECK(a.complement().mask() == 0b1100);
    CHECK_THROWS_AS((void)(a | Subset(5, 1)), Error);
    CHECK_THROWS_AS(Subset(3, 0b1000), Error);
  }

  TEST_CASE("construction from covers") {
    const auto v = fx::vee();
    CHECK(v.size() == 3);
    CHECK(v.leq(v.at("0"), v.at("a1")));
    CHECK(v.leq(v.at("0"), v.at("a2")));
    CHECK_FALSE(v.leq(v.at("a1"), v.at("a2")));

    const auto s = FinitePoset::from_covers({"x"}, {});
    CHECK(s.leq(std::size_t{0}, std::size_t{0}));

    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InternalInconsistency;
    };
    CHECK(code_of([] { FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::CycleDetected);
    CHECK(code_of([] { build_poset({"a", "a"}, {}); }) == ErrorCode::DuplicateName);
    CHECK(code_of([] { build_poset({"a"}, {{"a", "z"}}); }) == ErrorCode::UnknownName);
  }

  TEST_CASE("order closure matches the relation oracle on random posets") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto p = random_poset(9, seed, Shape::any);
      for (std::size_t x = 0; x < p.size(); ++x) {
        CHECK(p.up_mask(x) == oracle::up(p, x));
        CHECK(p.down_mask(x) == oracle::down(p, x));
        for (std::size_t y = 0; y < p.size(); ++y) {
          for (std::size_t z = 0; z < p.size(); ++z) {
            if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));
          }
          if (x != y && p.leq(x, y)) CHECK_FALSE(p.leq(y, x));
        }
      }
    }
  }

  TEST_CASE("closures") {
    const auto d = fx::diamond();
    CHECK(up_down(d, set_of(d, {"a"}), Direction::up) == set_of(d, {"a", "1"}));
    CHECK(up_down(d, d.empty_set(), Direction::up).empty());
    CHECK(up_down(d, d.full_set(), Direction::down) == d.full_set());

    const auto p = random_poset(8, 3, Shape::any);
    for (std::uint64_t m = 0; m < 256; m += 7) {
      const Subset s(8, m);
      for (auto dir : {Direction::up, Direction::down}) {
        const auto c = up_down(p, s, dir);
        CHECK(s.is_subset_of(c));
        CHECK(up_down(p, c, dir) == c);
        CHECK(up_down(p, s & Subset(8, 0x0f), dir).is_subset_of(c));
      }
    }
  }

  TEST_CASE("bounds") {
    const auto d = fx::diamond();
    const auto b = bounds(d, set_of(d, {"a", "b"}));
    CHECK(b.sup == d.at("1"));
    CHECK(b.inf == d.at("0"));
    const auto v = fx::vee();
    CHECK_FALSE(bounds(v, set_of(v, {"a1", "a2"})).sup.has_value());
    for (std::size_t x = 0; x < d.size(); ++x) {
      const auto s = bounds(d, Subset::singleton(4, x));
      CHECK(s.sup == elem(x));
      CHECK(s.inf == elem(x));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto p = random_poset(7, seed, Shape::any);
      for (std::uint64_t m = 0; m < 128; ++m) {
        const auto bb = bounds(p, Subset(7, m));
        const auto sup = oracle::sup(p, m);
        CHECK(bb.sup.has_value() == sup.has_value());
        if (sup) CHECK(idx(*bb.sup) == *sup);
      }
    }
  }

  TEST_CASE("structure flags") {
    const auto sq = fx::diamond();
    CHECK(structure_flags(sq).is_complete_lattice);
    CHECK(structure_flags(sq).is_lattice_distributive);
    CHECK(structure_flags(fx::m3()).is_complete_lattice);
    CHECK_FALSE(structure_flags(fx::m3()).is_lattice_distributive);
    CHECK_FALSE(structure_flags(fx::n5()).is_lattice_distributive);
    const auto anti = structure_flags(fx::antichain(2));
    CHECK(anti.is_dcpo);
    CHECK_FALSE(anti.bottom.has_value());

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto p = random_poset(1 + seed % 8, seed, seed % 2 ? Shape::lattice : Shape::any);
      const auto f = structure_flags(p);
      if (f.is_complete_lattice) {
        CHECK(f.is_complete_semilattice);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
          CHECK(oracle::sup(p, m).has_value());
          CHECK(oracle::inf(p, m).has_value());
        }
        CHECK(f.is_lattice_distributive == oracle::distributive_lattice(p));
      }
      if (f.is_complete_semilattice) CHECK(f.is_dcpo);
      CHECK(f.bottom.has_value() == oracle::inf(p, oracle::all(p.size())).has_value());
      CHECK(f.top.has_value() == oracle::sup(p, oracle::all(p.size())).has_value());
    }
  }

  TEST_CASE("directed subsets") {
    const auto v = fx::vee();
    std::vector<Subset> expect{set_of(v, {"0"}), set_of(v, {"a1"}), set_of(v, {"a2"}), set_of(v, {"0", "a1"}),
                               set_of(v, {"0", "a2"})};
    auto got = directed_subsets(v);
    std::sort(got.begin(), got.end(), canonical_less);
    std::sort(expect.begin(), expect.end(), canonical_less);
    CHECK(got == expect);
    CHECK(directed_subsets(fx::chain(2)).size() == 3);
    CHECK(directed_subsets(fx::antichain(1)).size() == 1);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto p = random_poset(7, seed, Shape::any);
      const auto ds = directed_subsets(p);
      CHECK(ds.size() == oracle::directed_sets(p).size());
      for (const auto& d : ds) {
        CHECK(greatest(p, d).has_value());
        CHECK(oracle::directed(p, d.mask()));
      }
    }
  }

  TEST_CASE("prime and co-prime elements") {
    const auto d = fx::diamond();
    const auto pc = primes_coprimes(d);
    CHECK(pc.prime == set_of(d, {"a", "b", "1"}));
    CHECK(pc.coprime == set_of(d, {"a", "b", "0"}));
    CHECK(primes_coprimes(fx::chain(3)).prime.is_full());
    CHECK(primes_coprimes(fx::chain(3)).coprime.is_full());
    const auto m = fx::m3();
    CHECK(primes_coprimes(m).prime == set_of(m, {"1"}));
    CHECK_THROWS_AS(primes_coprimes(fx::antichain(2)), Error);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto l = random_poset(1 + seed % 9, seed, Shape::lattice);
      CHECK(primes_coprimes(l).coprime == primes_coprimes(l.dual()).prime);
    }
  }

  TEST_CASE("upper and lower sets match the brute force") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto p = random_poset(1 + seed % 10, seed, Shape::any);
      std::size_t ups = 0, downs = 0;
      for (std::uint64_t m = 0; m <= oracle::all(p.size()); ++m) {
        ups += oracle::is_upper(p, m);
        downs += oracle::is_upper(p.dual(), m);
      }
      const auto u = upper_sets(p);
      CHECK(u.size() == ups);
      CHECK(lower_sets(p).size() == downs);
      CHECK(std::is_sorted(u.begin(), u.end(), canonical_less));
      for (const auto& s : u) CHECK(is_upper_set(p, s));
    }
  }

  TEST_CASE("labeled enumeration matches the relation census") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(enumerate_labeled_posets(n).size() == oracle::labeled_census(n));
    }
    CHECK(enumerate_labeled_posets(2).size() == 3);
    CHECK(enumerate_labeled_posets(3).size() == 19);
    CHECK(enumerate_labeled_posets(4).size() == 219);
    CHECK(enumerate_labeled_posets(5).size() == 4231);
    auto all4 = enumerate_labeled_posets(4);
    for (std::size_t i = 0; i < all4.size(); ++i) {
      for (std::size_t j = i + 1; j < all4.size(); ++j) CHECK_FALSE(all4[i] == all4[j]);
    }
    CHECK_THROWS_AS(enumerate_labeled_posets(6), Error);
  }
}
