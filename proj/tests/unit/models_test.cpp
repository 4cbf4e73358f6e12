#include <doctest.h>

#include <algorithm>

#include "scd/error.hpp"
#include "scd/models.hpp"
#include "scd/relations.hpp"

using namespace scd;

namespace {

constexpr std::uint64_t kSweep = 60;

// x << y by brute force over directed sets: in these models a directed set
// without a greatest element is cofinal in a catalogued ideal, so it is enough
// to test principal ideals and long prefixes of each catalog chain.
bool way_below_brute(const DcpoModel& m, ModelElement x, ModelElement y) {
  if (!m.leq(x, y)) return false;
  for (const auto& ideal : m.catalog()) {
    if (!m.leq(y, ideal.sup)) continue;
    bool meets = false;
    for (std::uint64_t k = 0; k <= kSweep && !meets; ++k) meets = m.leq(x, ideal.chain(k));
    if (!meets) return false;
  }
  return true;
}

std::vector<ModelElement> filter_leq(const DcpoModel& m, const std::vector<ModelElement>& all, ModelElement x,
                                     bool above) {
  std::vector<ModelElement> out;
  for (const auto& e : all) {
    if (above ? m.leq(x, e) : m.leq(e, x)) out.push_back(e);
  }
  return out;
}

std::vector<ModelElement> restrict_to(const SymSet& s, const std::vector<ModelElement>& all) {
  std::vector<ModelElement> out;
  for (const auto& e : all) {
    if (s.contains(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("order rules") {
    const auto pa = instantiate_model("pointed-antichain");
    CHECK(pa->leq(pa->parse("0"), pa->parse("a5")));
    CHECK_FALSE(pa->leq(pa->parse("a5"), pa->parse("a6")));

    const auto t = instantiate_model("towers");
    CHECK(t->leq(t->parse("a2"), t->parse("omega3")));
    CHECK_FALSE(t->leq(t->parse("a4"), t->parse("omega3")));
    CHECK(t->leq(t->parse("a4"), t->parse("omega0")));
    CHECK(t->leq(t->parse("b"), t->parse("omega1")));
    CHECK_FALSE(t->leq(t->parse("b"), t->parse("omega0")));
    for (std::uint64_t n = 1; n < 10; ++n) {
      const auto meet_up = t->up_intersection({0, n}, t->parse("b"));
      CHECK(meet_up.contains({2, n}));
      CHECK(meet_up.contains({2, n + 50}));
      CHECK_FALSE(meet_up.contains({2, 0}));
      CHECK((meet_up == SymSet::range(2, std::max<std::uint64_t>(n, 1))));
    }
  }

  TEST_CASE("closed forms agree with the order rule") {
    for (const auto& name : builtin_model_names()) {
      INFO(name);
      const auto m = instantiate_model(name);
      const auto all = m->enumerate(kSweep);
      for (const auto& x : all) {
        if (x.index > kSweep - 5) continue;
        CHECK(restrict_to(m->up(x), all) == filter_leq(*m, all, x, true));
        CHECK(restrict_to(m->down(x), all) == filter_leq(*m, all, x, false));
      }
    }
  }

  TEST_CASE("each order is a partial order on a finite sweep") {
    for (const auto& name : builtin_model_names()) {
      INFO(name);
      const auto m = instantiate_model(name);
      const auto all = m->enumerate(25);
      for (const auto& x : all) {
        CHECK(m->leq(x, x));
        for (const auto& y : all) {
          if (!(x == y) && m->leq(x, y)) CHECK_FALSE(m->leq(y, x));
          if (!m->leq(x, y)) continue;
          for (const auto& z : all) {
            if (m->leq(y, z)) CHECK(m->leq(x, z));
          }
        }
      }
    }
  }

  TEST_CASE("catalog ideals are directed lower sets with the stated sup") {
    for (const auto& name : builtin_model_names()) {
      INFO(name);
      const auto m = instantiate_model(name);
      const auto all = m->enumerate(30);
      for (const auto& ideal : m->catalog()) {
        INFO(ideal.id);
        for (std::uint64_t k = 0; k < 30; ++k) {
          CHECK(ideal.members.contains(ideal.chain(k)));
          CHECK(m->leq(ideal.chain(k), ideal.chain(k + 1)));
          CHECK(m->leq(ideal.chain(k), ideal.sup));
        }
        for (const auto& e : all) {
          if (!ideal.members.contains(e)) continue;
          // cofinal chain and lower set
          bool below_chain = false;
          for (std::uint64_t k = 0; k < 40 && !below_chain; ++k) below_chain = m->leq(e, ideal.chain(k));
          CHECK(below_chain);
          for (const auto& d : all) {
            if (m->leq(d, e)) CHECK(ideal.members.contains(d));
          }
        }
        CHECK_FALSE(ideal.members.contains(ideal.sup));
        // sup: every upper bound of the chain is above the listed sup
        for (const auto& u : all) {
          bool bound = true;
          for (std::uint64_t k = 0; k < 35 && bound; ++k) bound = m->leq(ideal.chain(k), u);
          if (bound) CHECK(m->leq(ideal.sup, u));
        }
      }
    }
  }

  TEST_CASE("way-below verdicts match the directed-set brute force") {
    for (const auto& name : builtin_model_names()) {
      INFO(name);
      const auto m = instantiate_model(name);
      const auto all = m->enumerate(8);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const auto v = model_relation(*m, ModelRelation::wayBelow, x, y, 8);
          REQUIRE(v.outcome != Outcome::Unknown);
          CHECK((v.outcome == Outcome::Holds) == way_below_brute(*m, x, y));
        }
      }
    }
  }

  TEST_CASE("relation containments") {
    for (const auto& name : builtin_model_names()) {
      INFO(name);
      const auto m = instantiate_model(name);
      const auto all = m->enumerate(12);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const auto p = model_relation(*m, ModelRelation::prec, x, y, 12);
          const auto s = model_relation(*m, ModelRelation::strongWayBelow, x, y, 12);
          const auto w = model_relation(*m, ModelRelation::wayBelow, x, y, 12);
          if (p.outcome == Outcome::Holds) CHECK(s.outcome == Outcome::Holds);
          if (s.outcome == Outcome::Holds) CHECK(w.outcome == Outcome::Holds);
          if (w.outcome == Outcome::Fails) CHECK(s.outcome == Outcome::Fails);
        }
      }
    }
  }

  TEST_CASE("known verdicts") {
    const auto t = instantiate_model("towers");
    const auto w1 = t->parse("omega1");
    const auto strong = model_relation(*t, ModelRelation::strongWayBelow, w1, w1, 10);
    CHECK(strong.outcome == Outcome::Fails);
    REQUIRE(strong.witness.has_value());
    CHECK(strong.witness->ideal == "C-chain");
    CHECK(model_relation(*t, ModelRelation::wayBelow, w1, w1, 10).outcome == Outcome::Holds);

    const auto c = model_classify(*t, 10);
    CHECK(c.continuous.outcome == Outcome::Holds);
    CHECK(c.strongly_continuous.outcome == Outcome::Fails);
    REQUIRE(c.strongly_continuous.witness.has_value());
    CHECK(c.strongly_continuous.witness->element == std::optional<ModelElement>(w1));
    CHECK(c.hypercontinuous.outcome == Outcome::Fails);

    const auto pa = model_classify(*instantiate_model("pointed-antichain"), 10);
    CHECK(pa.continuous.outcome == Outcome::Holds);
    CHECK(pa.strongly_continuous.outcome == Outcome::Holds);
    CHECK(pa.hypercontinuous.outcome == Outcome::Fails);

    const auto ch = model_classify(*instantiate_model("chain-omega-plus-1"), 10);
    CHECK(ch.hypercontinuous.outcome == Outcome::Holds);
    const auto top = instantiate_model("chain-omega-plus-1")->parse("top");
    CHECK(model_relation(*instantiate_model("chain-omega-plus-1"), ModelRelation::wayBelow, top, top, 10).outcome ==
          Outcome::Fails);
  }

  TEST_CASE("verdicts do not depend on the bound") {
    const auto t = instantiate_model("towers");
    const auto a = model_classify(*t, 5);
    const auto b = model_classify(*t, 40);
    CHECK(a.continuous.same_result(b.continuous));
    CHECK(a.strongly_continuous.same_result(b.strongly_continuous));
    CHECK(a.hypercontinuous.same_result(b.hypercontinuous));
    for (std::uint64_t n = 1; n < 12; ++n) {
      const ModelElement an{0, n};
      const auto low = model_relation(*t, ModelRelation::wayBelow, an, t->parse("omega0"), 2);
      const auto high = model_relation(*t, ModelRelation::wayBelow, an, t->parse("omega0"), 50);
      CHECK(low.same_result(high));
    }
  }

  TEST_CASE("truncations") {
    const auto pa = truncate_model(*instantiate_model("pointed-antichain"), 2);
    CHECK(pa.poset.size() == 3);
    CHECK(pa.poset.names() == std::vector<std::string>{"0", "a1", "a2"});
    CHECK(pa.caveat);
    CHECK_FALSE(pa.caveat_text.empty());
    CHECK(truncate_model(*instantiate_model("towers"), 1).poset.size() == 4);
    const auto again = truncate_model(*instantiate_model("pointed-antichain"), 2);
    CHECK(again.poset == pa.poset);
    CHECK_THROWS_AS(truncate_model(*instantiate_model("towers"), 100), Error);
  }

  TEST_CASE("parsing and errors") {
    const auto t = instantiate_model("towers");
    for (const auto& e : t->enumerate(10)) CHECK(t->parse(t->format(e)) == e);
    CHECK(t->format(SymSet::range(0, 1)) != "");
    auto code_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return std::optional<ErrorCode>(e.code());
      }
      return std::optional<ErrorCode>();
    };
    CHECK(code_of([&] { t->parse("a0"); }) == ErrorCode::ElementOutOfFamily);
    CHECK(code_of([&] { t->parse("c3"); }) == ErrorCode::ElementOutOfFamily);
    CHECK(code_of([&] { t->check({7, 0}); }) == ErrorCode::ElementOutOfFamily);
    CHECK(code_of([] { instantiate_model("no-such-model"); }) == ErrorCode::UnknownModel);
  }
}
