#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scd/error.hpp"
#include "scd/harness/document.hpp"
#include "scd/harness/emit.hpp"
#include "scd/harness/generate.hpp"
#include "scd/harness/report.hpp"
#include "scd/harness/suite.hpp"
#include "scd/topology.hpp"

using namespace scd;

namespace {

std::optional<std::pair<ErrorCode, std::size_t>> parse_failure(const std::string& text) {
  try {
    parse_poset_text(text);
  } catch (const ParseError& e) {
    return std::make_pair(e.code(), e.line());
  }
  return std::nullopt;
}

bool is_partial_order(const FinitePoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.leq(x, x)) return false;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x != y && p.leq(x, y) && p.leq(y, x)) return false;
      for (std::size_t z = 0; z < p.size(); ++z) {
        if (p.leq(x, y) && p.leq(y, z) && !p.leq(x, z)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("parsing") {
    const auto doc = parse_poset_text("# comment\nposet P\nelem x\nelem y\nelem z\ncover x y\ncover y z\n");
    REQUIRE(doc.posets.size() == 1);
    const auto& p = doc.primary().poset;
    CHECK(p.size() == 3);
    CHECK(p.leq(p.at("x"), p.at("z")));
    CHECK_FALSE(p.leq(p.at("z"), p.at("x")));

    const auto two = read_poset_file(SCD_TEST_DATA "/two_atoms_map.poset");
    CHECK(two.posets.size() == 2);
    CHECK(two.poset_named("C").poset.size() == 2);
    CHECK_THROWS_AS(two.poset_named("Q"), Error);
    CHECK_THROWS_AS(two.map_named("g"), Error);
  }

  TEST_CASE("parse errors carry codes and lines") {
    CHECK(parse_failure("cover a b\n") == std::make_pair(ErrorCode::UnknownName, std::size_t{1}));
    CHECK(parse_failure("poset P\nelem a\nelem a\n") == std::make_pair(ErrorCode::DuplicateName, std::size_t{3}));
    CHECK(parse_failure("poset P\nelem a\nfrobnicate a\n") == std::make_pair(ErrorCode::SyntaxError, std::size_t{3}));
    CHECK(parse_failure("poset P\nelem a\nelem b\ncover a b\ncover b a\n") ==
          std::make_pair(ErrorCode::CycleDetected, std::size_t{5}));
    CHECK(parse_failure("poset P\nelem a\ncover a a\n").has_value());
    // a map must be total
    CHECK(parse_failure("poset P\nelem a\nelem b\nmap f P P\nsend a b\n")->first == ErrorCode::SyntaxError);
  }

  TEST_CASE("text round trip") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto p = random_poset(1 + seed % 8, seed, Shape::any);
      const auto text = emit(p, Format::text, "R");
      const auto back = parse_poset_text(text).primary();
      CHECK(back.name == "R");
      CHECK(back.poset == p);
    }
    const auto two = read_poset_file(SCD_TEST_DATA "/two_atoms_map.poset");
    const auto again = parse_poset_text(emit(two));
    CHECK(again.posets.size() == two.posets.size());
    CHECK(again.map_named("f").table == two.map_named("f").table);
  }

  TEST_CASE("dot output") {
    const auto d = fx::diamond();
    const auto dot = emit(d, Format::dot);
    CHECK(dot.find("digraph") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
    CHECK(edges == d.covers().size());
    CHECK(dot == emit(d, Format::dot));
    CHECK_THROWS_AS(emit(generate_topology(d, TopologyKind::scott), Format::dot), Error);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
    CHECK(parse_format("json") == Format::json);
  }

  TEST_CASE("reports") {
    RunReport r;
    r.input_digest = digest("poset P\n");
    r.checks.push_back({"one", CheckOutcome::pass, std::nullopt, 1.5});
    r.checks.push_back({"two", CheckOutcome::fails, std::string("at x"), 0.25});
    CHECK(r.exit_code() == 0);
    CHECK(report_from_json(report_to_json(r)) == r);
    r.checks.push_back({"three", CheckOutcome::fail, std::string("w"), 0.0});
    CHECK(r.exit_code() == 1);
    CHECK(report_from_json(report_to_json(r)) == r);

    const RunReport empty;
    CHECK(empty.exit_code() == 0);
    CHECK(report_from_json(report_to_json(empty)) == empty);
    CHECK_THROWS_AS(report_from_json("{not json"), Error);

    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
    CHECK(digest("a").size() == 16);
    for (auto o : {CheckOutcome::pass, CheckOutcome::fail, CheckOutcome::holds, CheckOutcome::fails,
                   CheckOutcome::unknown, CheckOutcome::not_applicable}) {
      CHECK(parse_check_outcome(to_string(o)) == o);
    }
  }

  TEST_CASE("random posets") {
    CHECK(random_poset(6, 42, Shape::any) == random_poset(6, 42, Shape::any));
    CHECK(random_poset(1, 3, Shape::any).size() == 1);
    CHECK_THROWS_AS(random_poset(0, 1, Shape::any), Error);
    CHECK_THROWS_AS(random_poset(25, 1, Shape::any), Error);
    std::set<std::vector<bool>> shapes;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto p = random_poset(6, seed, Shape::any);
      CHECK(p.size() == 6);
      CHECK(is_partial_order(p));
      std::vector<bool> table;
      for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) table.push_back(p.leq(x, y));
      }
      shapes.insert(table);
    }
    CHECK(shapes.size() > 100);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto l = random_poset(1 + seed % 10, seed, Shape::lattice);
      CHECK(structure_flags(l).is_complete_lattice);
    }
    CHECK(parse_shape("lattice") == Shape::lattice);
    CHECK_THROWS_AS(parse_shape("tree"), Error);
  }

  TEST_CASE("labeled census") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto all = enumerate_labeled_posets(n);
      CHECK(all.size() == oracle::labeled_census(n));
      std::set<std::vector<std::uint64_t>> distinct;
      for (const auto& p : all) {
        std::vector<std::uint64_t> masks;
        for (std::size_t x = 0; x < n; ++x) masks.push_back(p.up_mask(x));
        distinct.insert(masks);
      }
      CHECK(distinct.size() == all.size());
    }
    CHECK(enumerate_labeled_posets(5).size() == 4231);
    CHECK_THROWS_AS(enumerate_labeled_posets(6), Error);
  }

  TEST_CASE("suite runs and exit codes") {
    const auto p = fx::diamond();
    const auto th = run_theorems(p, digest("x"));
    CHECK(th.exit_code() == 0);
    CHECK(th.input_digest == digest("x"));
    CHECK_FALSE(th.checks.empty());
    CHECK(run_classify(p).exit_code() == 0);
    // Model verdicts that fail are data, not a failing run.
    const auto m = run_model_classify(*instantiate_model("towers"), 10);
    CHECK(m.exit_code() == 0);
    bool saw_fails = false;
    for (const auto& c : m.checks) saw_fails = saw_fails || c.outcome == CheckOutcome::fails;
    CHECK(saw_fails);

    FuzzOptions clean;
    clean.n = 4;
    clean.count = 30;
    CHECK(run_fuzz(clean).exit_code() == 0);
    FuzzOptions small_exhaustive;
    small_exhaustive.n = 3;
    small_exhaustive.exhaustive = true;
    CHECK(run_fuzz(small_exhaustive).exit_code() == 0);
    FuzzOptions broken = clean;
    broken.inject = "transitivity";
    const auto bad = run_fuzz(broken);
    CHECK(bad.exit_code() == 1);
  }

  TEST_CASE("finite collapse and shrinking") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto p = random_poset(1 + seed % 6, seed, Shape::any);
      CHECK_FALSE(finite_collapse_violation(p).has_value());
      CHECK_FALSE(theorem_violation(p).has_value());
    }
    // Shrinking keeps a predicate true and reaches a minimal carrier.
    const auto big = fx::chain(6);
    const auto small = shrink(big, [](const FinitePoset& q) { return q.size() >= 2; });
    CHECK(small.size() == 2);
    const auto has_pair = shrink(fx::n5(), [](const FinitePoset& q) {
      for (std::size_t x = 0; x < q.size(); ++x) {
        for (std::size_t y = 0; y < q.size(); ++y) {
          if (x != y && !q.leq(x, y) && !q.leq(y, x)) return true;
        }
      }
      return false;
    });
    CHECK(has_pair.size() == 2);
  }
}
