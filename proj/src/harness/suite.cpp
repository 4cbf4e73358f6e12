#include "scd/harness/suite.hpp"

#include <chrono>

#include "scd/classifier.hpp"
#include "scd/error.hpp"
#include "scd/relations.hpp"
#include "scd/topology.hpp"

namespace scd {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string poset_digest(const FinitePoset& p) {
  std::string bytes;
  for (const auto& n : p.names()) bytes += n + ",";
  for (std::size_t x = 0; x < p.size(); ++x) bytes += std::to_string(p.up_mask(x)) + ";";
  return digest(bytes);
}

CheckOutcome data(bool value) { return value ? CheckOutcome::holds : CheckOutcome::fails; }

CheckOutcome data(Outcome o) {
  switch (o) {
    case Outcome::Holds: return CheckOutcome::holds;
    case Outcome::Fails: return CheckOutcome::fails;
    case Outcome::Unknown: return CheckOutcome::unknown;
  }
  return CheckOutcome::unknown;
}

std::string describe(const FinitePoset& p) {
  std::string out = "{";
  for (std::size_t x = 0; x < p.size(); ++x) out += (x ? "," : "") + p.name(elem(x));
  out += "}";
  for (const auto& [lo, hi] : p.covers()) out += " " + p.name(lo) + "<" + p.name(hi);
  return out;
}

}  // namespace

RunReport run_theorems(const FinitePoset& p, const std::string& input_digest) {
  RunReport r;
  r.input_digest = input_digest.empty() ? poset_digest(p) : input_digest;
  const auto start = Clock::now();
  const auto rep = verify_theorems(p);
  const auto total = millis_since(start);
  for (const auto& e : rep.entries) {
    CheckResult c{e.id, CheckOutcome::pass, std::nullopt, 0.0};
    if (!e.applicable) {
      c.outcome = CheckOutcome::not_applicable;
    } else if (!e.passed()) {
      c.outcome = CheckOutcome::fail;
      c.witness = e.counterexample;
    }
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back({"theorem-suite", rep.all_passed() ? CheckOutcome::pass : CheckOutcome::fail, std::nullopt, total});
  return r;
}

RunReport run_classify(const FinitePoset& p, const std::string& input_digest) {
  RunReport r;
  r.input_digest = input_digest.empty() ? poset_digest(p) : input_digest;
  const auto start = Clock::now();
  try {
    const auto rep = classify(p);
    const auto ms = millis_since(start);
    auto add = [&](const char* id, const ClassVerdict& v) {
      CheckResult c{id, data(v.value), std::nullopt, ms};
      if (!v.witness.empty()) c.witness = "at " + v.witness;
      r.checks.push_back(std::move(c));
    };
    add("continuous", rep.continuous);
    add("hypercontinuous", rep.hypercontinuous);
    add("strongly-continuous", rep.strongly_continuous);
    if (rep.prime_continuous) add("prime-continuous", *rep.prime_continuous);
    if (rep.completely_distributive) add("completely-distributive", *rep.completely_distributive);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalInconsistency) throw;
    r.checks.push_back({"classify", CheckOutcome::fail, e.what(), millis_since(start)});
  }
  return r;
}

std::string describe_witness(const DcpoModel& m, const VerdictWitness& w) {
  std::string out;
  if (!w.ideal.empty()) out += "ideal " + w.ideal;
  if (w.element) out += (out.empty() ? "" : ", ") + std::string(w.ideal.empty() ? "at " : "a=") + m.format(*w.element);
  if (!w.detail.empty()) out += (out.empty() ? "" : ": ") + w.detail;
  return out;
}

RunReport run_model_classify(const DcpoModel& m, std::uint64_t bound) {
  RunReport r;
  r.input_digest = digest(m.name() + "/" + std::to_string(bound));
  const auto start = Clock::now();
  const auto rep = model_classify(m, bound);
  const auto ms = millis_since(start);
  auto add = [&](const char* id, const Verdict& v) {
    CheckResult c{id, data(v.outcome), std::nullopt, ms};
    if (v.witness) c.witness = describe_witness(m, *v.witness);
    r.checks.push_back(std::move(c));
  };
  add("continuous", rep.continuous);
  add("strongly-continuous", rep.strongly_continuous);
  add("hypercontinuous", rep.hypercontinuous);
  return r;
}

std::optional<std::string> finite_collapse_violation(const FinitePoset& p) {
  const auto ups = upper_sets(p);
  if (strongly_scott_open_sets(p) != ups) return "strongly Scott open sets differ from the upper sets";
  const auto strong = generate_topology(p, TopologyKind::strongScott);
  const auto scott = generate_topology(p, TopologyKind::scott);
  const auto upper = generate_topology(p, TopologyKind::upper);
  if (strong.opens() != ups) return "strong Scott topology differs from the upper sets";
  if (scott.opens() != ups) return "Scott topology differs from the upper sets";
  if (p.size() <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      const Subset u(p.size(), m);
      const bool listed = std::binary_search(ups.begin(), ups.end(), u, canonical_less);
      if (is_strong_scott_open_definitional(p, u) != listed) {
        return "definitional strong Scott openness disagrees at " + format_subset(u, p.names());
      }
    }
  }
  RelationMatrix order(p.size(), RelationKind::leq);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) order.set(x, y);
    }
  }
  for (auto kind : {RelationKind::wayBelow, RelationKind::strongWayBelow}) {
    const auto fast = aux_relation(p, kind);
    if (!fast.same_pairs(order)) return std::string(to_string(kind)) + " differs from the order";
    if (p.size() <= 10 && !aux_relation_bruteforce(p, kind).same_pairs(fast)) {
      return std::string(to_string(kind)) + " disagrees with the directed-set brute force";
    }
  }
  for (const auto& u : upper.opens()) {
    if (!std::binary_search(ups.begin(), ups.end(), u, canonical_less)) return "upper topology not inside strongly open";
  }
  if (!strong.coarser_than(scott)) return "strong Scott topology not inside Scott topology";
  return std::nullopt;
}

std::optional<std::string> theorem_violation(const FinitePoset& p) {
  try {
    classify(p);
    const auto rep = verify_theorems(p);
    for (const auto& e : rep.entries) {
      if (!e.passed()) return e.id + ": " + e.counterexample;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalInconsistency) throw;
    return std::string(e.what());
  }
  return std::nullopt;
}

FinitePoset shrink(const FinitePoset& p, const std::function<bool(const FinitePoset&)>& violates) {
  FinitePoset cur = p;
  bool progress = true;
  while (progress && cur.size() > 1) {
    progress = false;
    for (std::size_t x = 0; x < cur.size(); ++x) {
      auto keep = cur.full_set();
      keep.erase(x);
      auto smaller = cur.restrict_to(keep);
      if (violates(smaller)) {
        cur = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

// Removes one implied pair x <= z with x < y < z, or builds a broken
// three-element chain when the poset has no such triple.
std::optional<std::string> injected_transitivity(const FinitePoset& p) {
  std::vector<std::uint64_t> above;
  for (std::size_t x = 0; x < p.size(); ++x) above.push_back(p.up_mask(x));
  std::vector<std::string> names = p.names();
  bool mutated = false;
  for (std::size_t x = 0; x < p.size() && !mutated; ++x) {
    for (std::size_t y = 0; y < p.size() && !mutated; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      for (std::size_t z = 0; z < p.size() && !mutated; ++z) {
        if (z != y && z != x && p.leq(y, z)) {
          above[x] &= ~(std::uint64_t{1} << z);
          mutated = true;
        }
      }
    }
  }
  if (!mutated) {
    names = {"m0", "m1", "m2"};
    above = {0b011, 0b110, 0b100};
  }
  try {
    FinitePoset::from_up_masks(names, above);
  } catch (const Error& e) {
    return "mutated order rejected: " + std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace

RunReport run_fuzz(const FuzzOptions& o) {
  RunReport r;
  r.input_digest = digest("fuzz/" + std::to_string(o.n) + "/" + std::to_string(o.count) + "/" +
                          std::to_string(o.seed) + (o.exhaustive ? "/exhaustive" : "") +
                          (o.shape == Shape::lattice ? "/lattice" : "") + (o.inject ? "/" + *o.inject : ""));
  if (o.inject && *o.inject != "transitivity") throw Error(ErrorCode::SyntaxError, "unknown mutation " + *o.inject);
  const auto start = Clock::now();
  std::size_t tested = 0;
  std::size_t failures = 0;
  auto examine = [&](const FinitePoset& p) {
    ++tested;
    if (o.inject) {
      if (auto diag = injected_transitivity(p)) {
        ++failures;
        r.checks.push_back({"fuzz-" + std::to_string(tested), CheckOutcome::fail, *diag, 0.0});
      }
      return;
    }
    auto problem = [](const FinitePoset& q) {
      auto v = finite_collapse_violation(q);
      return v ? v : theorem_violation(q);
    };
    if (auto v = problem(p)) {
      ++failures;
      const auto small = shrink(p, [&](const FinitePoset& q) { return problem(q).has_value(); });
      r.checks.push_back({"fuzz-" + std::to_string(tested), CheckOutcome::fail,
                          *v + "; shrunk to " + describe(small) + ": " + problem(small).value_or(""), 0.0});
    }
  };
  if (o.exhaustive) {
    enumerate_labeled_posets(o.n, examine);
  } else {
    for (std::size_t i = 0; i < o.count; ++i) examine(random_poset(o.n, o.seed + i, o.shape));
  }
  r.checks.push_back({"fuzz", failures == 0 ? CheckOutcome::pass : CheckOutcome::fail,
                      std::to_string(tested) + " posets, " + std::to_string(failures) + " failing",
                      millis_since(start)});
  return r;
}

}  // namespace scd
