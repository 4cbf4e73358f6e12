#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "scd/harness/generate.hpp"
#include "scd/harness/report.hpp"
#include "scd/models.hpp"

namespace scd {

RunReport run_theorems(const FinitePoset& p, const std::string& input_digest = {});
RunReport run_classify(const FinitePoset& p, const std::string& input_digest = {});
RunReport run_model_classify(const DcpoModel& m, std::uint64_t bound);

/// Finite posets collapse: the strongly Scott open sets, the topology they
/// generate and the Scott topology are all the upper sets; strong way-below,
/// way-below and the order coincide; upper <= strongly open <= strong Scott <=
/// Scott. Each claim is cross-checked against the definitional brute force.
/// Returns a description of the first violation.
std::optional<std::string> finite_collapse_violation(const FinitePoset& p);

/// Theorem-suite and classifier consistency for one poset.
std::optional<std::string> theorem_violation(const FinitePoset& p);

/// Greedy element deletion while `violates` keeps reporting a problem.
FinitePoset shrink(const FinitePoset& p, const std::function<bool(const FinitePoset&)>& violates);

std::string describe_witness(const DcpoModel& m, const VerdictWitness& w);

struct FuzzOptions {
  std::size_t n = 5;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  Shape shape = Shape::any;
  std::optional<std::string> inject;  // "transitivity" corrupts each order table
};

RunReport run_fuzz(const FuzzOptions& options);

}  // namespace scd
