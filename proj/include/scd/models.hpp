#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scd/poset.hpp"
#include "scd/symset.hpp"

namespace scd {

struct Family {
  std::string token;
  bool parameterized = false;
  std::uint64_t min_index = 0;
};

/// A non-principal ideal of a model: its members, a cofinal chain and its sup.
struct IdealDescriptor {
  std::string id;
  SymSet members;
  std::function<ModelElement(std::uint64_t)> chain;
  ModelElement sup;
};

/// A countable dcpo given by an order rule and closed forms for principal
/// up- and down-sets. Built-ins are index-uniform: past `threshold()` the
/// order only compares indices with each other, so a query touching indices
/// up to T is decided by the elements with index at most T + margin().
///
/// To add a model, subclass this, fill in the virtuals and register it in
/// instantiate_model. Leave `index_uniform()` false unless the shift argument
/// really holds; verdicts then degrade to Unknown instead of Holds.
class DcpoModel {
 public:
  virtual ~DcpoModel() = default;

  virtual std::string name() const = 0;
  virtual const std::vector<Family>& families() const = 0;
  virtual bool leq(ModelElement x, ModelElement y) const = 0;
  virtual SymSet up(ModelElement x) const = 0;
  virtual SymSet down(ModelElement x) const = 0;
  virtual const std::vector<IdealDescriptor>& catalog() const = 0;
  virtual std::uint64_t threshold() const = 0;
  virtual bool index_uniform() const { return false; }
  virtual std::uint64_t margin() const { return 3; }

  SymSet universe() const;
  SymSet up_intersection(ModelElement x, ModelElement y) const { return up(x) & up(y); }
  /// All non-parameterized elements, then parameterized ones with index <= bound.
  std::vector<ModelElement> enumerate(std::uint64_t bound) const;

  std::string format(ModelElement e) const;
  std::string format(const SymSet& s) const;
  ModelElement parse(const std::string& text) const;  // ElementOutOfFamily
  void check(ModelElement e) const;                   // ElementOutOfFamily
};

std::shared_ptr<const DcpoModel> instantiate_model(const std::string& name);  // UnknownModel
std::vector<std::string> builtin_model_names();

enum class Outcome { Holds, Fails, Unknown };
std::string_view to_string(Outcome o);

struct VerdictWitness {
  std::string ideal;                     // catalog id, or "principal"
  std::optional<ModelElement> element;   // the element a, or the failing point
  std::string detail;

  friend bool operator==(const VerdictWitness&, const VerdictWitness&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<VerdictWitness> witness;
  std::uint64_t bound = 0;

  /// Outcome and witness agree; the bound is bookkeeping.
  bool same_result(const Verdict& o) const { return outcome == o.outcome && witness == o.witness; }
};

enum class ModelRelation { wayBelow, strongWayBelow, prec };

Verdict model_relation(const DcpoModel& m, ModelRelation kind, ModelElement x, ModelElement y, std::uint64_t bound);

struct Slice {
  SymSet set;
  bool exact = true;
};

/// {y : y r x} for `below`, {y : x r y} otherwise.
Slice model_slice(const DcpoModel& m, ModelRelation kind, ModelElement x, bool below);

struct ModelClassification {
  Verdict continuous;
  Verdict strongly_continuous;
  Verdict hypercontinuous;
};

ModelClassification model_classify(const DcpoModel& m, std::uint64_t bound);

/// The strongly Scott open condition for an explicit set, against the catalog.
std::optional<bool> model_strongly_open(const DcpoModel& m, const SymSet& u, std::uint64_t horizon);

struct TruncatedModel {
  FinitePoset poset;
  std::vector<ModelElement> elements;
  bool caveat = true;
  std::string caveat_text;
};

TruncatedModel truncate_model(const DcpoModel& m, std::uint64_t n);

}  // namespace scd
