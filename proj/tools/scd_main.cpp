// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 bad input.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "scd/classifier.hpp"
#include "scd/error.hpp"
#include "scd/harness/document.hpp"
#include "scd/harness/emit.hpp"
#include "scd/harness/suite.hpp"
#include "scd/maps.hpp"
#include "scd/models.hpp"
#include "scd/relations.hpp"

namespace {

using namespace scd;

struct Globals {
  std::string format = "text";
  bool quiet = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int print(const Globals& g, const std::string& text, int code = 0) {
  if (!g.quiet) std::cout << text;
  return code;
}

int finish(const Globals& g, const RunReport& r) { return print(g, emit(r, parse_format(g.format)), r.exit_code()); }

CheckResult flag(const std::string& id, bool value) {
  return {id, value ? CheckOutcome::holds : CheckOutcome::fails, std::nullopt, 0.0};
}

CheckResult assertion(const std::string& id, bool ok) {
  return {id, ok ? CheckOutcome::pass : CheckOutcome::fail, std::nullopt, 0.0};
}

int cmd_topology(const Globals& g, const std::string& file, const std::string& kind_token, bool list) {
  const auto text = slurp(file);
  const auto doc = parse_poset_text(text);
  const auto kind = parse_topology_kind(kind_token);
  if (!kind || *kind == TopologyKind::custom) throw Error(ErrorCode::UnsupportedKind, kind_token);
  const auto t = generate_topology(doc.primary().poset, *kind);
  if (list) return print(g, emit(t, parse_format(g.format)));
  RunReport r;
  r.input_digest = digest(text);
  for (auto prop : {SpaceProperty::T0, SpaceProperty::T1, SpaceProperty::T2, SpaceProperty::sober,
                    SpaceProperty::compact, SpaceProperty::locallyCompact, SpaceProperty::cSpace}) {
    r.checks.push_back(flag(std::string(to_string(prop)), space_property(t, prop)));
  }
  return finish(g, r);
}

int cmd_relations(const Globals& g, const std::string& file, const std::string& kind_token) {
  const auto doc = parse_poset_text(slurp(file));
  const auto kind = parse_relation_kind(kind_token);
  if (!kind) throw Error(ErrorCode::UnsupportedKind, kind_token);
  const auto& p = doc.primary().poset;
  const auto r = aux_relation(p, *kind);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (auto y : r.above(x).elements()) pairs.emplace_back(p.names()[x], p.names()[y]);
  }
  if (parse_format(g.format) == Format::json) {
    nlohmann::ordered_json j;
    j["kind"] = kind_token;
    j["pairs"] = pairs;
    return print(g, j.dump(2) + "\n");
  }
  std::string out;
  for (const auto& [x, y] : pairs) out += x + " " + kind_token + " " + y + "\n";
  return print(g, out);
}

int cmd_model(const Globals& g, const std::string& name, std::uint64_t bound, bool classify_flag,
              const std::vector<std::string>& relation) {
  const auto m = instantiate_model(name);
  if (classify_flag == !relation.empty()) throw Error(ErrorCode::SyntaxError, "give exactly one of --classify, --relation");
  if (classify_flag) return finish(g, run_model_classify(*m, bound));
  ModelRelation kind;
  if (relation[0] == "way-below") {
    kind = ModelRelation::wayBelow;
  } else if (relation[0] == "strong-way-below") {
    kind = ModelRelation::strongWayBelow;
  } else if (relation[0] == "prec") {
    kind = ModelRelation::prec;
  } else {
    throw Error(ErrorCode::UnsupportedKind, relation[0]);
  }
  const auto v = model_relation(*m, kind, m->parse(relation[1]), m->parse(relation[2]), bound);
  RunReport r;
  r.input_digest = digest(name + "/" + relation[0] + "/" + relation[1] + "/" + relation[2]);
  CheckResult c{relation[1] + " " + relation[0] + " " + relation[2], CheckOutcome::unknown, std::nullopt, 0.0};
  c.outcome = v.outcome == Outcome::Holds   ? CheckOutcome::holds
              : v.outcome == Outcome::Fails ? CheckOutcome::fails
                                            : CheckOutcome::unknown;
  if (v.witness) c.witness = describe_witness(*m, *v.witness);
  r.checks.push_back(std::move(c));
  return finish(g, r);
}

int cmd_map(const Globals& g, const std::string& file, const std::string& name) {
  const auto text = slurp(file);
  const auto doc = parse_poset_text(text);
  const auto f = doc.map_named(name);
  const auto d = condition_implications(f);
  const auto& m = d.map;
  RunReport r;
  r.input_digest = digest(text);
  r.checks.push_back(flag("monotone", m.monotone));
  r.checks.push_back(flag("scott-continuous", m.scott_continuous));
  r.checks.push_back(flag("strong-scott-continuous", m.strong_scott_continuous));
  r.checks.push_back(flag("base-to-topology", m.pulls_back_base_to_topology));
  r.checks.push_back(flag("base-to-base", m.pulls_back_base_to_base));
  auto c4 = flag("condition4", m.condition4);
  if (m.counterexample) {
    c4.witness = "D=" + format_subset(m.counterexample->directed, f.source.names()) +
                 ", x=" + f.source.name(m.counterexample->x);
  }
  r.checks.push_back(std::move(c4));
  if (m.sup_semilattices) r.checks.push_back(flag("preserves-finite-sups", m.preserves_finite_sups));
  r.checks.push_back(assertion("implications", d.ok()));
  return finish(g, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong Scott topology toolkit for finite posets and symbolic dcpos"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", g.quiet, "print nothing; report through the exit code");

  std::string file, kind, name;
  bool list_opens = false, classify_flag = false, exhaustive = false;
  std::uint64_t bound = 40;
  std::vector<std::string> relation;
  FuzzOptions fuzz;
  std::string shape = "any", inject;

  auto* c_classify = app.add_subcommand("classify", "classify a poset file");
  c_classify->add_option("FILE", file)->required();
  auto* c_topology = app.add_subcommand("topology", "properties or open sets of a generated topology");
  c_topology->add_option("FILE", file)->required();
  c_topology->add_option("--kind", kind)->required();
  c_topology->add_flag("--list-opens", list_opens);
  auto* c_relations = app.add_subcommand("relations", "list an auxiliary relation");
  c_relations->add_option("FILE", file)->required();
  c_relations->add_option("--kind", kind)->required();
  auto* c_theorems = app.add_subcommand("theorems", "run the theorem suite on a poset file");
  c_theorems->add_option("FILE", file)->required();
  auto* c_model = app.add_subcommand("model", "query a built-in symbolic model");
  c_model->add_option("NAME", name)->required();
  c_model->add_option("--bound", bound);
  c_model->add_flag("--classify", classify_flag);
  c_model->add_option("--relation", relation, "KIND X Y")->expected(3);
  auto* c_map = app.add_subcommand("map", "check a map declared in a poset file");
  c_map->add_option("FILE", file)->required();
  c_map->add_option("--name", name)->required();
  auto* c_fuzz = app.add_subcommand("fuzz", "random or exhaustive theorem sweep");
  c_fuzz->add_option("--n", fuzz.n)->required();
  c_fuzz->add_option("--count", fuzz.count);
  c_fuzz->add_option("--seed", fuzz.seed);
  c_fuzz->add_flag("--exhaustive", exhaustive);
  c_fuzz->add_option("--shape", shape)->check(CLI::IsMember({"any", "lattice"}));
  c_fuzz->add_option("--inject", inject);
  auto* c_dot = app.add_subcommand("dot", "Hasse diagram in Graphviz format");
  c_dot->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_classify) {
      const auto text = slurp(file);
      return finish(g, run_classify(parse_poset_text(text).primary().poset, digest(text)));
    }
    if (*c_topology) return cmd_topology(g, file, kind, list_opens);
    if (*c_relations) return cmd_relations(g, file, kind);
    if (*c_theorems) {
      const auto text = slurp(file);
      return finish(g, run_theorems(parse_poset_text(text).primary().poset, digest(text)));
    }
    if (*c_model) return cmd_model(g, name, bound, classify_flag, relation);
    if (*c_map) return cmd_map(g, file, name);
    if (*c_fuzz) {
      fuzz.exhaustive = exhaustive;
      fuzz.shape = parse_shape(shape);
      if (!inject.empty()) fuzz.inject = inject;
      const auto r = run_fuzz(fuzz);
      return finish(g, r);
    }
    if (*c_dot) {
      const auto doc = parse_poset_text(slurp(file));
      return print(g, emit(doc.primary().poset, Format::dot, doc.primary().name));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
