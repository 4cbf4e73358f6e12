#include "scd/harness/emit.hpp"

#include <json.hpp>

#include "scd/error.hpp"

namespace scd {

Format parse_format(std::string_view token) {
  if (token == "text") return Format::text;
  if (token == "json") return Format::json;
  if (token == "dot") return Format::dot;
  throw Error(ErrorCode::UnsupportedFormat, std::string(token));
}

namespace {

void poset_lines(std::string& out, const FinitePoset& p, const std::string& name) {
  out += "poset " + name + "\n";
  for (const auto& n : p.names()) out += "elem " + n + "\n";
  for (const auto& [lo, hi] : p.covers()) out += "cover " + p.name(lo) + " " + p.name(hi) + "\n";
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string emit(const FinitePoset& p, Format format, const std::string& name) {
  std::string out;
  switch (format) {
    case Format::text:
      poset_lines(out, p, name);
      return out;
    case Format::json: {
      nlohmann::ordered_json j;
      j["name"] = name;
      j["elements"] = p.names();
      j["covers"] = nlohmann::ordered_json::array();
      for (const auto& [lo, hi] : p.covers()) j["covers"].push_back({p.name(lo), p.name(hi)});
      return j.dump(2) + "\n";
    }
    case Format::dot:
      out = "digraph " + quoted(name) + " {\n  rankdir=BT;\n";
      for (const auto& n : p.names()) out += "  " + quoted(n) + ";\n";
      for (const auto& [lo, hi] : p.covers()) out += "  " + quoted(p.name(lo)) + " -> " + quoted(p.name(hi)) + ";\n";
      return out + "}\n";
  }
  return out;
}

std::string emit(const FiniteTopology& t, Format format) {
  switch (format) {
    case Format::text: {
      std::string out = "topology " + std::string(to_string(t.kind())) + "\n";
      for (const auto& u : t.opens()) out += "open " + format_subset(u, t.names()) + "\n";
      return out;
    }
    case Format::json: {
      nlohmann::ordered_json j;
      j["kind"] = to_string(t.kind());
      j["opens"] = nlohmann::ordered_json::array();
      for (const auto& u : t.opens()) {
        auto set = nlohmann::ordered_json::array();
        for (auto x : u.elements()) set.push_back(t.names().empty() ? std::to_string(x) : t.names()[x]);
        j["opens"].push_back(std::move(set));
      }
      return j.dump(2) + "\n";
    }
    case Format::dot: break;
  }
  throw Error(ErrorCode::UnsupportedFormat, "dot output is only defined for posets");
}

std::string emit(const RunReport& r, Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& c : r.checks) {
        out += c.id + ": " + std::string(to_string(c.outcome));
        if (c.witness) out += " (" + *c.witness + ")";
        out += "\n";
      }
      return out;
    }
    case Format::json: return report_to_json(r);
    case Format::dot: break;
  }
  throw Error(ErrorCode::UnsupportedFormat, "dot output is only defined for posets");
}

std::string emit(const PosetDocument& d) {
  std::string out;
  for (const auto& b : d.posets) poset_lines(out, b.poset, b.name);
  for (const auto& m : d.maps) {
    out += "map " + m.name + " " + m.from + " " + m.to + "\n";
    for (const auto& [src, dst] : m.sends) out += "send " + src + " " + dst + "\n";
  }
  return out;
}

}  // namespace scd
