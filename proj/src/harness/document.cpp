#include "scd/harness/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "scd/error.hpp"

namespace scd {

const PosetBlock& PosetDocument::poset_named(const std::string& name) const {
  for (const auto& b : posets) {
    if (b.name == name) return b;
  }
  throw Error(ErrorCode::UnknownName, "no poset named " + name);
}

PosetMap PosetDocument::map_named(const std::string& name) const {
  for (const auto& m : maps) {
    if (m.name != name) continue;
    PosetMap f{poset_named(m.from).poset, poset_named(m.to).poset, {}};
    f.table.resize(f.source.size());
    for (const auto& [src, dst] : m.sends) f.table[idx(f.source.at(src))] = f.target.at(dst);
    return f;
  }
  throw Error(ErrorCode::UnknownName, "no map named " + name);
}

namespace {

bool is_token(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

struct OpenPoset {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::uint64_t> above;  // transitive closure so far
  std::vector<std::pair<std::string, std::string>> covers;
};

struct OpenMap {
  MapBlock block;
  std::size_t line = 0;
  std::size_t source_size = 0;
};

class Parser {
 public:
  PosetDocument run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream words(raw);
      std::vector<std::string> w;
      for (std::string t; words >> t;) w.push_back(t);
      if (w.empty()) continue;
      for (const auto& t : w) {
        if (!is_token(t)) fail(ErrorCode::SyntaxError, "bad token '" + t + "'");
      }
      statement(w);
    }
    close_map();
    close_poset();
    if (doc_.posets.empty()) fail(ErrorCode::SyntaxError, "no poset declared");
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& what) const { throw ParseError(code, line_, what); }

  void arity(const std::vector<std::string>& w, std::size_t n) const {
    if (w.size() != n) fail(ErrorCode::SyntaxError, "'" + w[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
  }

  std::size_t lookup(const std::string& name) const {
    if (!open_) fail(ErrorCode::UnknownName, "unknown element " + name);
    auto it = open_->index.find(name);
    if (it == open_->index.end()) fail(ErrorCode::UnknownName, "unknown element " + name);
    return it->second;
  }

  void statement(const std::vector<std::string>& w) {
    const auto& kw = w[0];
    if (kw != "send") close_map();
    if (kw == "poset") {
      arity(w, 2);
      close_poset();
      for (const auto& b : doc_.posets) {
        if (b.name == w[1]) fail(ErrorCode::DuplicateName, "poset " + w[1] + " declared twice");
      }
      open_ = OpenPoset{w[1], line_, {}, {}, {}, {}};
    } else if (kw == "elem") {
      arity(w, 2);
      if (!open_) fail(ErrorCode::SyntaxError, "'elem' before 'poset'");
      if (!open_->covers.empty()) fail(ErrorCode::SyntaxError, "'elem' after 'cover'");
      if (open_->index.count(w[1])) fail(ErrorCode::DuplicateName, "element " + w[1] + " declared twice");
      if (open_->names.size() == kMaxCarrier) fail(ErrorCode::CarrierTooLarge, "more than 64 elements");
      open_->index[w[1]] = open_->names.size();
      open_->above.push_back(std::uint64_t{1} << open_->names.size());
      open_->names.push_back(w[1]);
    } else if (kw == "cover") {
      arity(w, 3);
      const auto lo = lookup(w[1]);
      const auto hi = lookup(w[2]);
      auto& above = open_->above;
      if (above[hi] >> lo & 1) fail(ErrorCode::CycleDetected, "cover " + w[1] + " " + w[2] + " closes a cycle");
      for (auto& row : above) {
        if (row >> lo & 1) row |= above[hi];
      }
      open_->covers.emplace_back(w[1], w[2]);
    } else if (kw == "map") {
      arity(w, 4);
      close_poset();
      for (const auto& m : doc_.maps) {
        if (m.name == w[1]) fail(ErrorCode::DuplicateName, "map " + w[1] + " declared twice");
      }
      const auto& from = find_poset(w[2]);
      find_poset(w[3]);
      map_ = OpenMap{MapBlock{w[1], w[2], w[3], {}}, line_, from.poset.size()};
    } else if (kw == "send") {
      arity(w, 3);
      if (!map_) fail(ErrorCode::SyntaxError, "'send' outside a map block");
      const auto& from = find_poset(map_->block.from).poset;
      const auto& to = find_poset(map_->block.to).poset;
      if (!from.find(w[1])) fail(ErrorCode::UnknownName, "unknown element " + w[1]);
      if (!to.find(w[2])) fail(ErrorCode::UnknownName, "unknown element " + w[2]);
      for (const auto& s : map_->block.sends) {
        if (s.first == w[1]) fail(ErrorCode::DuplicateName, w[1] + " is sent twice");
      }
      map_->block.sends.emplace_back(w[1], w[2]);
    } else {
      fail(ErrorCode::SyntaxError, "unknown keyword '" + kw + "'");
    }
  }

  const PosetBlock& find_poset(const std::string& name) const {
    for (const auto& b : doc_.posets) {
      if (b.name == name) return b;
    }
    fail(ErrorCode::UnknownName, "unknown poset " + name);
  }

  void close_poset() {
    if (!open_) return;
    if (open_->names.empty()) throw ParseError(ErrorCode::SyntaxError, open_->line, "poset has no elements");
    doc_.posets.push_back({open_->name, FinitePoset::from_up_masks(open_->names, open_->above)});
    open_.reset();
  }

  void close_map() {
    if (!map_) return;
    if (map_->block.sends.size() != map_->source_size) {
      throw ParseError(ErrorCode::SyntaxError, map_->line, "map " + map_->block.name + " is not total");
    }
    doc_.maps.push_back(std::move(map_->block));
    map_.reset();
  }

  PosetDocument doc_;
  std::optional<OpenPoset> open_;
  std::optional<OpenMap> map_;
  std::size_t line_ = 0;
};

}  // namespace

PosetDocument parse_poset_text(const std::string& text) { return Parser().run(text); }

PosetDocument read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poset_text(buf.str());
}

}  // namespace scd
