#include "scd/symset.hpp"

#include <algorithm>

namespace scd {

namespace {

void normalize(std::vector<Interval>& v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.family != b.family ? a.family < b.family : a.lo < b.lo;
  });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (iv.lo > iv.hi) continue;
    if (!out.empty() && out.back().family == iv.family &&
        (out.back().hi == kInfIndex || out.back().hi + 1 >= iv.lo)) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  v = std::move(out);
}

}  // namespace

SymSet::SymSet(std::vector<Interval> parts) : parts_(std::move(parts)) { normalize(parts_); }

bool SymSet::finite() const {
  return std::none_of(parts_.begin(), parts_.end(), [](const Interval& iv) { return iv.infinite(); });
}

bool SymSet::contains(ModelElement e) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) {
    return iv.family == e.family && iv.lo <= e.index && e.index <= iv.hi;
  });
}

SymSet SymSet::operator|(const SymSet& other) const {
  std::vector<Interval> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  return SymSet(std::move(v));
}

SymSet SymSet::operator&(const SymSet& other) const {
  std::vector<Interval> v;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      if (a.family != b.family) continue;
      const auto lo = std::max(a.lo, b.lo);
      const auto hi = std::min(a.hi, b.hi);
      if (lo <= hi) v.push_back({a.family, lo, hi});
    }
  }
  return SymSet(std::move(v));
}

SymSet SymSet::operator-(const SymSet& other) const {
  std::vector<Interval> cur = parts_;
  for (const auto& b : other.parts_) {
    std::vector<Interval> next;
    for (const auto& a : cur) {
      if (a.family != b.family || b.hi < a.lo || b.lo > a.hi) {
        next.push_back(a);
        continue;
      }
      if (a.lo < b.lo) next.push_back({a.family, a.lo, b.lo - 1});
      if (b.hi != kInfIndex && b.hi < a.hi) next.push_back({a.family, b.hi + 1, a.hi});
    }
    cur = std::move(next);
  }
  return SymSet(std::move(cur));
}

std::vector<ModelElement> SymSet::elements_up_to(std::uint64_t max_index) const {
  std::vector<ModelElement> out;
  for (const auto& iv : parts_) {
    for (auto i = iv.lo; i <= std::min(iv.hi, max_index); ++i) out.push_back({iv.family, i});
  }
  std::sort(out.begin(), out.end(), [](const ModelElement& a, const ModelElement& b) {
    return a.index != b.index ? a.index < b.index : a.family < b.family;
  });
  return out;
}

SymSet select(const SymSet& base, std::uint64_t horizon, const std::function<bool(ModelElement)>& pred) {
  std::vector<Interval> out;
  for (const auto& iv : base.parts()) {
    const auto last = std::min(iv.hi, std::max(horizon, iv.lo));
    bool value = false;
    for (auto i = iv.lo; i <= last; ++i) {
      value = pred({iv.family, i});
      if (value) out.push_back({iv.family, i, i});
    }
    if (value && iv.hi > last) out.push_back({iv.family, last + 1, iv.hi});
  }
  return SymSet(std::move(out));
}

}  // namespace scd
