#include "scd/subset.hpp"

#include <string>

namespace scd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotACompleteLattice: return "NotACompleteLattice";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::ElementOutOfFamily: return "ElementOutOfFamily";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Subset::Subset(std::size_t carrier, std::uint64_t mask) : carrier_(carrier), mask_(mask) {
  if (carrier > kMaxCarrier) {
    throw Error(ErrorCode::CarrierTooLarge,
                "carrier of " + std::to_string(carrier) + " exceeds " + std::to_string(kMaxCarrier));
  }
  if ((mask & ~full_mask(carrier)) != 0) {
    throw Error(ErrorCode::CarrierMismatch, "mask has bits outside the carrier");
  }
}

Subset Subset::full_of(std::size_t carrier) { return Subset(carrier, full_mask(carrier)); }

Subset Subset::singleton(std::size_t carrier, std::size_t element) {
  if (element >= carrier) throw Error(ErrorCode::CarrierMismatch, "element outside carrier");
  return Subset(carrier, std::uint64_t{1} << element);
}

void Subset::require_same_carrier(const Subset& o) const {
  if (carrier_ != o.carrier_) {
    throw Error(ErrorCode::CarrierMismatch, "subsets of carriers " + std::to_string(carrier_) +
                                                " and " + std::to_string(o.carrier_));
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_carrier(other);
  return (mask_ & ~other.mask_) == 0;
}

bool Subset::intersects(const Subset& other) const {
  require_same_carrier(other);
  return (mask_ & other.mask_) != 0;
}

Subset Subset::complement() const { return Subset(carrier_, ~mask_ & full_mask(carrier_)); }

Subset Subset::operator|(const Subset& o) const {
  require_same_carrier(o);
  return Subset(carrier_, mask_ | o.mask_);
}

Subset Subset::operator&(const Subset& o) const {
  require_same_carrier(o);
  return Subset(carrier_, mask_ & o.mask_);
}

Subset Subset::operator-(const Subset& o) const {
  require_same_carrier(o);
  return Subset(carrier_, mask_ & ~o.mask_);
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_bit(mask_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace scd
