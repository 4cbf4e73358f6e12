#pragma once

#include <string>
#include <string_view>

#include "scd/harness/document.hpp"
#include "scd/harness/report.hpp"
#include "scd/topology.hpp"

namespace scd {

enum class Format { text, json, dot };

Format parse_format(std::string_view token);  // UnsupportedFormat

/// Output is deterministic. DOT draws the Hasse diagram with edges lower -> upper
/// and is only available for posets; other inputs throw UnsupportedFormat.
std::string emit(const FinitePoset& p, Format format, const std::string& name = "P");
std::string emit(const FiniteTopology& t, Format format);
std::string emit(const RunReport& r, Format format);

/// Text form of a whole document; reparses to the same posets and maps.
std::string emit(const PosetDocument& d);

}  // namespace scd
