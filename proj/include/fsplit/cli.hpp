#pragma once

// Command-line front end. JSON goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 on success (including mathematical no/unknown answers),
// 2 on parse or validation errors, 3 when the degree cap is exceeded,
// 4 on an internal consistency failure.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/presented_ring.hpp"

namespace fsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInternal = 4;

/// "p=2; vars=x,y; I=x*y". `I` may be omitted or empty for the zero ideal.
PresentedRing parse_ring_spec(std::string_view text, int degree_cap = kDefaultDegreeCap);
/// Comma-separated generators; "" and "0" give the zero ideal.
Ideal parse_ideal(std::string_view text, const RingPtr& ring);

/// `flag` wins over FSPLIT_DEGREE_CAP, which wins over the default.
int resolve_degree_cap(std::optional<int> flag);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsplit::cli
