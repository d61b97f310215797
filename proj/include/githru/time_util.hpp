#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace githru {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

inline constexpr Timestamp kSecondsPerDay = 86400;

/// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" with optional fraction and
/// a trailing "Z" or "+HH:MM" / "-HH:MM" offset.
std::optional<Timestamp> parse_iso8601(std::string_view text);

std::string format_iso8601(Timestamp t);

/// "YYYY-MM-DD" of the UTC day containing t.
std::string format_day(Timestamp t);

/// Start of the UTC day containing t.
Timestamp floor_day(Timestamp t);

}  // namespace githru
