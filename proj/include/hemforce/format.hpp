#pragma once

// Locale-independent number formatting and parsing used by every writer and
// reader in the toolkit. Nothing here consults the C or C++ locale.

#include <optional>
#include <string>
#include <string_view>

namespace hemforce::fmt {

/// Fixed notation, at most `decimals` fractional digits, trailing zeros and a
/// dangling decimal point trimmed. Negative zero prints as "0".
std::string fixed_trimmed(double v, int decimals = 6);

/// `significant` significant digits in general notation ("97.53", "1e-07").
std::string general(double v, int significant = 10);

/// Rounds to `significant` significant digits through a decimal round trip.
/// Used before handing values to the JSON writer so reports stay short and
/// byte-stable.
double round_significant(double v, int significant = 12);

/// Strict decimal: optional '-', digits, optional fraction, optional exponent.
/// No surrounding whitespace, no '+', no grouping, no inf/nan.
std::optional<double> parse_decimal(std::string_view text);

}  // namespace hemforce::fmt
