#pragma once

// Exact rational helpers over GMP's mpq_class. Every payoff, parameter and
// ratio in the library is a Rational so that region boundaries such as
// delta == cost or (cost - delta) == delta^2 are decided exactly.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace netform {

using Rational = mpq_class;

/// Parses "7/20", "-3/4", "0.35", "1" or "1e-2"-free decimal forms exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `places` digits, computed
/// from the exact value (no floating point), e.g. 0.6 -> "0.600000".
std::string format_decimal(const Rational& value, int places);

/// Shortest exact decimal when the value terminates within `max_places`
/// digits ("0.05", "1", "2.25"); otherwise the rounded decimal.
std::string format_compact(const Rational& value, int max_places = 12);

/// Nearest integer with halves rounded up (towards +infinity).
mpz_class round_half_up(const Rational& value);

double to_double(const Rational& value);

/// lo, lo + step, ... up to and including hi. Throws std::invalid_argument
/// unless step > 0, lo <= hi and (hi - lo) is a whole multiple of step.
std::vector<Rational> rational_range(const Rational& lo, const Rational& hi, const Rational& step);

}  // namespace netform
