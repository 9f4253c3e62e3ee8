#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wrat {

using Rational = mpq_class;

/// "n" for integers, "num/den" otherwise; the interchange format for every
/// rational written to JSON.
std::string to_string(const Rational &value);

/// Accepts "n", "-n", "num/den" (optionally signed). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &value) { return value.get_den() == 1; }

/// Membership in N = {0, 1, 2, ...}.
inline bool is_natural(const Rational &value) { return is_integer(value) && sgn(value) >= 0; }

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact conversion of an integral rational; throws if not integral or out of range.
long to_long(const Rational &value);

std::string join(const std::vector<Rational> &values, std::string_view sep = ",");

} // namespace wrat
