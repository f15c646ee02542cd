#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace streamlab {

/// Positive rational p/q used for Algorithm 1's confidence factor and the
/// algoctr catalog family.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

/// Accepts "p", "p/q", or a decimal such as "0.25" (converted exactly).
/// Throws Error unless the value is strictly positive.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// ⌈r · base^exp⌉, saturating at UINT64_MAX.
std::uint64_t ceil_scaled_power(const Rational& r, std::uint64_t base, std::uint64_t exp);

/// i ≥ r · base^exp, computed exactly.
bool at_least_scaled_power(std::uint64_t i, const Rational& r, std::uint64_t base, std::uint64_t exp);

}  // namespace streamlab
