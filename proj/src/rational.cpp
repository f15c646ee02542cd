#include "streamlab/rational.hpp"

#include <limits>
#include <numeric>

#include "streamlab/error.hpp"

namespace streamlab {

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = ~u128{0} >> 1;

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error("malformed rational '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("malformed rational '" + std::string(whole) + "'");
    if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
      throw Error("rational out of range '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

u128 sat_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

u128 sat_pow(std::uint64_t base, std::uint64_t exp) {
  u128 r = 1;
  for (std::uint64_t k = 0; k < exp && r < kSaturated; ++k) r = sat_mul(r, base);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Rational r;
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    r.num = parse_digits(text.substr(0, slash), text);
    r.den = parse_digits(text.substr(slash + 1), text);
  } else if (dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const std::int64_t whole = dot == 0 ? 0 : parse_digits(text.substr(0, dot), text);
    const std::int64_t part = frac.empty() ? 0 : parse_digits(frac, text);
    if (whole > std::numeric_limits<std::int64_t>::max() / scale - 1)
      throw Error("rational out of range '" + std::string(text) + "'");
    r.num = whole * scale + part;
    r.den = scale;
  } else {
    r.num = parse_digits(text, text);
  }
  if (r.num <= 0 || r.den <= 0) throw Error("rational must be positive: '" + std::string(text) + "'");
  const std::int64_t g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::uint64_t ceil_scaled_power(const Rational& r, std::uint64_t base, std::uint64_t exp) {
  const u128 top = sat_mul(static_cast<u128>(r.num), sat_pow(base, exp));
  if (top >= kSaturated) return std::numeric_limits<std::uint64_t>::max();
  const u128 q = (top + static_cast<u128>(r.den) - 1) / static_cast<u128>(r.den);
  if (q > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(q);
}

bool at_least_scaled_power(std::uint64_t i, const Rational& r, std::uint64_t base, std::uint64_t exp) {
  const u128 lhs = sat_mul(static_cast<u128>(i), static_cast<u128>(r.den));
  const u128 rhs = sat_mul(static_cast<u128>(r.num), sat_pow(base, exp));
  if (rhs >= kSaturated) return false;
  return lhs >= rhs;
}

}  // namespace streamlab
