#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace advicepack {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational. cpp_rational keeps the value canonical: gcd(num, den) = 1
// and den > 0, which is exactly the invariant item sizes need.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Accepts "p/q", plain integers, and decimal strings such as "0.734375"
// (converted exactly, never through floating point).
std::optional<Rat> parse_rational(const std::string& text);
Rat parse_rational_or_throw(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rat& r);
double to_double(const Rat& r);

// ceil(log2(x)) for x >= 1; by convention ceil_log2(1) = 0 and ceil_log2(0) = 0.
int ceil_log2(const BigInt& x);
int ceil_log2_u64(std::uint64_t x);

bool is_item_size(const Rat& r);  // 0 < r <= 1

}  // namespace advicepack
