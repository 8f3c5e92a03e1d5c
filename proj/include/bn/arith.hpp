#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bn {

using i64 = std::int64_t;
using i128 = __int128;
using Rational = boost::multiprecision::cpp_rational;

// floor(sqrt(n)) for n >= 0, exact
i64 isqrt(i64 n);

// ceil(sqrt(n)) for n >= 0, exact
i64 isqrt_ceil(i64 n);

// "p/q" or "p"
std::string to_string(const Rational& q);

// parses "p" or "p/q"
Rational parse_rational(const std::string& s);

}  // namespace bn
