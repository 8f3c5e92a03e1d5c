#include "bn/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace bn {

i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    auto x = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && static_cast<i128>(x) * x > n) --x;
    while (static_cast<i128>(x + 1) * (x + 1) <= n) ++x;
    return x;
}

i64 isqrt_ceil(i64 n) {
    i64 x = isqrt(n);
    return static_cast<i128>(x) * x == n ? x : x + 1;
}

std::string to_string(const Rational& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(cpp_int(s));
    return Rational(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
}

}  // namespace bn
