#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace conerc {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

// (a)_m = a (a+1) ... (a+m-1), exact
inline rational rising(const rational& a, long m) {
    rational acc = 1;
    for (long i = 0; i < m; ++i) acc *= (a + i);
    return acc;
}

// canonical string: "p" or "p/q"
inline std::string rat_str(const rational& r) {
    const bigint num = boost::multiprecision::numerator(r);
    const bigint den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace conerc
