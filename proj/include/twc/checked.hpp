#ifndef TWC_CHECKED_HPP
#define TWC_CHECKED_HPP

#include <string>

#include "twc/errors.hpp"

namespace twc {

// All table arithmetic is exact; any wraparound is a defect, so the
// helpers throw instead of truncating.
inline long long mul_exact(long long a, long long b, const char* where = "mul") {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow(where);
    return r;
}

inline long long add_exact(long long a, long long b, const char* where = "add") {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow(where);
    return r;
}

inline long long pow_exact(long long base, long long exp, const char* where = "pow") {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) r = mul_exact(r, base, where);
    return r;
}

}  // namespace twc

#endif
