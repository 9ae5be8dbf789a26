#pragma once

#include <cstdint>
#include <stdexcept>

namespace partid {

using i64 = std::int64_t;

/* All counts and weights in this library are exact. Overflow is a hard
 * error, never wraparound. */
inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

}  // namespace partid
