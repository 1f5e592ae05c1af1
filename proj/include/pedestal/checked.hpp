#pragma once

#include <cstdint>

#include "pedestal/error.hpp"

namespace ped {

// All counts and coefficients are 64-bit; these throw ErrorKind::Overflow
// instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer addition overflows int64");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer multiplication overflows int64");
    return r;
}

} // namespace ped
