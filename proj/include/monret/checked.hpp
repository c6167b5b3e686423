#pragma once

#include <cstdint>
#include <stdexcept>

namespace monret {

// Exponents and matrix entries are 64-bit with checked arithmetic:
// overflow is a reported error, never wraparound.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit exponent arithmetic overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit exponent arithmetic overflow in multiplication");
    return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit count overflow in multiplication");
    return r;
}

} // namespace monret
