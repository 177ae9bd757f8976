#pragma once

// Exact integer types and the checked machine-word arithmetic used in the
// hot loops. Every algorithm that runs on std::int64_t detects overflow and
// is re-run on Integer by its caller, so no result ever depends on wrapping.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace morseforest {

using Integer = boost::multiprecision::cpp_int;

/// Thrown by the checked int64 kernels; callers retry with Integer.
struct WordOverflow : std::overflow_error {
    WordOverflow() : std::overflow_error("int64 overflow") {}
};

namespace arith {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw WordOverflow{};
    return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw WordOverflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw WordOverflow{};
    return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer neg(const Integer& a) { return -a; }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }
inline Integer abs(const Integer& a) { return boost::multiprecision::abs(a); }

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}
inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace arith

inline std::string to_string(const Integer& v) { return v.str(); }

/// Narrowing with a range check; used where counts must fit a machine word.
inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw WordOverflow{};
    return static_cast<std::int64_t>(v);
}

} // namespace morseforest
