#ifndef GF4SSS_FIELD_HPP
#define GF4SSS_FIELD_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "gf4sss/errors.hpp"

namespace gf4sss {

enum class F2 : uint8_t { zero = 0, one = 1 };

// GF(4) = {0, 1, w, W} with W = w^2 = w + 1 and w^3 = 1.
// Two-bit encoding b1b0: 0=00, 1=01, w=10, W=11, so addition is XOR of the
// encodings and the trace is simply the high bit.
enum class F4 : uint8_t { zero = 0, one = 1, omega = 2, omegabar = 3 };

constexpr F2 f2_add(F2 a, F2 b) { return F2(uint8_t(a) ^ uint8_t(b)); }
constexpr F2 f2_mul(F2 a, F2 b) { return F2(uint8_t(a) & uint8_t(b)); }

constexpr F4 f4_add(F4 a, F4 b) { return F4(uint8_t(a) ^ uint8_t(b)); }

namespace detail {
// Multiplication table in the encoding above. Nonzero elements form the
// cyclic group 1 -> w -> W of order 3.
inline constexpr uint8_t kF4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
}  // namespace detail

constexpr F4 f4_mul(F4 a, F4 b) { return F4(detail::kF4Mul[uint8_t(a)][uint8_t(b)]); }

// Conjugation is squaring: fixes 0 and 1, swaps w and W.
constexpr F4 f4_conj(F4 a) { return f4_mul(a, a); }

// Tr(x) = x + x^2; zero on {0,1}, one on {w,W}.
constexpr F2 f4_trace(F4 a) { return F2(uint8_t(a) >> 1); }

constexpr F4 f4_inv(F4 a) {
    // 1^-1 = 1, w^-1 = W, W^-1 = w. Inverting zero is a caller bug.
    return a == F4::omega ? F4::omegabar : a == F4::omegabar ? F4::omega : a;
}

constexpr std::array<F4, 4> kF4Elements = {F4::zero, F4::one, F4::omega, F4::omegabar};

constexpr F4 operator+(F4 a, F4 b) { return f4_add(a, b); }
constexpr F4 operator*(F4 a, F4 b) { return f4_mul(a, b); }
constexpr F2 operator+(F2 a, F2 b) { return f2_add(a, b); }

// Serialization alphabet shared by every file format: 0, 1, w, W.
constexpr char f4_symbol(F4 a) {
    constexpr char syms[4] = {'0', '1', 'w', 'W'};
    return syms[uint8_t(a)];
}

constexpr std::optional<F4> f4_from_symbol(char c) {
    switch (c) {
        case '0': return F4::zero;
        case '1': return F4::one;
        case 'w': return F4::omega;
        case 'W': return F4::omegabar;
        default: return std::nullopt;
    }
}

inline F4 f4_parse_symbol(char c) {
    auto v = f4_from_symbol(c);
    if (!v) throw ParseError(std::string("invalid GF(4) symbol '") + c + "'");
    return *v;
}

}  // namespace gf4sss

#endif
