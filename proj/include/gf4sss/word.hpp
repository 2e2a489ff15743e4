#ifndef GF4SSS_WORD_HPP
#define GF4SSS_WORD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gf4sss/field.hpp"

namespace gf4sss {

// A vector over GF(4) of length <= 32, packed two bits per coordinate
// (coordinate i occupies bits 2i and 2i+1). Addition is a single XOR and
// weight/support/cover tests are mask operations, which keeps exhaustive
// codeword sweeps cheap.
class Word {
  public:
    static constexpr int kMaxLength = 32;

    Word() = default;
    Word(int n, uint64_t bits) : n_(n), bits_(bits & full_mask(n)) {}

    static Word zero(int n) { return Word(n, 0); }

    static Word from_symbols(std::string_view s) {
        if (s.size() > kMaxLength) throw ParseError("word longer than 32 coordinates");
        Word w(int(s.size()), 0);
        for (int i = 0; i < int(s.size()); ++i) w.set(i, f4_parse_symbol(s[i]));
        return w;
    }

    int length() const { return n_; }
    uint64_t raw() const { return bits_; }

    F4 at(int i) const { return F4((bits_ >> (2 * i)) & 3u); }
    void set(int i, F4 v) {
        bits_ = (bits_ & ~(3ull << (2 * i))) | (uint64_t(v) << (2 * i));
    }

    int weight() const { return std::popcount(nonzero_even_mask()); }

    bool is_zero() const { return bits_ == 0; }

    uint32_t support() const {
        uint64_t nz = nonzero_even_mask();
        uint32_t m = 0;
        for (int i = 0; i < n_; ++i)
            if (nz >> (2 * i) & 1) m |= 1u << i;
        return m;
    }

    Word operator+(const Word& o) const {
        if (n_ != o.n_) throw LengthMismatch("adding words of different lengths");
        return Word(n_, bits_ ^ o.bits_);
    }

    Word scaled(F4 a) const {
        uint64_t lo = bits_ & kEven;
        uint64_t hi = (bits_ >> 1) & kEven;
        switch (a) {
            case F4::zero: return Word(n_, 0);
            case F4::one: return *this;
            case F4::omega: return Word(n_, ((lo ^ hi) << 1) | hi);
            case F4::omegabar: return Word(n_, (lo << 1) | (hi ^ lo));
        }
        return Word(n_, 0);
    }

    std::string symbols() const {
        std::string s(size_t(n_), '0');
        for (int i = 0; i < n_; ++i) s[size_t(i)] = f4_symbol(at(i));
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

    // Mask with bit 2i set iff coordinate i is nonzero.
    uint64_t nonzero_even_mask() const { return (bits_ | (bits_ >> 1)) & kEven; }

    static constexpr uint64_t full_mask(int n) {
        return n >= 32 ? ~0ull : (1ull << (2 * n)) - 1;
    }

  private:
    static constexpr uint64_t kEven = 0x5555555555555555ull;

    int n_ = 0;
    uint64_t bits_ = 0;
};

// x * y = sum Tr(x_i * conj(y_i)). Per coordinate the summand is 1 exactly
// when x_i and y_i are nonzero and distinct.
inline F2 trace_inner_product(const Word& x, const Word& y) {
    if (x.length() != y.length()) throw LengthMismatch("trace inner product length mismatch");
    uint64_t diff = x.raw() ^ y.raw();
    uint64_t diff_nz = (diff | (diff >> 1)) & 0x5555555555555555ull;
    uint64_t both = x.nonzero_even_mask() & y.nonzero_even_mask();
    return F2(std::popcount(diff_nz & both) & 1);
}

inline F4 euclidean_inner_product(const Word& x, const Word& y) {
    if (x.length() != y.length()) throw LengthMismatch("euclidean inner product length mismatch");
    constexpr uint64_t kEven = 0x5555555555555555ull;
    uint64_t a0 = x.raw() & kEven, a1 = (x.raw() >> 1) & kEven;
    uint64_t b0 = y.raw() & kEven, b1 = (y.raw() >> 1) & kEven;
    // (a0 + a1 w)(b0 + b1 w) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) w
    uint64_t p0 = (a0 & b0) ^ (a1 & b1);
    uint64_t p1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    uint8_t c0 = std::popcount(p0) & 1;
    uint8_t c1 = std::popcount(p1) & 1;
    return F4(uint8_t(c1 << 1 | c0));
}

// True iff every nonzero coordinate of a equals the matching coordinate of b
// (a is componentwise covered by b, written a <= b).
inline bool c_cover(const Word& a, const Word& b) {
    if (a.length() != b.length()) throw LengthMismatch("c-cover length mismatch");
    uint64_t diff = a.raw() ^ b.raw();
    uint64_t diff_nz = (diff | (diff >> 1)) & 0x5555555555555555ull;
    return (diff_nz & a.nonzero_even_mask()) == 0;
}

// supp(a) subseteq supp(b).
inline bool support_cover(const Word& a, const Word& b) {
    if (a.length() != b.length()) throw LengthMismatch("support-cover length mismatch");
    return (a.nonzero_even_mask() & ~b.nonzero_even_mask()) == 0;
}

}  // namespace gf4sss

#endif
