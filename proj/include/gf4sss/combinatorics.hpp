#ifndef GF4SSS_COMBINATORICS_HPP
#define GF4SSS_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "gf4sss/errors.hpp"

namespace gf4sss {

inline uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: r starts as C(n - k + i - 1, i - 1)
        r = r * uint64_t(n - k + i) / uint64_t(i);
    }
    return r;
}

// Exact division helper; the callers treat a remainder as a parameter error.
inline uint64_t exact_div(uint64_t num, uint64_t den, const char* what) {
    if (den == 0 || num % den != 0)
        throw NonIntegral(std::string(what) + ": " + std::to_string(num) + " not divisible by " +
                          std::to_string(den));
    return num / den;
}

// Colex rank of a strictly increasing t-subset: sum C(elems[j], j+1).
inline uint64_t combination_rank(const int* elems, int t) {
    uint64_t r = 0;
    for (int j = 0; j < t; ++j) r += binomial(elems[j], j + 1);
    return r;
}

template <class Fn>
void for_each_combination(int v, int t, Fn&& fn) {
    if (t < 0 || t > v) return;
    std::vector<int> c(static_cast<size_t>(t), 0);
    for (int i = 0; i < t; ++i) c[size_t(i)] = i;
    while (true) {
        fn(c.data());
        int i = t - 1;
        while (i >= 0 && c[size_t(i)] == v - t + i) --i;
        if (i < 0) break;
        ++c[size_t(i)];
        for (int j = i + 1; j < t; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
    }
}

// Exact dyadic value count / 2^log2_den, kept unreduced so reports can show
// the raw counts the analyses produce.
struct Accessibility {
    uint64_t count = 0;
    int log2_den = 0;

    uint64_t denominator() const { return 1ull << log2_den; }

    std::string fraction_string() const {
        return std::to_string(count) + "/" + std::to_string(denominator());
    }

    std::string reduced_string() const {
        uint64_t n = count, d = denominator();
        while (n && (n & 1) == 0 && d > 1) {
            n >>= 1;
            d >>= 1;
        }
        return std::to_string(n) + "/" + std::to_string(d);
    }

    // Finite (dyadic) decimal expansion, exact, trailing zeros trimmed.
    std::string decimal_string() const {
        uint64_t ip = count >> log2_den;
        std::string s = std::to_string(ip);
        uint64_t mask = denominator() - 1;
        unsigned __int128 r = count & mask;
        if (r == 0) return s;
        s += '.';
        while (r != 0) {
            r *= 10;
            s += char('0' + int(r >> log2_den));
            r &= mask;
        }
        return s;
    }
};

}  // namespace gf4sss

#endif
