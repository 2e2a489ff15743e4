#include "gf4sss/designs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gf4sss/errors.hpp"

namespace gf4sss {

int BlockMultiset::block_size() const {
    if (blocks.empty()) throw EmptyBlockSet("no blocks");
    return std::popcount(blocks.front());
}

BlockMultiset supports_of_weight(const Code& code, int w) {
    BlockMultiset bs;
    bs.v = code.length();
    for_each_codeword(code, [&](const Word& c) {
        if (c.weight() == w) bs.blocks.push_back(c.support());
    });
    return bs;
}

BlockMultiset supports_of(const std::vector<Word>& words, int v) {
    BlockMultiset bs;
    bs.v = v;
    for (const Word& w : words) bs.blocks.push_back(w.support());
    return bs;
}

std::optional<TDesignCheck> verify_t_design(const BlockMultiset& blocks, int t) {
    if (blocks.blocks.empty()) throw EmptyBlockSet("verify_t_design on empty block set");
    int kb = blocks.block_size();
    if (t < 0 || t > kb) throw DomainError("t exceeds the block size");
    if (t > 8) throw DomainError("t larger than 8 is unsupported");
    for (uint32_t b : blocks.blocks)
        if (std::popcount(b) != kb) throw DomainError("blocks of mixed sizes");

    std::vector<uint64_t> counter(size_t(binomial(blocks.v, t)), 0);
    std::vector<int> pts;
    pts.reserve(size_t(kb));
    for (uint32_t b : blocks.blocks) {
        pts.clear();
        for (int i = 0; i < blocks.v; ++i)
            if (b >> i & 1) pts.push_back(i);
        for_each_combination(kb, t, [&](const int* sub) {
            int elems[8];
            for (int j = 0; j < t; ++j) elems[j] = pts[size_t(sub[j])];
            ++counter[size_t(combination_rank(elems, t))];
        });
    }
    uint64_t lambda = counter.empty() ? 0 : counter[0];
    for (uint64_t c : counter)
        if (c != lambda) return std::nullopt;

    TDesignCheck res;
    res.lambda = lambda;
    std::vector<uint32_t> sorted = blocks.blocks;
    std::sort(sorted.begin(), sorted.end());
    unsigned g = 0;
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        unsigned mult = unsigned(j - i);
        ++res.multiplicity_histogram[mult];
        g = std::gcd(g, mult);
        i = j;
    }
    res.multiplicity_gcd = g == 0 ? 1 : g;
    if (res.multiplicity_gcd > 1 && lambda % res.multiplicity_gcd == 0)
        res.lambda_reduced = lambda / res.multiplicity_gcd;
    return res;
}

uint64_t lambda_convert(const DesignParams& p, int i) {
    if (i < 0 || i > p.t) throw DomainError("lambda_convert requires 0 <= i <= t");
    return exact_div(p.lambda * binomial(p.v - i, p.t - i), binomial(p.kb - i, p.t - i),
                     "lambda_convert");
}

std::optional<uint64_t> verify_generalized_design(const std::vector<Word>& words, int t) {
    if (words.empty()) throw EmptyBlockSet("verify_generalized_design on empty word set");
    int n = words.front().length();
    int k = words.front().weight();
    for (const Word& w : words) {
        if (w.length() != n) throw LengthMismatch("words of mixed lengths");
        if (w.weight() != k) throw MixedWeights("words of mixed weights");
    }
    if (t < 0 || t > k) throw DomainError("t exceeds the common weight");
    if (t > 8) throw DomainError("t larger than 8 is unsupported");

    // One counter per weight-t vector e of GF(4)^n: colex rank of the
    // support times the 3^t value patterns. Each word c-covers exactly the
    // restrictions of itself to t-subsets of its support.
    uint64_t pow3 = 1;
    for (int j = 0; j < t; ++j) pow3 *= 3;
    std::vector<uint64_t> counter(size_t(binomial(n, t) * pow3), 0);
    std::vector<int> pts;
    for (const Word& w : words) {
        pts.clear();
        for (int i = 0; i < n; ++i)
            if (w.at(i) != F4::zero) pts.push_back(i);
        for_each_combination(k, t, [&](const int* sub) {
            int elems[8];
            uint64_t value_code = 0;
            for (int j = 0; j < t; ++j) {
                elems[j] = pts[size_t(sub[j])];
                value_code = value_code * 3 + uint64_t(uint8_t(w.at(elems[j])) - 1);
            }
            ++counter[size_t(combination_rank(elems, t) * pow3 + value_code)];
        });
    }
    uint64_t mu = counter.empty() ? 0 : counter[0];
    for (uint64_t c : counter)
        if (c != mu) return std::nullopt;
    return mu;
}

namespace {

// Largest w <= n with w - floor((w+q-2)/(q-1)) < d (w = n when q = 2).
int am_weight_limit(int n, int d, int q) {
    int best = 0;
    for (int w = 0; w <= n; ++w)
        if (w - (w + q - 2) / (q - 1) < d) best = w;
    return best;
}

AmReport am_report_impl(const Code& code, int t, bool additive) {
    int q = additive || code.field() == FieldTag::gf4 ? 4 : 2;
    WeightDistribution wd = weight_distribution(code);
    int d = wd.min_distance();
    if (t <= 0 || t >= d) throw DomainError("Assmus-Mattson requires 0 < t < d");
    Code dual = dual_code(code);
    WeightDistribution wd_dual = weight_distribution(dual);
    int d_dual = wd_dual.min_distance();
    int n = code.length();

    AmReport rep;
    rep.t = t;
    rep.d = d;
    rep.d_dual = d_dual;
    for (int i = 1; i <= n - t; ++i)
        if (wd_dual.counts[size_t(i)]) ++rep.s;
    rep.applies = rep.s <= d - t;

    int w_limit = additive ? n : am_weight_limit(n, d, q);
    int w_limit_dual = additive ? n - t : std::min(n - t, am_weight_limit(n, d_dual, q));
    for (int i = d; i <= w_limit; ++i)
        if (wd.counts[size_t(i)]) rep.primal_weights.push_back(i);
    for (int i = d_dual; i <= w_limit_dual; ++i)
        if (wd_dual.counts[size_t(i)]) rep.dual_weights.push_back(i);

    if (rep.applies) {
        bool self_dual = same_codeword_set(code, dual);
        for (int w : rep.primal_weights) {
            auto check = verify_t_design(supports_of_weight(code, w), t);
            if (check) rep.verified[w] = *check;
        }
        for (int w : rep.dual_weights) {
            if (self_dual && rep.verified.count(w)) continue;
            auto check = verify_t_design(supports_of_weight(dual, w), t);
            if (check && !rep.verified.count(w)) rep.verified[w] = *check;
        }
    }
    return rep;
}

}  // namespace

AmReport am_linear_report(const Code& code, int t) {
    if (code.kind() != CodeKind::linear) throw DomainError("am_linear_report requires a linear code");
    return am_report_impl(code, t, false);
}

AmReport am_additive_report(const Code& code, int t) {
    if (code.kind() != CodeKind::additive)
        throw DomainError("am_additive_report requires an additive code");
    return am_report_impl(code, t, true);
}

ExtremalStrengths extremal_strengths(int n) {
    if (n <= 0 || n % 2 != 0) throw UnsupportedLength("length must be 0, 2 or 4 mod 6");
    ExtremalStrengths st;
    switch (n % 6) {
        case 0:
            st.classic = 5;
            st.generalized = 2;
            break;
        case 2:
            st.classic = 3;
            st.generalized = 1;
            break;
        case 4:
            st.classic = 1;
            break;
        default:
            throw UnsupportedLength("length must be 0, 2 or 4 mod 6");
    }
    return st;
}

bool one_design_condition(int n, int d) { return 3 * d >= n + 2; }

uint64_t lambda1_from_enumerator(uint64_t a_w, int w, int n) {
    return exact_div(a_w * uint64_t(w), uint64_t(n), "lambda1_from_enumerator");
}

}  // namespace gf4sss
