#include "gf4sss/sss_additive.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "gf4sss/errors.hpp"
#include "gf4sss/linalg.hpp"

namespace gf4sss {

AdditiveScheme make_additive_scheme(Code code) {
    if (code.kind() != CodeKind::additive)
        throw DomainError("additive scheme requires an additive code");
    if (code.k() == 0) throw ZeroCode("cannot share with the zero code");
    bool g0_nonzero = false;
    for (const Word& r : code.rows()) g0_nonzero = g0_nonzero || r.at(0) != F4::zero;
    if (!g0_nonzero) throw DomainError("dealer column g0 is zero");
    Code dual = dual_code(code);
    int m = code.length() - 1;
    return AdditiveScheme{std::move(code), std::move(dual), m};
}

AdditiveDeal deal_additive(const AdditiveScheme& scheme, F4 secret, uint64_t seed) {
    const Code& c = scheme.code;
    // u.g0 = s splits into two GF(2) equations, one per component of GF(4).
    uint64_t eq_lo = 0, eq_hi = 0;
    for (int j = 0; j < c.k(); ++j) {
        uint8_t g = uint8_t(c.rows()[size_t(j)].at(0));
        if (g & 1) eq_lo |= 1ull << j;
        if (g & 2) eq_hi |= 1ull << j;
    }
    auto sol = linalg::gf2_solve({eq_lo, eq_hi}, {uint8_t(secret) & 1, uint8_t(secret) >> 1},
                                 c.k());
    if (!sol)
        throw UnreachableSecret(std::string("secret '") + f4_symbol(secret) +
                                "' is not in the image of u -> u.g0");

    std::mt19937_64 rng(seed);
    uint64_t u = sol->particular;
    for (uint64_t kv : sol->kernel)
        if (rng() & 1) u ^= kv;

    Word t = Word::zero(c.length());
    for (int j = 0; j < c.k(); ++j)
        if (u >> j & 1) t = t + c.rows()[size_t(j)];

    AdditiveDeal deal;
    deal.codeword = t;
    deal.info = u;
    for (int i = 1; i < c.length(); ++i) deal.shares[i] = t.at(i);
    return deal;
}

HClasses extract_H(const Code& dual) {
    HClasses out;
    for_each_codeword(dual, [&](const Word& w) {
        F4 w0 = w.at(0);
        if (w0 == F4::zero || w.weight() < 2) return;
        RecoveryVector rv;
        rv.word = w;
        rv.klass = int(uint8_t(w0));
        rv.group = w.support() >> 1;
        out.h[size_t(rv.klass - 1)].push_back(rv);
    });
    return out;
}

F2 alpha_from_recovery(const RecoveryVector& x, const ShareMap& shares) {
    F2 alpha = F2::zero;
    for (int i = 1; i < x.word.length(); ++i) {
        F4 xi = x.word.at(i);
        if (xi == F4::zero) continue;
        auto it = shares.find(i);
        if (it == shares.end()) throw MissingShare("share P" + std::to_string(i) + " missing");
        alpha = alpha + f4_trace(f4_mul(it->second, f4_conj(xi)));
    }
    return alpha;
}

F4 secret_from_alphas(int class_a, F2 alpha_a, int class_b, F2 alpha_b) {
    if (class_a == class_b) throw SameClass("recovery vectors from the same class");
    for (F4 s : kF4Elements) {
        F2 ea = f4_trace(f4_mul(s, f4_conj(F4(uint8_t(class_a)))));
        F2 eb = f4_trace(f4_mul(s, f4_conj(F4(uint8_t(class_b)))));
        if (ea == alpha_a && eb == alpha_b) return s;
    }
    throw DomainError("inconsistent alpha pair");  // unreachable: the rows cover all pairs
}

F4 recover_additive(const RecoveryVector& x, const RecoveryVector& y, const ShareMap& shares) {
    if (x.klass == y.klass) throw SameClass("recovery vectors from the same class");
    return secret_from_alphas(x.klass, alpha_from_recovery(x, shares), y.klass,
                              alpha_from_recovery(y, shares));
}

uint64_t mu_count(const std::vector<RecoveryVector>& h_i, int p) {
    uint64_t count = 0;
    for (const RecoveryVector& rv : h_i)
        if (rv.word.weight() == p) ++count;
    return count;
}

PairGF pair_generating_function(const std::vector<RecoveryVector>& h_i,
                                const std::vector<RecoveryVector>& h_j) {
    if (!h_i.empty() && !h_j.empty() && h_i.front().klass == h_j.front().klass)
        throw SameClass("pair generating function needs distinct classes");
    std::map<int, uint64_t> wi, wj;
    for (const RecoveryVector& rv : h_i) ++wi[rv.word.weight()];
    for (const RecoveryVector& rv : h_j) ++wj[rv.word.weight()];
    PairGF gf;
    for (const auto& [p, a] : wi)
        for (const auto& [q, b] : wj) {
            gf.terms[{p - 1, q - 1}] += a * b;
            gf.total += a * b;
        }
    return gf;
}

PairGF ordered_pair_generating_function(const HClasses& h) {
    PairGF sum;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            PairGF gf = pair_generating_function(h.of(i), h.of(j));
            for (const auto& [pq, c] : gf.terms) sum.terms[pq] += c;
            sum.total += gf.total;
        }
    return sum;
}

MinimalPairs minimal_pairs(const HClasses& h) {
    MinimalPairs mp;
    for (int k = 0; k < 3; ++k) {
        const std::vector<RecoveryVector>& cls = h.h[size_t(k)];
        mp.minimal[size_t(k)].assign(cls.size(), 1);
        for (size_t a = 0; a < cls.size(); ++a) {
            for (size_t b = 0; b < cls.size(); ++b) {
                if (a == b) continue;
                if (c_cover(cls[b].word, cls[a].word)) {
                    mp.minimal[size_t(k)][a] = 0;
                    break;
                }
            }
        }
        uint64_t count = 0;
        for (size_t a = 0; a < cls.size(); ++a) {
            if (!mp.minimal[size_t(k)][a]) continue;
            ++count;
            mp.component_sizes.insert(cls[a].word.weight() - 1);
        }
        mp.minimal_count[size_t(k)] = count;
    }
    mp.canonical_count = mp.minimal_count[0] * mp.minimal_count[1];
    mp.all_class_pairs_count = mp.minimal_count[0] * mp.minimal_count[1] +
                               mp.minimal_count[0] * mp.minimal_count[2] +
                               mp.minimal_count[1] * mp.minimal_count[2];
    std::map<int, uint64_t> w1, w2;
    for (size_t a = 0; a < h.h[0].size(); ++a)
        if (mp.minimal[0][a]) ++w1[h.h[0][a].word.weight()];
    for (size_t a = 0; a < h.h[1].size(); ++a)
        if (mp.minimal[1][a]) ++w2[h.h[1][a].word.weight()];
    for (const auto& [p, ca] : w1)
        for (const auto& [q, cb] : w2) mp.canonical_terms[{p - 1, q - 1}] += ca * cb;
    return mp;
}

CountMinimalReport count_minimal_additive(const AdditiveScheme& scheme) {
    const Code& c = scheme.code;
    uint64_t nonzero = c.codeword_count() - 1;
    if (minimal_codewords(c, MinimalNotion::c_cover).size() != nonzero)
        throw HypothesisFailed("some nonzero codeword is not c-cover-minimal");
    if (c.k() < 2) throw DomainError("count_minimal_additive requires k >= 2");

    CountMinimalReport rep;
    rep.k = c.k();
    rep.formula_total = 3ull << (2 * rep.k - 4);
    if (2 * rep.k >= 8) rep.formula_membership = 27ull << (2 * rep.k - 8);

    HClasses h = extract_H(scheme.dual);
    MinimalPairs mp = minimal_pairs(h);
    for (int k = 0; k < 3; ++k) rep.class_sizes[size_t(k)] = h.h[size_t(k)].size();
    rep.brute_single_pair = mp.canonical_count;
    rep.brute_all_class_pairs = mp.all_class_pairs_count;

    std::vector<F4> g0 = c.column(0);
    for (int i = 1; i < c.length(); ++i)
        if (c.column(i) == g0) rep.dictatorial.push_back(i);

    for (int i = 1; i < c.length(); ++i) {
        std::array<uint64_t, 3> with_i{};
        for (int k = 0; k < 3; ++k)
            for (size_t a = 0; a < h.h[size_t(k)].size(); ++a)
                if (mp.minimal[size_t(k)][a] && (h.h[size_t(k)][a].group >> (i - 1) & 1))
                    ++with_i[size_t(k)];
        rep.membership_measured[i] =
            with_i[0] * with_i[1] + with_i[0] * with_i[2] + with_i[1] * with_i[2];
    }

    if (rep.brute_single_pair != rep.formula_total)
        rep.flags.push_back("theorem total 3*2^(2k-4) = " + std::to_string(rep.formula_total) +
                            " counts all three class pairs; single-pair enumeration gives " +
                            std::to_string(rep.brute_single_pair));
    if (rep.brute_all_class_pairs != rep.formula_total)
        rep.flags.push_back("all-class-pairs enumeration " +
                            std::to_string(rep.brute_all_class_pairs) +
                            " disagrees with formula " + std::to_string(rep.formula_total));
    if (rep.formula_membership) {
        for (const auto& [i, count] : rep.membership_measured) {
            bool dict = std::find(rep.dictatorial.begin(), rep.dictatorial.end(), i) !=
                        rep.dictatorial.end();
            if (!dict && count != *rep.formula_membership)
                rep.flags.push_back("P" + std::to_string(i) + " membership " +
                                    std::to_string(count) + " differs from formula " +
                                    std::to_string(*rep.formula_membership));
        }
    }
    return rep;
}

Accessibility accessibility_additive(uint64_t pair_count, int m) {
    if (m < 1) throw DomainError("need at least one participant");
    return Accessibility{pair_count, 2 * m};
}

AnalyticAccess analytic_access_from_enumerator(const WeightDistribution& wd, int n) {
    AnalyticAccess out;
    out.n = n;
    out.m = n - 1;
    out.strength = extremal_strengths(n).classic;
    int d = wd.min_distance();

    std::vector<int> weights;
    for (int w = 1; w <= n; ++w)
        if (w < int(wd.counts.size()) && wd.counts[size_t(w)]) weights.push_back(w);

    uint64_t class_total = 0;
    for (int w : weights) {
        uint64_t a_w = wd.counts[size_t(w)];
        uint64_t lt = exact_div(a_w * binomial(w, out.strength), binomial(n, out.strength),
                                "analytic lambda_t");
        uint64_t l1 = lambda_convert({out.strength, n, w, lt}, 1);
        uint64_t mu = exact_div(l1, 3, "analytic mu");
        if (mu != exact_div(a_w * uint64_t(w), uint64_t(3 * n), "analytic mu cross-check"))
            throw NonIntegral("lambda chain and double counting disagree");
        out.lambda_t[w] = lt;
        out.lambda_1[w] = l1;
        out.mu[w] = mu;
        class_total += mu;
    }
    for (int p : weights)
        for (int q : weights) {
            uint64_t c = out.mu[p] * out.mu[q];
            out.pairs.terms[{p - 1, q - 1}] = c;
            out.pairs.total += c;
        }
    out.ordered_total = 6 * out.pairs.total;
    out.accessibility = accessibility_additive(class_total * class_total, out.m);

    for (int w : weights) {
        // A weight-w word c-covering a weight-w' word forces a codeword of
        // weight w - w'; impossible while w - w' < d.
        bool can_cover = false;
        for (int w2 : weights) can_cover = can_cover || (w2 > 0 && w2 <= w - d);
        if (can_cover)
            out.minimal_undetermined_sizes.insert(w - 1);
        else
            out.minimal_guaranteed_sizes.insert(w - 1);
    }
    return out;
}

CheaterResult detect_cheaters(const Code& code, const ShareMap& claimed,
                              std::optional<F4> secret) {
    int n = code.length();
    Word cw = Word::zero(n);
    for (int i = 1; i < n; ++i) {
        auto it = claimed.find(i);
        if (it == claimed.end())
            throw MissingShare("cheater detection needs all " + std::to_string(n - 1) +
                               " claimed shares");
        cw.set(i, it->second);
    }
    if (secret) cw.set(0, *secret);

    int d = minimum_distance(code);
    int radius = (d - 1) / 2;

    int best = n + 1;
    Word best_word = Word::zero(n);
    int within_radius = 0;
    constexpr uint64_t kParticipantMask = ~3ull;  // drop coordinate 0
    for_each_codeword(code, [&](const Word& c) {
        if (secret && c.at(0) != *secret) return;
        uint64_t diff = (c.raw() ^ cw.raw());
        uint64_t nz = (diff | (diff >> 1)) & 0x5555555555555555ull & kParticipantMask;
        int dist = std::popcount(nz);
        if (dist < best) {
            best = dist;
            best_word = c;
        }
        if (dist <= radius) ++within_radius;
    });

    CheaterResult res;
    res.distance = best;
    if (best == 0) {
        res.status = CheaterResult::Status::clean;
    } else if (best <= radius && within_radius == 1) {
        res.status = CheaterResult::Status::corrected;
        for (int i = 1; i < n; ++i)
            if (best_word.at(i) != cw.at(i)) res.cheaters.insert(i);
    } else if (best <= d - 1) {
        res.status = CheaterResult::Status::detected_only;
    } else {
        res.status = CheaterResult::Status::undecidable;
    }
    return res;
}

std::string recovery_listing(const HClasses& h) {
    std::ostringstream os;
    for (int k = 1; k <= 3; ++k)
        for (const RecoveryVector& rv : h.of(k))
            os << "H" << k << " " << rv.word.weight() << " " << rv.word.symbols() << "\n";
    return os.str();
}

}  // namespace gf4sss
