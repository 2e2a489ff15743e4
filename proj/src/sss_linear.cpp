#include "gf4sss/sss_linear.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>

#include "gf4sss/designs.hpp"
#include "gf4sss/errors.hpp"

namespace gf4sss {

void write_shares(std::ostream& out, const SharesFile& sf) {
    out << "scheme: " << sf.scheme << "\n";
    out << "code: " << sf.code_ref << "\n";
    for (const auto& [i, v] : sf.shares) out << "P" << i << " " << f4_symbol(v) << "\n";
}

SharesFile read_shares(std::istream& in) {
    SharesFile sf;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(start, end - start + 1);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("scheme:", 0) == 0) {
            sf.scheme = line.substr(line.find_first_not_of(" \t", 7));
        } else if (line.rfind("code:", 0) == 0) {
            sf.code_ref = line.substr(line.find_first_not_of(" \t", 5));
        } else if (line[0] == 'P') {
            size_t sp = line.find(' ');
            if (sp == std::string::npos || sp + 1 >= line.size())
                throw ParseError("bad share line '" + line + "'");
            int idx = 0;
            try {
                idx = std::stoi(line.substr(1, sp - 1));
            } catch (const std::exception&) {
                throw ParseError("bad participant index in '" + line + "'");
            }
            sf.shares[idx] = f4_parse_symbol(line[sp + 1]);
        } else {
            throw ParseError("unrecognized share-file line '" + line + "'");
        }
    }
    return sf;
}

LinearScheme make_linear_scheme(Code code) {
    if (code.kind() != CodeKind::linear) throw DomainError("linear scheme requires a linear code");
    if (code.k() == 0) throw ZeroCode("cannot share with the zero code");
    bool g0_nonzero = false;
    for (const Word& r : code.rows()) g0_nonzero = g0_nonzero || r.at(0) != F4::zero;
    if (!g0_nonzero) throw DomainError("dealer column g0 is zero");
    Code dual = dual_code(code);
    int m = code.length() - 1;
    return LinearScheme{std::move(code), std::move(dual), m};
}

LinearDeal deal_linear(const LinearScheme& scheme, F4 secret, uint64_t seed) {
    const Code& c = scheme.code;
    bool binary = c.field() == FieldTag::gf2;
    if (binary && (secret == F4::omega || secret == F4::omegabar))
        throw UnreachableSecret("secret must lie in GF(2) for a binary code");

    std::vector<F4> g0 = c.column(0);
    int pivot = -1;
    for (int j = 0; j < c.k(); ++j)
        if (g0[size_t(j)] != F4::zero) {
            pivot = j;
            break;
        }

    std::mt19937_64 rng(seed);
    std::vector<F4> u(size_t(c.k()), F4::zero);
    F4 partial = F4::zero;
    for (int j = 0; j < c.k(); ++j) {
        if (j == pivot) continue;
        u[size_t(j)] = binary ? F4(rng() & 1) : F4(rng() & 3);
        partial = partial + f4_mul(u[size_t(j)], g0[size_t(j)]);
    }
    u[size_t(pivot)] = f4_mul(secret + partial, f4_inv(g0[size_t(pivot)]));

    Word t = Word::zero(c.length());
    for (int j = 0; j < c.k(); ++j) t = t + c.rows()[size_t(j)].scaled(u[size_t(j)]);

    LinearDeal deal;
    deal.codeword = t;
    deal.info = std::move(u);
    for (int i = 1; i < c.length(); ++i) deal.shares[i] = t.at(i);
    return deal;
}

std::optional<std::map<int, F4>> find_recovery_linear(const Code& dual,
                                                      const std::set<int>& subset) {
    uint32_t allowed = 1;  // coordinate 0
    for (int i : subset) allowed |= 1u << i;
    std::optional<Word> best;
    for_each_codeword(dual, [&](const Word& w) {
        if (w.at(0) == F4::zero || w.weight() < 2) return;
        if ((w.support() & ~allowed) != 0) return;
        Word norm = w.scaled(f4_inv(w.at(0)));
        if (!best || norm.weight() < best->weight()) best = norm;
    });
    if (!best) return std::nullopt;
    std::map<int, F4> coeffs;
    for (int i = 1; i < best->length(); ++i)
        if (best->at(i) != F4::zero) coeffs[i] = best->at(i);
    return coeffs;
}

F4 recover_linear(const ShareMap& shares, const std::map<int, F4>& coeffs) {
    F4 s = F4::zero;
    for (const auto& [i, x] : coeffs) {
        auto it = shares.find(i);
        if (it == shares.end()) throw MissingShare("share P" + std::to_string(i) + " missing");
        s = s + f4_mul(x, it->second);
    }
    return s;
}

namespace {

std::vector<uint32_t> inclusion_minimal(std::vector<uint32_t> groups) {
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    std::vector<uint32_t> out;
    for (uint32_t g : groups) {
        bool minimal = true;
        for (uint32_t h : groups) {
            if (h != g && (h & g) == h) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(g);
    }
    return out;
}

}  // namespace

LinearAccess access_structure_linear(const LinearScheme& scheme) {
    LinearAccess acc;
    for_each_codeword(scheme.dual, [&](const Word& w) {
        if (w.at(0) != F4::one || w.weight() < 2) return;
        acc.gamma.push_back(w);
        ++acc.size_distribution[w.weight() - 1];
    });
    std::vector<uint32_t> groups;
    groups.reserve(acc.gamma.size());
    for (const Word& w : acc.gamma) groups.push_back(w.support() >> 1);
    acc.minimal_groups = inclusion_minimal(std::move(groups));
    for (uint32_t g : acc.minimal_groups) ++acc.minimal_size_distribution[std::popcount(g)];
    return acc;
}

Theorem1Report theorem1_counts(const Code& c) {
    if (c.kind() != CodeKind::linear) throw DomainError("theorem1_counts requires a linear code");
    if (c.has_zero_column()) throw DomainError("theorem1_counts requires nonzero columns");
    if (c.k() < 2) throw DomainError("theorem1_counts requires k >= 2");

    uint64_t nonzero = c.codeword_count() - 1;
    if (minimal_codewords(c, MinimalNotion::support).size() != nonzero)
        throw HypothesisFailed("some nonzero codeword of the code is not minimal");

    Theorem1Report rep;
    rep.q = c.field() == FieldTag::gf4 ? 4 : 2;
    rep.k = c.k();
    uint64_t qk1 = 1;
    for (int i = 0; i < rep.k - 1; ++i) qk1 *= uint64_t(rep.q);
    rep.formula_total = qk1;
    rep.formula_membership = uint64_t(rep.q - 1) * (qk1 / uint64_t(rep.q));

    // The scheme lives on C^dual, so its access groups come from C itself.
    std::vector<uint32_t> groups;
    for_each_codeword(c, [&](const Word& w) {
        if (w.at(0) == F4::one && w.weight() >= 2) groups.push_back(w.support() >> 1);
    });
    std::vector<uint32_t> minimal = inclusion_minimal(std::move(groups));
    rep.measured_total = minimal.size();
    rep.totals_match = rep.measured_total == rep.formula_total;

    std::vector<F4> g0 = c.column(0);
    for (int i = 1; i < c.length(); ++i) {
        std::vector<F4> gi = c.column(i);
        bool dict = false;
        for (F4 a : {F4::one, F4::omega, F4::omegabar}) {
            if (c.field() == FieldTag::gf2 && a != F4::one) continue;
            bool eq = true;
            for (int j = 0; j < c.k(); ++j) eq = eq && gi[size_t(j)] == f4_mul(a, g0[size_t(j)]);
            dict = dict || eq;
        }
        if (dict) rep.dictatorial.push_back(i);
        uint64_t count = 0;
        for (uint32_t g : minimal)
            if (g >> (i - 1) & 1) ++count;
        rep.membership[i] = count;
    }
    rep.membership_matches = true;
    for (const auto& [i, count] : rep.membership) {
        bool dict = std::find(rep.dictatorial.begin(), rep.dictatorial.end(), i) !=
                    rep.dictatorial.end();
        uint64_t expect = dict ? rep.formula_total : rep.formula_membership;
        if (count != expect) rep.membership_matches = false;
    }
    return rep;
}

std::map<int, uint64_t> size_distribution_linear(const LinearScheme& scheme) {
    WeightDistribution wd = weight_distribution(scheme.dual);
    int q = scheme.code.field() == FieldTag::gf4 ? 4 : 2;
    std::map<int, uint64_t> terms;
    for (int w = 1; w <= scheme.dual.length(); ++w) {
        if (!wd.counts[size_t(w)]) continue;
        auto check = verify_t_design(supports_of_weight(scheme.dual, w), 1);
        if (!check)
            throw NotOneDesign("weight-" + std::to_string(w) + " class is not a 1-design");
        terms[w - 1] = exact_div(check->lambda, uint64_t(q - 1), "size_distribution_linear");
    }
    return terms;
}

Accessibility accessibility_linear(uint64_t gamma_size, int m) {
    if (m < 1) throw DomainError("need at least one participant");
    return Accessibility{gamma_size, m};
}

}  // namespace gf4sss
