#ifndef GF4SSS_SSS_LINEAR_HPP
#define GF4SSS_SSS_LINEAR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gf4sss/code.hpp"
#include "gf4sss/combinatorics.hpp"
#include "gf4sss/shares.hpp"

namespace gf4sss {

// Massey scheme on a linear code: the dealer holds coordinate 0, the
// participants P1..P_{n-1} hold the remaining coordinates of a random
// codeword whose coordinate 0 is the secret.
struct LinearScheme {
    Code code;
    Code dual;
    int participants;
};

LinearScheme make_linear_scheme(Code code);

struct LinearDeal {
    ShareMap shares;          // participant -> share
    Word codeword;            // full codeword (coordinate 0 = secret)
    std::vector<F4> info;     // the hidden information vector u
};

// Uniform over the q^{k-1} information vectors with u.g0 = s; one
// coordinate is pinned by elimination, the rest are drawn freely.
LinearDeal deal_linear(const LinearScheme& scheme, F4 secret, uint64_t seed);

// Minimum-weight dual codeword with c0 = 1 supported inside {0} + subset
// (ties broken by enumeration order), as participant -> coefficient.
// Absent when the subset cannot recover.
std::optional<std::map<int, F4>> find_recovery_linear(const Code& dual,
                                                      const std::set<int>& subset);

F4 recover_linear(const ShareMap& shares, const std::map<int, F4>& coeffs);

struct LinearAccess {
    // One entry per dual codeword with c0 = 1 and weight >= 2. Distinct
    // codewords may share a group; the counts deliberately keep them apart.
    std::vector<Word> gamma;
    std::map<int, uint64_t> size_distribution;  // group size -> count
    std::vector<uint32_t> minimal_groups;       // inclusion-minimal distinct groups
    std::map<int, uint64_t> minimal_size_distribution;
};

LinearAccess access_structure_linear(const LinearScheme& scheme);

// Minimal-access counting when every nonzero codeword of C is minimal:
// q^{k-1} groups in the scheme on the dual, membership (q-1)q^{k-2} for
// non-dictatorial participants. Everything is re-measured by enumeration.
struct Theorem1Report {
    int q = 0;
    int k = 0;
    uint64_t formula_total = 0;
    uint64_t formula_membership = 0;
    uint64_t measured_total = 0;
    std::vector<int> dictatorial;
    std::map<int, uint64_t> membership;  // participant -> minimal groups containing it
    bool totals_match = false;
    bool membership_matches = false;
};

// Throws HypothesisFailed when some nonzero codeword of C is not minimal.
Theorem1Report theorem1_counts(const Code& c);

// Size-distribution generating function sum lambda_1(D_i) y^{i-1} over the
// dual weight classes; for GF(4) codes lambda_1 is divided by q-1 = 3 so
// terms count scalar classes. NotOneDesign when a class is not a 1-design.
std::map<int, uint64_t> size_distribution_linear(const LinearScheme& scheme);

Accessibility accessibility_linear(uint64_t gamma_size, int m);

}  // namespace gf4sss

#endif
