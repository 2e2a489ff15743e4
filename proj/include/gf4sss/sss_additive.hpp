#ifndef GF4SSS_SSS_ADDITIVE_HPP
#define GF4SSS_SSS_ADDITIVE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gf4sss/code.hpp"
#include "gf4sss/combinatorics.hpp"
#include "gf4sss/designs.hpp"
#include "gf4sss/shares.hpp"

namespace gf4sss {

// The 2-step scheme on an additive (n, 2^k) code over GF(4): shares are
// GF(4) coordinates of uG for a GF(2) information vector u, and recovery
// needs two dual codewords whose coordinate 0 falls in distinct classes.
struct AdditiveScheme {
    Code code;
    Code dual;
    int participants;
};

AdditiveScheme make_additive_scheme(Code code);

struct AdditiveDeal {
    ShareMap shares;
    Word codeword;
    uint64_t info = 0;  // the hidden u, bit j = u_j
};

// Uniform over the information vectors with u.g0 = s; UnreachableSecret
// when s is outside the GF(2)-image of u -> u.g0.
AdditiveDeal deal_additive(const AdditiveScheme& scheme, F4 secret, uint64_t seed);

// A dual codeword usable for recovery: nonzero coordinate 0 and at least
// one participant coordinate. klass 1/2/3 corresponds to word[0] = 1/w/W.
struct RecoveryVector {
    Word word;
    int klass = 0;
    uint32_t group = 0;  // bit i = participant i in the support
};

struct HClasses {
    std::array<std::vector<RecoveryVector>, 3> h;

    const std::vector<RecoveryVector>& of(int klass) const { return h[size_t(klass - 1)]; }
};

HClasses extract_H(const Code& dual);

// alpha = sum over the group of Tr(t_i * conj(x_i)), which equals
// Tr(s * conj(x_0)) for any consistent share vector.
F2 alpha_from_recovery(const RecoveryVector& x, const ShareMap& shares);

// The four secrets give alpha triples (0,0,0), (0,1,1), (1,0,1), (1,1,0)
// for s = 0, 1, w, W; any two coordinates identify the row.
F4 secret_from_alphas(int class_a, F2 alpha_a, int class_b, F2 alpha_b);

F4 recover_additive(const RecoveryVector& x, const RecoveryVector& y, const ShareMap& shares);

// Number of weight-p vectors in the class (all of them c-cover the weight-1
// anchor e1 whose coordinate 0 carries the class value).
uint64_t mu_count(const std::vector<RecoveryVector>& h_i, int p);

struct PairGF {
    std::map<std::pair<int, int>, uint64_t> terms;  // (p-1, q-1) -> count
    uint64_t total = 0;
};

// Size-distribution generating function of H_i x H_j, one ordered class
// pair. SameClass when i = j.
PairGF pair_generating_function(const std::vector<RecoveryVector>& h_i,
                                const std::vector<RecoveryVector>& h_j);

// The literal sum over all six ordered class pairs.
PairGF ordered_pair_generating_function(const HClasses& h);

struct MinimalPairs {
    // minimal[k][idx]: member idx of class k+1 c-covers no other member of
    // its class, so pairs built from it are minimal access groups.
    std::array<std::vector<char>, 3> minimal;
    std::array<uint64_t, 3> minimal_count{};
    uint64_t canonical_count = 0;        // minimal pairs in H1 x H2
    uint64_t all_class_pairs_count = 0;  // summed over {1,2},{1,3},{2,3}
    std::map<std::pair<int, int>, uint64_t> canonical_terms;
    std::set<int> component_sizes;  // group sizes occurring among minimal members
};

MinimalPairs minimal_pairs(const HClasses& h);

// Counting theorem for schemes whose code has only c-cover-minimal nonzero
// codewords: 3*2^{2k-4} minimal access groups, 3^3*2^{2k-8} per
// non-dictatorial participant. Formula and enumeration are both reported
// and disagreements are flagged, never asserted away.
struct CountMinimalReport {
    int k = 0;
    uint64_t formula_total = 0;
    std::optional<uint64_t> formula_membership;
    uint64_t brute_single_pair = 0;      // one class pair, the convention of the
                                         // worked examples
    uint64_t brute_all_class_pairs = 0;  // three unordered class pairs
    std::array<uint64_t, 3> class_sizes{};
    std::vector<int> dictatorial;  // columns identical to g0
    std::map<int, uint64_t> membership_measured;  // both components contain P_i,
                                                  // all class pairs
    std::vector<std::string> flags;
};

CountMinimalReport count_minimal_additive(const AdditiveScheme& scheme);

Accessibility accessibility_additive(uint64_t pair_count, int m);

// Everything the pair structure needs, derived from the weight enumerator
// alone under the extremal-self-dual assumptions (generalized 1-designs):
// mu_i(w, e1) = A_w * w / (3n) via the lambda chain of the design equations.
struct AnalyticAccess {
    int n = 0;
    int m = 0;
    int strength = 0;                  // t of the classic design chain
    std::map<int, uint64_t> lambda_t;  // weight -> lambda_t
    std::map<int, uint64_t> lambda_1;  // weight -> lambda_1
    std::map<int, uint64_t> mu;        // weight -> mu_i(w, e1)
    PairGF pairs;                      // one class pair
    uint64_t ordered_total = 0;
    Accessibility accessibility;
    std::set<int> minimal_guaranteed_sizes;  // p-1 for weights that cannot c-cover
    std::set<int> minimal_undetermined_sizes;
};

AnalyticAccess analytic_access_from_enumerator(const WeightDistribution& wd, int n);

// Exhaustive nearest-codeword audit of a full claimed share vector.
struct CheaterResult {
    enum class Status { clean, corrected, detected_only, undecidable };
    Status status = Status::clean;
    std::set<int> cheaters;  // differing participant indices (corrected only)
    int distance = 0;        // distance from the claimed vector to the nearest codeword
};

CheaterResult detect_cheaters(const Code& code, const ShareMap& claimed,
                              std::optional<F4> secret = std::nullopt);

// One `H<k> <weight> <symbols>` line per recovery vector.
std::string recovery_listing(const HClasses& h);

}  // namespace gf4sss

#endif
