#ifndef GF4SSS_DESIGNS_HPP
#define GF4SSS_DESIGNS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gf4sss/code.hpp"
#include "gf4sss/combinatorics.hpp"

namespace gf4sss {

// Multiset of equal-size point subsets; blocks may repeat.
struct BlockMultiset {
    int v = 0;
    std::vector<uint32_t> blocks;  // support masks

    int block_size() const;  // EmptyBlockSet when there are no blocks
};

// Supports of the weight-w codewords, one block per codeword. Codewords
// sharing a support therefore contribute multiplicity.
BlockMultiset supports_of_weight(const Code& code, int w);
BlockMultiset supports_of(const std::vector<Word>& words, int v);

struct TDesignCheck {
    uint64_t lambda = 0;            // block count through each t-set, multiset convention
    unsigned multiplicity_gcd = 1;  // gcd of block multiplicities
    std::optional<uint64_t> lambda_reduced;       // lambda / gcd when gcd > 1
    std::map<unsigned, uint64_t> multiplicity_histogram;  // multiplicity -> distinct supports
};

// Checks whether every t-subset of points lies in the same number of blocks
// (counted with multiplicity). Returns that lambda plus multiplicity data,
// or nullopt when the counts are not constant.
std::optional<TDesignCheck> verify_t_design(const BlockMultiset& blocks, int t);

struct DesignParams {
    int t = 0;
    int v = 0;
    int kb = 0;
    uint64_t lambda = 0;
};

// lambda_i = lambda * C(v-i, t-i) / C(k-i, t-i); NonIntegral when the
// division is not exact.
uint64_t lambda_convert(const DesignParams& p, int i);

// Generalized t-design of type 3: every weight-t vector of GF(4)^n is
// c-covered by the same number mu_t of the given words (all of one weight).
std::optional<uint64_t> verify_generalized_design(const std::vector<Word>& words, int t);

struct AmReport {
    int t = 0;
    int d = 0;
    int d_dual = 0;
    int s = 0;                    // dual weights in (0, n-t]
    bool applies = false;         // s <= d - t
    std::vector<int> primal_weights;
    std::vector<int> dual_weights;
    // weight -> multiset design check for every guaranteed weight (verified
    // at desk scale when the premise applies)
    std::map<int, TDesignCheck> verified;
};

// Assmus-Mattson for linear codes; requires 0 < t < d.
AmReport am_linear_report(const Code& code, int t);

// Assmus-Mattson for additive codes over GF(4) (designs with possibly
// repeated blocks); requires 0 < t < d.
AmReport am_additive_report(const Code& code, int t);

struct ExtremalStrengths {
    int classic = 0;                  // 5 / 3 / 1 for n = 6m / 6m+2 / 6m+4
    std::optional<int> generalized;   // 2 for n = 6m, 1 for n = 6m+2
};

// Design strengths guaranteed for extremal additive even self-dual codes of
// length n; UnsupportedLength unless n = 0, 2, 4 (mod 6).
ExtremalStrengths extremal_strengths(int n);

// d >= (n+2)/3, the condition for all nontrivial weights of an additive even
// self-dual code to hold 1-designs with possibly repeated blocks.
bool one_design_condition(int n, int d);

// Point-block double counting: lambda_1 = A_w * w / n.
uint64_t lambda1_from_enumerator(uint64_t a_w, int w, int n);

}  // namespace gf4sss

#endif
