#ifndef GF4SSS_LINALG_HPP
#define GF4SSS_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gf4sss/word.hpp"

namespace gf4sss::linalg {

// --- GF(2), rows packed into uint64_t (low bit = column 0) ---

int gf2_rank(std::vector<uint64_t> rows);

bool gf2_in_span(std::vector<uint64_t> rows, uint64_t v);

// Basis of { x in GF(2)^ncols : parity(x & r) = 0 for every row r }.
std::vector<uint64_t> gf2_nullspace(const std::vector<uint64_t>& rows, int ncols);

// Solve the system given by (rows, rhs) for x; returns a particular solution
// together with a kernel basis, or nullopt when inconsistent.
struct Gf2Solution {
    uint64_t particular = 0;
    std::vector<uint64_t> kernel;
};
std::optional<Gf2Solution> gf2_solve(std::vector<uint64_t> rows, std::vector<int> rhs, int ncols);

// --- GF(4), rows as Words of equal length ---

int gf4_rank(std::vector<Word> rows);

bool gf4_in_span(std::vector<Word> rows, const Word& v);

std::vector<Word> gf4_nullspace(const std::vector<Word>& rows, int n);

}  // namespace gf4sss::linalg

#endif
