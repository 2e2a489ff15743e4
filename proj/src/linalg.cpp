#include "gf4sss/linalg.hpp"

#include <bit>

namespace gf4sss::linalg {

int gf2_rank(std::vector<uint64_t> rows) {
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint64_t r = rows[i];
        if (r == 0) continue;
        int pivot = std::countr_zero(r);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] >> pivot & 1)) rows[j] ^= r;
        ++rank;
    }
    return rank;
}

bool gf2_in_span(std::vector<uint64_t> rows, uint64_t v) {
    for (size_t i = 0; i < rows.size(); ++i) {
        uint64_t r = rows[i];
        if (r == 0) continue;
        int pivot = std::countr_zero(r);
        if (v >> pivot & 1) v ^= r;
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] >> pivot & 1) rows[j] ^= r;
    }
    return v == 0;
}

std::vector<uint64_t> gf2_nullspace(const std::vector<uint64_t>& rows_in, int ncols) {
    std::vector<uint64_t> rows = rows_in;
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < ncols && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && !(rows[p] >> c & 1)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != rank && (rows[j] >> c & 1)) rows[j] ^= rows[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<uint64_t> basis;
    std::vector<bool> is_pivot(size_t(ncols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[size_t(f)]) continue;
        uint64_t x = 1ull << f;
        for (size_t r = 0; r < rank; ++r)
            if (rows[r] >> f & 1) x |= 1ull << pivot_col[r];
        basis.push_back(x);
    }
    return basis;
}

std::optional<Gf2Solution> gf2_solve(std::vector<uint64_t> rows, std::vector<int> rhs, int ncols) {
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < ncols && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && !(rows[p] >> c & 1)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        std::swap(rhs[rank], rhs[p]);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j != rank && (rows[j] >> c & 1)) {
                rows[j] ^= rows[rank];
                rhs[j] ^= rhs[rank];
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t j = rank; j < rows.size(); ++j)
        if (rhs[j] != 0) return std::nullopt;

    Gf2Solution sol;
    for (size_t r = 0; r < rank; ++r)
        if (rhs[r]) sol.particular |= 1ull << pivot_col[r];
    std::vector<bool> is_pivot(size_t(ncols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[size_t(f)]) continue;
        uint64_t x = 1ull << f;
        for (size_t r = 0; r < rank; ++r)
            if (rows[r] >> f & 1) x |= 1ull << pivot_col[r];
        sol.kernel.push_back(x);
    }
    return sol;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> gf4_rref(std::vector<Word>& rows, int n) {
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < n && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && rows[p].at(c) == F4::zero) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        rows[rank] = rows[rank].scaled(f4_inv(rows[rank].at(c)));
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == rank) continue;
            F4 v = rows[j].at(c);
            if (v != F4::zero) rows[j] = rows[j] + rows[rank].scaled(v);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    return pivot_col;
}

}  // namespace

int gf4_rank(std::vector<Word> rows) {
    if (rows.empty()) return 0;
    return int(gf4_rref(rows, rows[0].length()).size());
}

bool gf4_in_span(std::vector<Word> rows, const Word& v) {
    if (rows.empty()) return v.is_zero();
    int n = rows[0].length();
    std::vector<int> pivots = gf4_rref(rows, n);
    Word w = v;
    for (size_t r = 0; r < pivots.size(); ++r) {
        F4 coef = w.at(pivots[r]);
        if (coef != F4::zero) w = w + rows[r].scaled(coef);
    }
    return w.is_zero();
}

std::vector<Word> gf4_nullspace(const std::vector<Word>& rows_in, int n) {
    std::vector<Word> rows = rows_in;
    std::vector<int> pivots = gf4_rref(rows, n);
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    std::vector<Word> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[size_t(f)]) continue;
        Word x = Word::zero(n);
        x.set(f, F4::one);
        for (size_t r = 0; r < pivots.size(); ++r) {
            F4 v = rows[r].at(f);
            if (v != F4::zero) x.set(pivots[r], v);  // -v = v in characteristic 2
        }
        basis.push_back(x);
    }
    return basis;
}

}  // namespace gf4sss::linalg
