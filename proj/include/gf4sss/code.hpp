#ifndef GF4SSS_CODE_HPP
#define GF4SSS_CODE_HPP

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gf4sss/word.hpp"

namespace gf4sss {

enum class CodeKind { additive, linear };
enum class FieldTag { gf2, gf4 };

// Enumeration budget: no operation sweeps more than 2^26 codewords.
inline constexpr int kMaxEnumerationLog2 = 26;

// A generator matrix with a kind tag. The codeword set is the set of
// GF(2)-combinations of the rows for additive codes and GF(q)-combinations
// for linear codes. Rows must be independent over the combination field.
class Code {
  public:
    Code(CodeKind kind, FieldTag field, int n, std::vector<Word> rows, std::string name = "");

    CodeKind kind() const { return kind_; }
    FieldTag field() const { return field_; }
    int length() const { return n_; }
    int k() const { return int(rows_.size()); }
    const std::vector<Word>& rows() const { return rows_; }
    const std::string& name() const { return name_; }

    // log2 of the number of codewords (GF(2) dimension of the codeword set).
    int log2_size() const {
        return kind_ == CodeKind::linear && field_ == FieldTag::gf4 ? 2 * k() : k();
    }
    uint64_t codeword_count() const { return 1ull << log2_size(); }

    // Rows whose GF(2)-span is the codeword set: the generator rows, plus
    // w-scaled copies for GF(4)-linear codes. Every enumeration runs on
    // these, so additive and linear codes share one engine.
    const std::vector<Word>& combination_rows() const { return comb_rows_; }

    // Column j of the generator matrix, as the k-vector (rows_[0][j], ...).
    std::vector<F4> column(int j) const;

    bool has_zero_column() const;

  private:
    CodeKind kind_;
    FieldTag field_;
    int n_;
    std::vector<Word> rows_;
    std::vector<Word> comb_rows_;
    std::string name_;
};

struct WeightDistribution {
    std::vector<uint64_t> counts;  // counts[i] = number of codewords of weight i

    int length() const { return int(counts.size()) - 1; }
    uint64_t total() const;
    int min_distance() const;  // smallest i > 0 with counts[i] != 0; ZeroCode if none
    std::string enumerator_string() const;  // e.g. "1 + 45y^4 + 18y^6"
};

void check_enumeration_budget(const Code& code);

// Visits all 2^log2_size codewords in Gray-code order over the combination
// vector: successive codewords differ by one combination row, so each step
// is a single XOR. Order is deterministic (indexed by combination index).
template <class Fn>
void for_each_codeword(const Code& code, Fn&& fn) {
    check_enumeration_budget(code);
    const std::vector<Word>& rows = code.combination_rows();
    Word w = Word::zero(code.length());
    fn(w);
    uint64_t count = code.codeword_count();
    for (uint64_t idx = 1; idx < count; ++idx) {
        w = w + rows[size_t(std::countr_zero(idx))];
        fn(w);
    }
}

std::vector<Word> codewords(const Code& code);

// Codeword at Gray position idx (combination vector = idx ^ (idx >> 1)).
Word codeword_at(const Code& code, uint64_t idx);

WeightDistribution weight_distribution(const Code& code, int threads = 1);

int minimum_distance(const Code& code);

// Trace dual for additive codes, Euclidean dual for linear codes.
Code dual_code(const Code& code);

bool same_codeword_set(const Code& a, const Code& b);

bool is_self_dual(const Code& code);

bool in_code(const Code& code, const Word& w);

enum class MinimalNotion { support, c_cover };

// Under `support`: nonzero codewords whose support contains only the
// supports of their scalar multiples. Under `c_cover`: nonzero codewords
// that componentwise cover no other nonzero codeword.
std::vector<Word> minimal_codewords(const Code& code, MinimalNotion notion);

// Line-oriented code file format:
//   kind: additive|linear
//   field: gf2|gf4
//   n: <int>
//   <k rows of n symbols from {0,1,w,W}>
Code read_code(std::istream& in, const std::string& name = "");
Code parse_code(const std::string& text, const std::string& name = "");
void write_code(std::ostream& out, const Code& code);
std::string code_to_string(const Code& code);

}  // namespace gf4sss

#endif
