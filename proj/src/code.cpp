#include "gf4sss/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "gf4sss/errors.hpp"
#include "gf4sss/linalg.hpp"

namespace gf4sss {

Code::Code(CodeKind kind, FieldTag field, int n, std::vector<Word> rows, std::string name)
    : kind_(kind), field_(field), n_(n), rows_(std::move(rows)), name_(std::move(name)) {
    if (n < 1 || n > Word::kMaxLength)
        throw DomainError("code length must be between 1 and 32");
    if (kind_ == CodeKind::additive && field_ != FieldTag::gf4)
        throw DomainError("additive codes are defined over gf4");
    for (const Word& r : rows_) {
        if (r.length() != n_) throw LengthMismatch("generator row length differs from n");
        if (field_ == FieldTag::gf2 && (r.raw() & 0xAAAAAAAAAAAAAAAAull))
            throw DomainError("gf2 code has non-binary entries");
    }

    comb_rows_ = rows_;
    if (kind_ == CodeKind::linear && field_ == FieldTag::gf4) {
        for (const Word& r : rows_) comb_rows_.push_back(r.scaled(F4::omega));
    }
    if (kind_ == CodeKind::linear) {
        if (k() > n_) throw DomainError("linear code with k > n");
        std::vector<Word> rs = rows_;
        if (linalg::gf4_rank(rs) != k())
            throw DomainError("generator rows are dependent over the field");
    } else {
        if (k() > 2 * n_) throw DomainError("additive code with k > 2n");
        std::vector<uint64_t> bits;
        for (const Word& r : rows_) bits.push_back(r.raw());
        if (linalg::gf2_rank(bits) != k())
            throw DomainError("generator rows are dependent over GF(2)");
    }
    if (comb_rows_.size() > 62) throw DomainError("codeword set larger than 2^62");
}

std::vector<F4> Code::column(int j) const {
    std::vector<F4> col;
    col.reserve(rows_.size());
    for (const Word& r : rows_) col.push_back(r.at(j));
    return col;
}

bool Code::has_zero_column() const {
    uint64_t seen = 0;
    for (const Word& r : rows_) seen |= r.nonzero_even_mask();
    return std::popcount(seen) != n_;
}

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
}

int WeightDistribution::min_distance() const {
    for (int i = 1; i < int(counts.size()); ++i)
        if (counts[size_t(i)]) return i;
    throw ZeroCode("code has no nonzero codeword");
}

std::string WeightDistribution::enumerator_string() const {
    std::string s;
    for (int i = 0; i < int(counts.size()); ++i) {
        uint64_t a = counts[size_t(i)];
        if (!a) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += "y^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

void check_enumeration_budget(const Code& code) {
    if (code.log2_size() > kMaxEnumerationLog2)
        throw BudgetExceeded("enumeration of 2^" + std::to_string(code.log2_size()) +
                             " codewords exceeds the 2^26 budget");
}

std::vector<Word> codewords(const Code& code) {
    std::vector<Word> out;
    out.reserve(size_t(code.codeword_count()));
    for_each_codeword(code, [&](const Word& w) { out.push_back(w); });
    return out;
}

Word codeword_at(const Code& code, uint64_t idx) {
    uint64_t comb = idx ^ (idx >> 1);
    Word w = Word::zero(code.length());
    const std::vector<Word>& rows = code.combination_rows();
    for (size_t j = 0; j < rows.size(); ++j)
        if (comb >> j & 1) w = w + rows[j];
    return w;
}

WeightDistribution weight_distribution(const Code& code, int threads) {
    check_enumeration_budget(code);
    uint64_t count = code.codeword_count();
    int nt = std::max(1, threads);
    if (uint64_t(nt) > count / 1024) nt = int(std::max<uint64_t>(1, count / 1024));

    // Workers walk disjoint combination-index ranges; merged totals are
    // independent of the partitioning.
    std::vector<std::vector<uint64_t>> partial(
        size_t(nt), std::vector<uint64_t>(size_t(code.length()) + 1, 0));
    auto run = [&](int tid) {
        uint64_t lo = count / uint64_t(nt) * uint64_t(tid);
        uint64_t hi = tid + 1 == nt ? count : count / uint64_t(nt) * uint64_t(tid + 1);
        const std::vector<Word>& rows = code.combination_rows();
        Word w = codeword_at(code, lo);
        std::vector<uint64_t>& dist = partial[size_t(tid)];
        ++dist[size_t(w.weight())];
        for (uint64_t idx = lo + 1; idx < hi; ++idx) {
            w = w + rows[size_t(std::countr_zero(idx))];
            ++dist[size_t(w.weight())];
        }
    };
    if (nt == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(run, t);
        for (std::thread& th : pool) th.join();
    }
    WeightDistribution wd;
    wd.counts.assign(size_t(code.length()) + 1, 0);
    for (const std::vector<uint64_t>& p : partial)
        for (size_t i = 0; i < p.size(); ++i) wd.counts[i] += p[i];
    return wd;
}

int minimum_distance(const Code& code) {
    if (code.k() == 0) throw ZeroCode("minimum distance of the zero code");
    check_enumeration_budget(code);
    int best = code.length() + 1;
    for_each_codeword(code, [&](const Word& w) {
        int wt = w.weight();
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

Code dual_code(const Code& code) {
    std::string dual_name = code.name().empty() ? "" : code.name() + "^dual";
    if (code.kind() == CodeKind::additive) {
        // x * r = sum_i [x_i,0 Tr(conj(r_i)) + x_i,1 Tr(w conj(r_i))] over
        // GF(2), with x laid out exactly like Word bits. One GF(2) nullspace
        // of the k x 2n pairing matrix gives the (n, 2^{2n-k}) trace dual.
        std::vector<uint64_t> pairing;
        for (const Word& r : code.rows()) {
            uint64_t row = 0;
            for (int i = 0; i < code.length(); ++i) {
                F4 ri = r.at(i);
                if (f4_trace(f4_conj(ri)) == F2::one) row |= 1ull << (2 * i);
                if (f4_trace(f4_mul(F4::omega, f4_conj(ri))) == F2::one) row |= 1ull << (2 * i + 1);
            }
            pairing.push_back(row);
        }
        std::vector<uint64_t> basis = linalg::gf2_nullspace(pairing, 2 * code.length());
        std::vector<Word> rows;
        rows.reserve(basis.size());
        for (uint64_t b : basis) rows.emplace_back(code.length(), b);
        return Code(CodeKind::additive, FieldTag::gf4, code.length(), std::move(rows), dual_name);
    }
    if (code.field() == FieldTag::gf2) {
        std::vector<uint64_t> bits;
        for (const Word& r : code.rows()) bits.push_back(r.support());
        std::vector<uint64_t> basis = linalg::gf2_nullspace(bits, code.length());
        std::vector<Word> rows;
        for (uint64_t b : basis) {
            Word w = Word::zero(code.length());
            for (int i = 0; i < code.length(); ++i)
                if (b >> i & 1) w.set(i, F4::one);
            rows.push_back(w);
        }
        return Code(CodeKind::linear, FieldTag::gf2, code.length(), std::move(rows), dual_name);
    }
    std::vector<Word> basis = linalg::gf4_nullspace(code.rows(), code.length());
    return Code(CodeKind::linear, FieldTag::gf4, code.length(), std::move(basis), dual_name);
}

bool in_code(const Code& code, const Word& w) {
    if (w.length() != code.length()) throw LengthMismatch("membership test length mismatch");
    if (code.kind() == CodeKind::linear && code.field() == FieldTag::gf4)
        return linalg::gf4_in_span(code.rows(), w);
    std::vector<uint64_t> bits;
    for (const Word& r : code.combination_rows()) bits.push_back(r.raw());
    return linalg::gf2_in_span(bits, w.raw());
}

bool same_codeword_set(const Code& a, const Code& b) {
    if (a.length() != b.length() || a.log2_size() != b.log2_size()) return false;
    for (const Word& r : b.combination_rows())
        if (!in_code(a, r)) return false;
    return true;
}

bool is_self_dual(const Code& code) { return same_codeword_set(code, dual_code(code)); }

std::vector<Word> minimal_codewords(const Code& code, MinimalNotion notion) {
    check_enumeration_budget(code);
    std::vector<Word> nz;
    for_each_codeword(code, [&](const Word& w) {
        if (!w.is_zero()) nz.push_back(w);
    });
    std::vector<Word> out;
    for (const Word& c : nz) {
        bool minimal = true;
        if (notion == MinimalNotion::c_cover) {
            for (const Word& d : nz) {
                if (d != c && c_cover(d, c)) {
                    minimal = false;
                    break;
                }
            }
        } else {
            Word sw = c.scaled(F4::omega);
            Word sW = c.scaled(F4::omegabar);
            for (const Word& d : nz) {
                if (d != c && support_cover(d, c) && d != sw && d != sW) {
                    minimal = false;
                    break;
                }
            }
        }
        if (minimal) out.push_back(c);
    }
    return out;
}

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(start, end - start + 1);
        if (line.empty() || line[0] == '#') continue;
        return line;
    }
    return "";
}

std::string expect_field(std::istream& in, const std::string& key) {
    std::string line = next_content_line(in);
    if (line.rfind(key + ":", 0) != 0)
        throw ParseError("expected '" + key + ":' line, got '" + line + "'");
    std::string value = line.substr(key.size() + 1);
    size_t start = value.find_first_not_of(" \t");
    return start == std::string::npos ? "" : value.substr(start);
}

}  // namespace

Code read_code(std::istream& in, const std::string& name) {
    std::string kind_s = expect_field(in, "kind");
    std::string field_s = expect_field(in, "field");
    std::string n_s = expect_field(in, "n");

    CodeKind kind;
    if (kind_s == "additive")
        kind = CodeKind::additive;
    else if (kind_s == "linear")
        kind = CodeKind::linear;
    else
        throw ParseError("unknown kind '" + kind_s + "'");
    FieldTag field;
    if (field_s == "gf2")
        field = FieldTag::gf2;
    else if (field_s == "gf4")
        field = FieldTag::gf4;
    else
        throw ParseError("unknown field '" + field_s + "'");
    int n = 0;
    try {
        n = std::stoi(n_s);
    } catch (const std::exception&) {
        throw ParseError("bad length '" + n_s + "'");
    }

    std::vector<Word> rows;
    for (std::string line = next_content_line(in); !line.empty(); line = next_content_line(in)) {
        if (int(line.size()) != n) throw ParseError("row '" + line + "' is not " + std::to_string(n) + " symbols");
        rows.push_back(Word::from_symbols(line));
    }
    if (rows.empty()) throw ParseError("code file has no generator rows");
    return Code(kind, field, n, std::move(rows), name);
}

Code parse_code(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return read_code(in, name);
}

void write_code(std::ostream& out, const Code& code) {
    if (!code.name().empty()) out << "# " << code.name() << "\n";
    out << "kind: " << (code.kind() == CodeKind::additive ? "additive" : "linear") << "\n";
    out << "field: " << (code.field() == FieldTag::gf2 ? "gf2" : "gf4") << "\n";
    out << "n: " << code.length() << "\n";
    for (const Word& r : code.rows()) out << r.symbols() << "\n";
}

std::string code_to_string(const Code& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

}  // namespace gf4sss
