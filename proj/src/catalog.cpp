#include "gf4sss/catalog.hpp"

#include <map>
#include <mutex>

#include "gf4sss/errors.hpp"

namespace gf4sss {

namespace {

Code make_code(CodeKind kind, FieldTag field, std::initializer_list<const char*> rows,
               const std::string& name) {
    std::vector<Word> ws;
    int n = int(std::string_view(*rows.begin()).size());
    for (const char* r : rows) ws.push_back(Word::from_symbols(r));
    return Code(kind, field, n, std::move(ws), name);
}

// [24,12,8] extended binary Golay code, [I | B] with B the bordered
// circulant over the quadratic residues mod 11.
Code make_golay24() {
    constexpr bool qr11[11] = {false, true, false, true, true, true,
                               false, false, false, true, false};
    std::vector<Word> rows;
    for (int i = 0; i < 12; ++i) {
        Word r = Word::zero(24);
        r.set(i, F4::one);
        for (int j = 0; j < 12; ++j) {
            bool bit;
            if (i == 0)
                bit = j != 0;
            else if (j == 0)
                bit = true;
            else
                bit = !qr11[((j - i) % 11 + 11) % 11];
            if (bit) r.set(12 + j, F4::one);
        }
        rows.push_back(r);
    }
    return Code(CodeKind::linear, FieldTag::gf2, 24, std::move(rows), "golay24");
}

WeightDistribution make_enumerator(int n, std::initializer_list<std::pair<int, uint64_t>> terms) {
    WeightDistribution wd;
    wd.counts.assign(size_t(n) + 1, 0);
    for (const auto& [w, a] : terms) wd.counts[size_t(w)] = a;
    return wd;
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;

    cat["hexacode_linear"] = CatalogEntry{
        "hexacode_linear",
        make_code(CodeKind::linear, FieldTag::gf4,
                  {"1001ww", "010w1w", "001ww1"}, "hexacode_linear"),
        make_enumerator(6, {{0, 1}, {4, 45}, {6, 18}}),
        "[6,3,4] hexacode over GF(4)"};

    cat["hexacode_additive"] = CatalogEntry{
        "hexacode_additive",
        make_code(CodeKind::additive, FieldTag::gf4,
                  {"1001ww", "w00wWW", "010w1w", "0w0WwW", "001ww1", "00wWWw"},
                  "hexacode_additive"),
        make_enumerator(6, {{0, 1}, {4, 45}, {6, 18}}),
        "(6,2^6) additive hexacode, GF(2)-span of the hexacode and its w-multiples"};

    cat["e12"] = CatalogEntry{
        "e12",
        make_code(CodeKind::linear, FieldTag::gf4,
                  {"111100000000", "001111000000", "000011110000", "000000111100",
                   "000000001111", "101010101010"},
                  "e12"),
        make_enumerator(12, {{0, 1}, {4, 45}, {6, 216}, {8, 1755}, {10, 1800}, {12, 279}}),
        "self-dual [12,6,4] code E12"};

    cat["qc12"] = CatalogEntry{
        "qc12",
        make_code(CodeKind::additive, FieldTag::gf4,
                  {"000000111111", "000000wwwwww", "111111000000", "wwwwww000000",
                   "0001wW0001wW", "000wW1000wW1", "1Ww0001Ww000", "w1W000w1W000",
                   "0001WwwW1000", "000w1W1wW000", "1wW000000Ww1", "W1w0000001Ww"},
                  "qc12"),
        make_enumerator(12, {{0, 1}, {6, 396}, {8, 1485}, {10, 1980}, {12, 234}}),
        "extremal additive even self-dual (12,2^12) dodecacode QC_12"};

    cat["golay24"] = CatalogEntry{
        "golay24", make_golay24(),
        make_enumerator(24, {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}),
        "[24,12,8] extended binary Golay code, standard bordered-circulant construction"};

    cat["s18"] = CatalogEntry{
        "s18", std::nullopt,
        make_enumerator(18, {{0, 1},
                             {8, 2754},
                             {10, 18360},
                             {12, 77112},
                             {14, 110160},
                             {16, 50949},
                             {18, 2808}}),
        "(18,2^18) extremal additive even self-dual code S_18, weight enumerator only"};

    return cat;
}

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> cat = [] {
        std::map<std::string, CatalogEntry> c = build_catalog();
        // A stored generator must reproduce its stored enumerator exactly.
        for (const auto& [name, entry] : c) {
            if (!entry.code || !entry.enumerator) continue;
            WeightDistribution wd = weight_distribution(*entry.code);
            if (wd.counts != entry.enumerator->counts)
                throw DomainError("catalog entry '" + name +
                                  "' disagrees with its stored weight enumerator");
        }
        return c;
    }();
    return cat;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw UnknownName("no catalog entry named '" + name + "'");
    return it->second;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : catalog()) names.push_back(name);
    return names;
}

bool catalog_has(const std::string& name) { return catalog().count(name) != 0; }

}  // namespace gf4sss
