#include "gf4sss/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gf4sss/catalog.hpp"
#include "gf4sss/report.hpp"

namespace gf4sss::cli {

namespace {

struct ResolvedCode {
    std::string ref;  // as given on the command line
    const CatalogEntry* entry = nullptr;
    std::optional<Code> file_code;

    const Code& code() const {
        if (entry) {
            if (!entry->code)
                throw DomainError("catalog entry '" + entry->name +
                                  "' has no generator matrix (enumerator only)");
            return *entry->code;
        }
        return *file_code;
    }

    std::optional<WeightDistribution> stored_enumerator() const {
        return entry ? entry->enumerator : std::nullopt;
    }
};

ResolvedCode resolve_code(const std::string& source) {
    ResolvedCode rc;
    rc.ref = source;
    if (catalog_has(source)) {
        rc.entry = &catalog_get(source);
        return rc;
    }
    std::ifstream in(source);
    if (!in)
        throw DomainError("'" + source + "' is neither a catalog name nor a readable file");
    rc.file_code = read_code(in, std::filesystem::path(source).stem().string());
    return rc;
}

F4 parse_secret(const std::string& s) {
    if (s.size() != 1) throw DomainError("secret must be one of 0, 1, w, W");
    auto v = f4_from_symbol(s[0]);
    if (!v) throw DomainError("secret must be one of 0, 1, w, W");
    return *v;
}

uint64_t choose_seed(const std::optional<uint64_t>& given, std::ostream& err) {
    if (given) return *given;
    std::random_device rd;
    uint64_t seed = (uint64_t(rd()) << 32) ^ rd();
    err << "seed: " << seed << "\n";
    return seed;
}

void print_am_report(std::ostream& out, const AmReport& rep) {
    out << "am_report: t=" << rep.t << " d=" << rep.d << " d_dual=" << rep.d_dual
        << " s=" << rep.s << " applies=" << (rep.applies ? "yes" : "no") << "\n";
    if (!rep.applies) return;
    out << "am_weights_primal:";
    for (int w : rep.primal_weights) out << " " << w;
    out << "\n";
    out << "am_weights_dual:";
    for (int w : rep.dual_weights) out << " " << w;
    out << "\n";
    out << "am_verified:";
    for (const auto& [w, check] : rep.verified) {
        out << "  w" << w << " lambda" << rep.t << "=" << check.lambda;
        if (check.lambda_reduced) out << " (/" << check.multiplicity_gcd << " -> "
                                      << *check.lambda_reduced << ")";
    }
    out << "\n";
}

int cmd_analyze(const std::string& source, bool parallel, std::ostream& out) {
    ResolvedCode rc = resolve_code(source);
    const Code& code = rc.code();
    int threads = parallel ? int(std::thread::hardware_concurrency()) : 1;

    out << "code: " << rc.ref << "\n";
    out << "kind: " << (code.kind() == CodeKind::additive ? "additive" : "linear") << "\n";
    out << "field: " << (code.field() == FieldTag::gf2 ? "gf2" : "gf4") << "\n";
    out << "n: " << code.length() << "\n";
    out << "k: " << code.k() << "\n";
    out << "codewords: " << code.codeword_count() << "\n";
    WeightDistribution wd = weight_distribution(code, threads);
    out << "weight_enumerator: " << wd.enumerator_string() << "\n";
    int d = wd.min_distance();
    out << "minimum_distance: " << d << "\n";
    out << "self_dual: " << (is_self_dual(code) ? "yes" : "no") << "\n";
    if (code.kind() == CodeKind::additive) {
        try {
            ExtremalStrengths st = extremal_strengths(code.length());
            out << "extremal_strengths: classic " << st.classic;
            if (st.generalized) out << ", generalized " << *st.generalized;
            out << "\n";
        } catch (const UnsupportedLength&) {
            out << "extremal_strengths: not applicable\n";
        }
        out << "one_design_condition: " << (one_design_condition(code.length(), d) ? "yes" : "no")
            << " (d=" << d << " vs (n+2)/3)\n";
    }

    // Largest strength whose Assmus-Mattson premise holds.
    std::optional<AmReport> best;
    for (int t = std::min(7, d - 1); t >= 1 && !best; --t) {
        AmReport rep = code.kind() == CodeKind::additive ? am_additive_report(code, t)
                                                         : am_linear_report(code, t);
        if (rep.applies) best = std::move(rep);
    }
    if (best)
        print_am_report(out, *best);
    else
        out << "am_report: no strength applies\n";
    return 0;
}

int cmd_deal(const std::string& source, const std::string& secret_s,
             std::optional<uint64_t> seed_opt, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
    ResolvedCode rc = resolve_code(source);
    const Code& code = rc.code();
    F4 secret = parse_secret(secret_s);
    uint64_t seed = choose_seed(seed_opt, err);

    SharesFile sf;
    sf.code_ref = rc.ref;
    if (code.kind() == CodeKind::additive) {
        AdditiveScheme scheme = make_additive_scheme(code);
        sf.scheme = "additive";
        sf.shares = deal_additive(scheme, secret, seed).shares;
    } else {
        LinearScheme scheme = make_linear_scheme(code);
        sf.scheme = "linear";
        sf.shares = deal_linear(scheme, secret, seed).shares;
    }
    if (out_path.empty()) {
        write_shares(out, sf);
    } else {
        std::ofstream f(out_path);
        if (!f) throw DomainError("cannot write '" + out_path + "'");
        write_shares(f, sf);
    }
    return 0;
}

SharesFile load_shares(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read shares file '" + path + "'");
    return read_shares(in);
}

// Minimum-weight recovery vector of the class fully covered by the present
// shares; ties resolved by enumeration order.
std::optional<RecoveryVector> pick_vector(const std::vector<RecoveryVector>& cls,
                                          uint32_t present) {
    std::optional<RecoveryVector> best;
    for (const RecoveryVector& rv : cls)
        if ((rv.group & ~present) == 0 && (!best || rv.word.weight() < best->word.weight()))
            best = rv;
    return best;
}

int cmd_recover(const std::string& source, const std::string& shares_path,
                const std::string& pair, std::ostream& out) {
    ResolvedCode rc = resolve_code(source);
    const Code& code = rc.code();
    SharesFile sf = load_shares(shares_path);

    if (code.kind() == CodeKind::linear) {
        LinearScheme scheme = make_linear_scheme(code);
        std::set<int> subset;
        for (const auto& [i, v] : sf.shares) subset.insert(i);
        auto coeffs = find_recovery_linear(scheme.dual, subset);
        if (!coeffs) throw DomainError("the provided shares cannot recover the secret");
        out << f4_symbol(recover_linear(sf.shares, *coeffs)) << "\n";
        return 0;
    }

    AdditiveScheme scheme = make_additive_scheme(code);
    HClasses h = extract_H(scheme.dual);
    uint32_t present = 0;
    for (const auto& [i, v] : sf.shares) present |= 1u << (i - 1);

    std::vector<std::pair<int, int>> class_pairs;
    if (!pair.empty()) {
        size_t comma = pair.find(',');
        if (comma == std::string::npos) throw DomainError("--pair expects i,j");
        int a = std::stoi(pair.substr(0, comma));
        int b = std::stoi(pair.substr(comma + 1));
        if (a < 1 || a > 3 || b < 1 || b > 3 || a == b)
            throw DomainError("--pair expects two distinct classes from 1..3");
        class_pairs = {{a, b}};
    } else {
        class_pairs = {{1, 2}, {1, 3}, {2, 3}};
    }
    for (const auto& [a, b] : class_pairs) {
        auto x = pick_vector(h.of(a), present);
        auto y = pick_vector(h.of(b), present);
        if (x && y) {
            out << f4_symbol(recover_additive(*x, *y, sf.shares)) << "\n";
            return 0;
        }
    }
    throw DomainError("the provided shares cover no two recovery vectors of distinct classes");
}

int cmd_access(const std::string& source, bool analytic, bool list_recovery,
               const std::string& format_s, std::ostream& out) {
    ResolvedCode rc = resolve_code(source);
    ReportFormat fmt;
    if (format_s == "text")
        fmt = ReportFormat::text;
    else if (format_s == "jsonl")
        fmt = ReportFormat::json_lines;
    else
        throw DomainError("--format must be text or jsonl");

    AccessReport rep;
    if (analytic) {
        WeightDistribution wd;
        int n = 0;
        if (auto stored = rc.stored_enumerator()) {
            wd = *stored;
            n = wd.length();
        } else {
            const Code& code = rc.code();
            wd = weight_distribution(code);
            n = code.length();
        }
        rep = build_analytic_access_report(wd, n, rc.ref);
    } else {
        const Code& code = rc.code();
        if (code.kind() == CodeKind::additive)
            rep = build_additive_access_report(make_additive_scheme(code), rc.ref, list_recovery);
        else
            rep = build_linear_access_report(make_linear_scheme(code), rc.ref);
    }
    out << render(rep, fmt);
    return 0;
}

int cmd_designs(const std::string& source, int t, std::ostream& out) {
    ResolvedCode rc = resolve_code(source);
    const Code& code = rc.code();
    WeightDistribution wd = weight_distribution(code);
    int d = wd.min_distance();
    out << "code: " << rc.ref << "\n";
    out << "t: " << t << "\n";
    for (int w = 1; w <= code.length(); ++w) {
        if (!wd.counts[size_t(w)]) continue;
        out << "weight " << w << " (" << wd.counts[size_t(w)] << " codewords): ";
        if (t > w) {
            out << "t exceeds block size\n";
            continue;
        }
        auto check = verify_t_design(supports_of_weight(code, w), t);
        if (!check) {
            out << "not a " << t << "-design\n";
            continue;
        }
        out << t << "-design lambda=" << check->lambda;
        if (check->lambda_reduced)
            out << " (multiplicity gcd " << check->multiplicity_gcd << ", reduced "
                << *check->lambda_reduced << ")";
        out << " multiplicities:";
        for (const auto& [mult, cnt] : check->multiplicity_histogram)
            out << " " << cnt << "x" << mult;
        if (code.kind() == CodeKind::additive) {
            std::vector<Word> words;
            for_each_codeword(code, [&](const Word& c) {
                if (c.weight() == w) words.push_back(c);
            });
            auto mu = verify_generalized_design(words, t);
            if (mu)
                out << " generalized mu=" << *mu;
            else
                out << " generalized: not constant";
        }
        out << "\n";
    }
    if (t >= 1 && t < d) {
        AmReport rep = code.kind() == CodeKind::additive ? am_additive_report(code, t)
                                                         : am_linear_report(code, t);
        print_am_report(out, rep);
    } else {
        out << "am_report: not applicable (requires 0 < t < d=" << d << ")\n";
    }
    return 0;
}

int cmd_cheaters(const std::string& source, const std::string& shares_path,
                 const std::string& secret_s, std::ostream& out) {
    ResolvedCode rc = resolve_code(source);
    const Code& code = rc.code();
    SharesFile sf = load_shares(shares_path);
    std::optional<F4> secret;
    if (!secret_s.empty()) secret = parse_secret(secret_s);

    CheaterResult res = detect_cheaters(code, sf.shares, secret);
    switch (res.status) {
        case CheaterResult::Status::clean:
            out << "status: clean\n";
            break;
        case CheaterResult::Status::corrected:
            out << "status: corrected\n";
            break;
        case CheaterResult::Status::detected_only:
            out << "status: detected-only\n";
            break;
        case CheaterResult::Status::undecidable:
            out << "status: undecidable\n";
            break;
    }
    out << "distance: " << res.distance << "\n";
    if (!res.cheaters.empty()) {
        out << "cheaters:";
        for (int i : res.cheaters) out << " P" << i;
        out << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"secret sharing schemes from additive and linear codes over GF(4)"};
    app.require_subcommand(1);

    std::string source, secret, shares_path, out_path, pair, format = "text";
    std::optional<uint64_t> seed;
    bool analytic = false, list_recovery = false, parallel = false;
    int t = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "weight enumerator, duality and designs");
    analyze->add_option("code", source)->required();
    analyze->add_flag("--parallel", parallel, "use all cores for the weight enumerator");

    CLI::App* deal = app.add_subcommand("deal", "deal shares for a secret");
    deal->add_option("code", source)->required();
    deal->add_option("--secret", secret, "secret symbol (0, 1, w, W)")->required();
    deal->add_option("--seed", seed, "RNG seed; drawn from entropy when absent");
    deal->add_option("--out", out_path, "shares file (stdout when absent)");

    CLI::App* recover = app.add_subcommand("recover", "recover the secret from shares");
    recover->add_option("code", source)->required();
    recover->add_option("--shares", shares_path)->required();
    recover->add_option("--pair", pair, "recovery classes i,j (additive schemes)");

    CLI::App* access = app.add_subcommand("access", "full access-structure report");
    access->add_option("code", source)->required();
    access->add_flag("--analytic", analytic, "derive from the weight enumerator alone");
    access->add_flag("--list-recovery", list_recovery, "list recovery vectors");
    access->add_option("--format", format, "text or jsonl");

    CLI::App* designs = app.add_subcommand("designs", "t-design verification per weight class");
    designs->add_option("code", source)->required();
    designs->add_option("--t", t, "design strength")->required();

    CLI::App* cheaters = app.add_subcommand("cheaters", "flag modified shares");
    cheaters->add_option("code", source)->required();
    cheaters->add_option("--shares", shares_path)->required();
    cheaters->add_option("--secret", secret, "known secret, pins the dealer coordinate");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(source, parallel, out);
        if (deal->parsed()) return cmd_deal(source, secret, seed, out_path, out, err);
        if (recover->parsed()) return cmd_recover(source, shares_path, pair, out);
        if (access->parsed()) return cmd_access(source, analytic, list_recovery, format, out);
        if (designs->parsed()) return cmd_designs(source, t, out);
        if (cheaters->parsed()) return cmd_cheaters(source, shares_path, secret, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace gf4sss::cli
