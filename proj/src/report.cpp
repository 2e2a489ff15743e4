#include "gf4sss/report.hpp"

#include <sstream>

#include <json.hpp>

#include "gf4sss/errors.hpp"

namespace gf4sss {

namespace {

void fill_common(AccessReport& rep, const Code& code) {
    rep.n = code.length();
    rep.m = code.length() - 1;
    rep.weights = weight_distribution(code);
    rep.min_distance = rep.weights.min_distance();
    rep.self_dual = is_self_dual(code);
}

void fill_strengths(AccessReport& rep) {
    try {
        ExtremalStrengths st = extremal_strengths(rep.n);
        rep.classic_strength = st.classic;
        rep.generalized_strength = st.generalized;
    } catch (const UnsupportedLength&) {
    }
    rep.one_design = one_design_condition(rep.n, rep.min_distance);
}

}  // namespace

AccessReport build_linear_access_report(const LinearScheme& scheme, const std::string& name) {
    AccessReport rep;
    rep.scheme = "linear";
    rep.code_name = name;
    fill_common(rep, scheme.code);

    LinearAccess acc = access_structure_linear(scheme);
    rep.group_sizes = acc.size_distribution;
    rep.gamma_total = acc.gamma.size();
    rep.minimal_group_sizes = acc.minimal_size_distribution;
    rep.minimal_total = acc.minimal_groups.size();
    try {
        rep.size_distribution = size_distribution_linear(scheme);
    } catch (const NotOneDesign& e) {
        rep.flags.push_back(std::string("size distribution unavailable: ") + e.what());
    }
    rep.accessibility = accessibility_linear(rep.gamma_total, scheme.participants);
    return rep;
}

AccessReport build_additive_access_report(const AdditiveScheme& scheme, const std::string& name,
                                          bool include_listing) {
    AccessReport rep;
    rep.scheme = "additive";
    rep.code_name = name;
    fill_common(rep, scheme.code);
    fill_strengths(rep);

    HClasses h = extract_H(scheme.dual);
    for (int k = 0; k < 3; ++k) rep.class_counts[size_t(k)] = h.h[size_t(k)].size();
    for (int k = 1; k <= 3; ++k)
        for (const RecoveryVector& rv : h.of(k))
            ++rep.mu_by_weight[rv.word.weight()][size_t(k - 1)];

    PairGF gf = pair_generating_function(h.of(1), h.of(2));
    rep.pair_terms = gf.terms;
    rep.pair_total = gf.total;
    rep.ordered_pair_total = ordered_pair_generating_function(h).total;

    MinimalPairs mp = minimal_pairs(h);
    rep.minimal_pair_count = mp.canonical_count;
    rep.minimal_component_sizes = mp.component_sizes;

    try {
        rep.count_minimal = count_minimal_additive(scheme);
        for (const std::string& f : rep.count_minimal->flags) rep.flags.push_back(f);
    } catch (const HypothesisFailed& e) {
        rep.flags.push_back(std::string("minimal-count theorem not applicable: ") + e.what());
    }

    rep.accessibility = accessibility_additive(rep.pair_total, scheme.participants);
    if (include_listing) rep.recovery_vectors = recovery_listing(h);
    return rep;
}

AccessReport build_analytic_access_report(const WeightDistribution& wd, int n,
                                          const std::string& name) {
    AccessReport rep;
    rep.scheme = "additive-analytic";
    rep.code_name = name;
    rep.n = n;
    rep.m = n - 1;
    rep.weights = wd;
    rep.min_distance = wd.min_distance();
    fill_strengths(rep);

    AnalyticAccess an = analytic_access_from_enumerator(wd, n);
    rep.lambda_strength = an.strength;
    rep.lambda_t = an.lambda_t;
    rep.lambda_1 = an.lambda_1;
    for (const auto& [w, mu] : an.mu) rep.mu_by_weight[w] = {mu, mu, mu};
    rep.pair_terms = an.pairs.terms;
    rep.pair_total = an.pairs.total;
    rep.ordered_pair_total = an.ordered_total;
    rep.minimal_guaranteed_sizes = an.minimal_guaranteed_sizes;
    rep.minimal_undetermined_sizes = an.minimal_undetermined_sizes;
    rep.accessibility = an.accessibility;
    return rep;
}

namespace {

std::string join_sizes(const std::set<int>& sizes) {
    std::string s;
    for (int v : sizes) {
        if (!s.empty()) s += " ";
        s += std::to_string(v);
    }
    return s;
}

std::string render_text(const AccessReport& r) {
    std::ostringstream os;
    os << "scheme: " << r.scheme << "\n";
    os << "code: " << r.code_name << "\n";
    os << "n: " << r.n << "\n";
    os << "participants: " << r.m << "\n";
    os << "weight_enumerator: " << r.weights.enumerator_string() << "\n";
    os << "minimum_distance: " << r.min_distance << "\n";
    if (r.self_dual) os << "self_dual: " << (*r.self_dual ? "yes" : "no") << "\n";
    if (r.classic_strength) os << "classic_strength: " << *r.classic_strength << "\n";
    if (r.generalized_strength) os << "generalized_strength: " << *r.generalized_strength << "\n";
    if (r.one_design)
        os << "one_design_condition: " << (*r.one_design ? "yes" : "no") << "\n";

    if (r.scheme == "linear") {
        os << "access_groups: ";
        bool first_group = true;
        for (const auto& [size, count] : r.group_sizes) {
            if (!first_group) os << "  ";
            first_group = false;
            os << count << " (" << size << ")";
        }
        os << "\n";
        os << "access_total: " << r.gamma_total << "\n";
        if (!r.size_distribution.empty()) {
            os << "size_distribution: ";
            bool first = true;
            for (const auto& [e, c] : r.size_distribution) {
                if (!first) os << " + ";
                first = false;
                if (c != 1) os << c;
                os << "y^" << e;
            }
            os << "\n";
        }
        os << "minimal_groups: ";
        bool first_min = true;
        for (const auto& [size, count] : r.minimal_group_sizes) {
            if (!first_min) os << "  ";
            first_min = false;
            os << count << " (" << size << ")";
        }
        os << "\n";
        os << "minimal_total: " << r.minimal_total << "\n";
    } else {
        if (r.scheme == "additive-analytic") {
            os << "lambda_" << r.lambda_strength << ":";
            for (const auto& [w, l] : r.lambda_t) os << "  w" << w << " " << l;
            os << "\n";
            os << "lambda_1:";
            for (const auto& [w, l] : r.lambda_1) os << "  w" << w << " " << l;
            os << "\n";
        } else {
            os << "H_counts: H1 " << r.class_counts[0] << "  H2 " << r.class_counts[1]
               << "  H3 " << r.class_counts[2] << "\n";
        }
        os << "mu_counts:";
        for (const auto& [w, mus] : r.mu_by_weight)
            os << "  w" << w << " " << mus[0] << "/" << mus[1] << "/" << mus[2];
        os << "\n";
        os << "access_pairs: ";
        bool first = true;
        for (const auto& [pq, count] : r.pair_terms) {
            if (!first) os << "  ";
            first = false;
            os << count << " (" << pq.first << "," << pq.second << ")";
        }
        os << "\n";
        os << "access_pairs_total: " << r.pair_total << "\n";
        os << "access_pairs_ordered_sum: " << r.ordered_pair_total << "\n";
        if (r.minimal_pair_count) os << "minimal_pairs: " << *r.minimal_pair_count << "\n";
        if (!r.minimal_component_sizes.empty())
            os << "minimal_component_sizes: " << join_sizes(r.minimal_component_sizes) << "\n";
        if (!r.minimal_guaranteed_sizes.empty())
            os << "minimal_guaranteed_sizes: " << join_sizes(r.minimal_guaranteed_sizes) << "\n";
        if (!r.minimal_undetermined_sizes.empty())
            os << "minimal_undetermined_sizes: " << join_sizes(r.minimal_undetermined_sizes)
               << "\n";
        if (r.count_minimal) {
            os << "minimal_formula_total: " << r.count_minimal->formula_total << "\n";
            if (r.count_minimal->formula_membership)
                os << "minimal_formula_membership: " << *r.count_minimal->formula_membership
                   << "\n";
            os << "minimal_single_pair: " << r.count_minimal->brute_single_pair << "\n";
            os << "minimal_all_class_pairs: " << r.count_minimal->brute_all_class_pairs << "\n";
            if (!r.count_minimal->dictatorial.empty()) {
                os << "dictatorial:";
                for (int i : r.count_minimal->dictatorial) os << " P" << i;
                os << "\n";
            }
        }
    }

    os << "accessibility " << r.accessibility.fraction_string() << " = "
       << r.accessibility.decimal_string() << "\n";
    for (const std::string& f : r.flags) os << "flag: " << f << "\n";
    if (!r.recovery_vectors.empty()) os << r.recovery_vectors;
    return os.str();
}

std::string render_json_lines(const AccessReport& r) {
    using json = nlohmann::ordered_json;
    std::ostringstream os;
    auto emit = [&](const json& j) { os << j.dump() << "\n"; };

    emit({{"record", "scheme"},
          {"scheme", r.scheme},
          {"code", r.code_name},
          {"n", r.n},
          {"participants", r.m}});
    {
        json counts = json::object();
        for (int i = 0; i < int(r.weights.counts.size()); ++i)
            if (r.weights.counts[size_t(i)])
                counts[std::to_string(i)] = r.weights.counts[size_t(i)];
        json j = {{"record", "weights"},
                  {"enumerator", r.weights.enumerator_string()},
                  {"counts", counts},
                  {"min_distance", r.min_distance}};
        if (r.self_dual) j["self_dual"] = *r.self_dual;
        emit(j);
    }
    if (r.classic_strength || r.one_design) {
        json j = {{"record", "strengths"}};
        if (r.classic_strength) j["classic"] = *r.classic_strength;
        if (r.generalized_strength) j["generalized"] = *r.generalized_strength;
        if (r.one_design) j["one_design_condition"] = *r.one_design;
        emit(j);
    }

    if (r.scheme == "linear") {
        for (const auto& [size, count] : r.group_sizes)
            emit({{"record", "group"}, {"size", size}, {"count", count}});
        emit({{"record", "group_total"}, {"count", r.gamma_total}});
        for (const auto& [e, c] : r.size_distribution)
            emit({{"record", "size_distribution_term"}, {"exponent", e}, {"coefficient", c}});
        for (const auto& [size, count] : r.minimal_group_sizes)
            emit({{"record", "minimal_group"}, {"size", size}, {"count", count}});
        emit({{"record", "minimal_total"}, {"count", r.minimal_total}});
    } else {
        if (r.scheme == "additive")
            emit({{"record", "class_counts"},
                  {"H1", r.class_counts[0]},
                  {"H2", r.class_counts[1]},
                  {"H3", r.class_counts[2]}});
        for (const auto& [w, l] : r.lambda_t)
            emit({{"record", "lambda_t"}, {"t", r.lambda_strength}, {"weight", w}, {"value", l}});
        for (const auto& [w, l] : r.lambda_1)
            emit({{"record", "lambda_1"}, {"weight", w}, {"value", l}});
        for (const auto& [w, mus] : r.mu_by_weight)
            emit({{"record", "mu"},
                  {"weight", w},
                  {"H1", mus[0]},
                  {"H2", mus[1]},
                  {"H3", mus[2]}});
        for (const auto& [pq, count] : r.pair_terms)
            emit({{"record", "gf_term"}, {"p", pq.first}, {"q", pq.second}, {"count", count}});
        emit({{"record", "gf_total"},
              {"single_pair", r.pair_total},
              {"ordered_sum", r.ordered_pair_total}});
        if (r.minimal_pair_count) {
            json j = {{"record", "minimal_pairs"}, {"single_pair", *r.minimal_pair_count}};
            j["component_sizes"] = r.minimal_component_sizes;
            emit(j);
        }
        if (!r.minimal_guaranteed_sizes.empty() || !r.minimal_undetermined_sizes.empty())
            emit({{"record", "minimal_sizes"},
                  {"guaranteed", r.minimal_guaranteed_sizes},
                  {"undetermined", r.minimal_undetermined_sizes}});
        if (r.count_minimal) {
            json j = {{"record", "count_minimal"},
                      {"formula_total", r.count_minimal->formula_total},
                      {"single_pair", r.count_minimal->brute_single_pair},
                      {"all_class_pairs", r.count_minimal->brute_all_class_pairs}};
            if (r.count_minimal->formula_membership)
                j["formula_membership"] = *r.count_minimal->formula_membership;
            j["dictatorial"] = r.count_minimal->dictatorial;
            emit(j);
        }
    }

    emit({{"record", "accessibility"},
          {"count", r.accessibility.count},
          {"denominator", r.accessibility.denominator()},
          {"fraction", r.accessibility.fraction_string()},
          {"reduced", r.accessibility.reduced_string()},
          {"decimal", r.accessibility.decimal_string()}});
    for (const std::string& f : r.flags) emit({{"record", "flag"}, {"text", f}});
    if (!r.recovery_vectors.empty()) {
        std::istringstream lines(r.recovery_vectors);
        std::string line;
        while (std::getline(lines, line)) emit({{"record", "recovery_vector"}, {"line", line}});
    }
    return os.str();
}

}  // namespace

std::string render(const AccessReport& report, ReportFormat format) {
    return format == ReportFormat::text ? render_text(report) : render_json_lines(report);
}

}  // namespace gf4sss
