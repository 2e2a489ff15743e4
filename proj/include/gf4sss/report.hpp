#ifndef GF4SSS_REPORT_HPP
#define GF4SSS_REPORT_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gf4sss/sss_additive.hpp"
#include "gf4sss/sss_linear.hpp"

namespace gf4sss {

// Aggregated analysis of one scheme. Every number is copied from an
// operation result; discrepancy flags are carried along and always rendered.
struct AccessReport {
    std::string scheme;  // "linear" | "additive" | "additive-analytic"
    std::string code_name;
    int n = 0;
    int m = 0;

    WeightDistribution weights;
    int min_distance = 0;
    std::optional<bool> self_dual;
    std::optional<int> classic_strength;
    std::optional<int> generalized_strength;
    std::optional<bool> one_design;

    // linear scheme
    std::map<int, uint64_t> group_sizes;  // group size -> count
    uint64_t gamma_total = 0;
    std::map<int, uint64_t> minimal_group_sizes;
    uint64_t minimal_total = 0;
    std::map<int, uint64_t> size_distribution;  // exponent -> coefficient

    // additive scheme
    std::array<uint64_t, 3> class_counts{};
    std::map<int, std::array<uint64_t, 3>> mu_by_weight;
    std::map<std::pair<int, int>, uint64_t> pair_terms;  // (p-1, q-1) -> count
    uint64_t pair_total = 0;
    uint64_t ordered_pair_total = 0;
    std::optional<uint64_t> minimal_pair_count;
    std::set<int> minimal_component_sizes;
    std::optional<CountMinimalReport> count_minimal;

    // analytic path
    int lambda_strength = 0;
    std::map<int, uint64_t> lambda_t;
    std::map<int, uint64_t> lambda_1;
    std::set<int> minimal_guaranteed_sizes;
    std::set<int> minimal_undetermined_sizes;

    Accessibility accessibility;
    std::vector<std::string> flags;
    std::string recovery_vectors;  // optional H listing, empty when omitted
};

AccessReport build_linear_access_report(const LinearScheme& scheme, const std::string& name);
AccessReport build_additive_access_report(const AdditiveScheme& scheme, const std::string& name,
                                          bool include_listing = false);
AccessReport build_analytic_access_report(const WeightDistribution& wd, int n,
                                          const std::string& name);

enum class ReportFormat { text, json_lines };

// Deterministic rendering: byte-identical output for identical reports,
// generating-function terms sorted by (p, q).
std::string render(const AccessReport& report, ReportFormat format);

}  // namespace gf4sss

#endif
