#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "gf4sss/catalog.hpp"
#include "gf4sss/cli.hpp"
#include "gf4sss/report.hpp"

namespace py = pybind11;
using namespace gf4sss;

namespace {

Code load_code_impl(const std::string& source) {
    if (catalog_has(source)) {
        const CatalogEntry& entry = catalog_get(source);
        if (!entry.code)
            throw DomainError("catalog entry '" + source + "' has no generator matrix");
        return *entry.code;
    }
    std::ifstream in(source);
    if (!in) throw DomainError("'" + source + "' is neither a catalog name nor a readable file");
    return read_code(in, source);
}

ShareMap shares_from_dict(const py::dict& d) {
    ShareMap shares;
    for (const auto& item : d) {
        int idx = item.first.cast<int>();
        std::string sym = item.second.cast<std::string>();
        if (sym.size() != 1) throw DomainError("share symbols are single characters");
        shares[idx] = f4_parse_symbol(sym[0]);
    }
    return shares;
}

py::dict shares_to_dict(const ShareMap& shares) {
    py::dict d;
    for (const auto& [i, v] : shares) d[py::int_(i)] = std::string(1, f4_symbol(v));
    return d;
}

std::string access_report_impl(const std::string& source, bool analytic, bool list_recovery,
                               const std::string& format) {
    ReportFormat fmt = format == "text" ? ReportFormat::text : ReportFormat::json_lines;
    AccessReport rep;
    if (analytic) {
        if (catalog_has(source) && catalog_get(source).enumerator) {
            const WeightDistribution& wd = *catalog_get(source).enumerator;
            rep = build_analytic_access_report(wd, wd.length(), source);
        } else {
            Code code = load_code_impl(source);
            rep = build_analytic_access_report(weight_distribution(code), code.length(), source);
        }
    } else {
        Code code = load_code_impl(source);
        if (code.kind() == CodeKind::additive)
            rep = build_additive_access_report(make_additive_scheme(code), source, list_recovery);
        else
            rep = build_linear_access_report(make_linear_scheme(code), source);
    }
    return render(rep, fmt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "secret sharing schemes from additive and linear codes over GF(4)";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    static py::exception<DomainError> domain_exc(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded&) {
            std::rethrow_exception(p);
        } catch (const DomainError& e) {
            domain_exc(e.what());
        }
    });

    py::class_<Code>(m, "Code")
        .def_property_readonly("name", &Code::name)
        .def_property_readonly("n", &Code::length)
        .def_property_readonly("k", &Code::k)
        .def_property_readonly("kind",
                               [](const Code& c) {
                                   return c.kind() == CodeKind::additive ? "additive" : "linear";
                               })
        .def_property_readonly("field",
                               [](const Code& c) {
                                   return c.field() == FieldTag::gf2 ? "gf2" : "gf4";
                               })
        .def_property_readonly("rows",
                               [](const Code& c) {
                                   std::vector<std::string> rows;
                                   for (const Word& r : c.rows()) rows.push_back(r.symbols());
                                   return rows;
                               })
        .def("codeword_count", &Code::codeword_count)
        .def("weight_distribution",
             [](const Code& c) { return weight_distribution(c).counts; })
        .def("minimum_distance", [](const Code& c) { return minimum_distance(c); })
        .def("is_self_dual", [](const Code& c) { return is_self_dual(c); })
        .def("dual", [](const Code& c) { return dual_code(c); })
        .def("to_text", [](const Code& c) { return code_to_string(c); })
        .def("__repr__", [](const Code& c) {
            std::ostringstream os;
            os << "<Code " << (c.name().empty() ? "?" : c.name()) << " n=" << c.length()
               << " k=" << c.k() << ">";
            return os.str();
        });

    m.def("catalog_names", &catalog_names);
    m.def("load_code", &load_code_impl, py::arg("source"),
          "Load a catalog code by name or a code file by path.");
    m.def(
        "parse_code", [](const std::string& text) { return parse_code(text); }, py::arg("text"));

    m.def(
        "deal",
        [](const Code& code, const std::string& secret, uint64_t seed) {
            if (secret.size() != 1) throw DomainError("secret is a single symbol");
            F4 s = f4_parse_symbol(secret[0]);
            if (code.kind() == CodeKind::additive)
                return shares_to_dict(deal_additive(make_additive_scheme(code), s, seed).shares);
            return shares_to_dict(deal_linear(make_linear_scheme(code), s, seed).shares);
        },
        py::arg("code"), py::arg("secret"), py::arg("seed"),
        "Deal shares; returns {participant index: symbol}.");

    m.def(
        "recover",
        [](const Code& code, const py::dict& shares_d) {
            ShareMap shares = shares_from_dict(shares_d);
            if (code.kind() == CodeKind::linear) {
                LinearScheme scheme = make_linear_scheme(code);
                std::set<int> subset;
                for (const auto& [i, v] : shares) subset.insert(i);
                auto coeffs = find_recovery_linear(scheme.dual, subset);
                if (!coeffs) throw DomainError("shares cannot recover the secret");
                return std::string(1, f4_symbol(recover_linear(shares, *coeffs)));
            }
            AdditiveScheme scheme = make_additive_scheme(code);
            HClasses h = extract_H(scheme.dual);
            uint32_t present = 0;
            for (const auto& [i, v] : shares) present |= 1u << (i - 1);
            for (int a = 1; a <= 3; ++a)
                for (int b = a + 1; b <= 3; ++b) {
                    const RecoveryVector *xa = nullptr, *yb = nullptr;
                    for (const RecoveryVector& rv : h.of(a))
                        if ((rv.group & ~present) == 0 &&
                            (!xa || rv.word.weight() < xa->word.weight()))
                            xa = &rv;
                    for (const RecoveryVector& rv : h.of(b))
                        if ((rv.group & ~present) == 0 &&
                            (!yb || rv.word.weight() < yb->word.weight()))
                            yb = &rv;
                    if (xa && yb)
                        return std::string(1, f4_symbol(recover_additive(*xa, *yb, shares)));
                }
            throw DomainError("shares cover no two recovery vectors of distinct classes");
        },
        py::arg("code"), py::arg("shares"));

    m.def("access_report", &access_report_impl, py::arg("source"), py::arg("analytic") = false,
          py::arg("list_recovery") = false, py::arg("format") = "jsonl",
          "Render the access-structure report for a catalog name or code file.");

    m.def(
        "detect_cheaters",
        [](const Code& code, const py::dict& shares_d, const std::optional<std::string>& secret) {
            std::optional<F4> s;
            if (secret) {
                if (secret->size() != 1) throw DomainError("secret is a single symbol");
                s = f4_parse_symbol((*secret)[0]);
            }
            CheaterResult res = detect_cheaters(code, shares_from_dict(shares_d), s);
            py::dict d;
            const char* status = res.status == CheaterResult::Status::clean       ? "clean"
                                 : res.status == CheaterResult::Status::corrected ? "corrected"
                                 : res.status == CheaterResult::Status::detected_only
                                     ? "detected-only"
                                     : "undecidable";
            d["status"] = status;
            d["distance"] = res.distance;
            py::list cheaters;
            for (int i : res.cheaters) cheaters.append(i);
            d["cheaters"] = cheaters;
            return d;
        },
        py::arg("code"), py::arg("shares"), py::arg("secret") = std::nullopt);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int status = gf4sss::cli::run(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (status, stdout, stderr).");
}
