#include "springer/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace springer {

namespace {

constexpr const char* kScopeNote =
    "verification by exact point counting over F_q; local triviality and smoothness are checked only through "
    "their counting consequences";

Json matrix_json(const IntMatrix& m) { return Json(m.to_rows()); }

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string flatten(const IntMatrix& m) {
    std::string s;
    for (std::size_t t = 0; t < m.data().size(); ++t) s += (t ? ";" : "") + std::to_string(m.data()[t]);
    return s;
}

std::string optional_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string base_text(const std::vector<GrassmannianFactor>& base) {
    std::string s;
    for (const auto& g : base) {
        if (!s.empty()) s += " ";
        s += "G" + std::to_string(g.sub) + "(" + std::to_string(g.amb) + ")";
    }
    return s;
}

} // namespace

std::string format_list(const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
    return s;
}

Json to_json(const StratificationReport& report) {
    Json j;
    j["instance"] = {{"jordan", report.instance.jordan}, {"dims", report.instance.dims}, {"q", report.instance.q}};
    Json strata = Json::array();
    for (const auto& rec : report.strata) {
        const auto& inv = rec.invariants;
        Json base = Json::array();
        for (const auto& g : inv.base) base.push_back({{"sub", g.sub}, {"amb", g.amb}});
        Json s;
        s["alpha"] = matrix_json(inv.alpha.values);
        s["kappa"] = matrix_json(inv.kappa.values);
        s["delta"] = matrix_json(inv.delta);
        s["epsilon"] = matrix_json(inv.epsilon);
        s["base"] = std::move(base);
        s["dim"] = inv.dimension;
        s["poincare"] = inv.poincare.coefficients();
        s["poincare_str"] = inv.poincare.to_string();
        s["fiber_dim"] = inv.fiber_dim;
        s["count_fixed"] = optional_json(rec.count_fixed);
        s["count_total"] = optional_json(rec.count_total);
        s["predicted_fixed"] = rec.predicted_fixed;
        s["predicted_total"] = rec.predicted_total;
        s["count_doubly"] = optional_json(rec.count_doubly);
        s["empirical_fiber_dim"] = optional_json(rec.empirical_fiber_dim);
        strata.push_back(std::move(s));
    }
    j["strata"] = std::move(strata);
    j["totals"] = {{"brute", optional_json(report.brute_total)},
                   {"predicted", report.predicted_total},
                   {"flags_enumerated", optional_json(report.flags_enumerated)}};
    const auto& c = report.checks;
    j["checks"] = {{"partition", optional_json(c.partition)},
                   {"counts", optional_json(c.counts)},
                   {"nonemptiness", optional_json(c.nonemptiness)},
                   {"fibers", optional_json(c.fibers)},
                   {"phi_psi", optional_json(c.phi_psi)},
                   {"homogenize", optional_json(c.homogenize)},
                   {"resolution", optional_json(c.resolution)},
                   {"fixed_locus", optional_json(c.fixed_locus)},
                   {"bundle_counts", optional_json(c.bundle_counts)}};
    j["failures"] = report.failures;
    j["note"] = kScopeNote;
    return j;
}

std::string to_text(const StratificationReport& report) {
    std::ostringstream out;
    const auto& in = report.instance;
    out << "instance: jordan=(" << format_list(in.jordan) << ") dims=(" << format_list(in.dims) << ") q=" << in.q
        << "\n";
    out << "strata: " << report.strata.size() << "\n";
    std::size_t index = 0;
    for (const auto& rec : report.strata) {
        const auto& inv = rec.invariants;
        out << "\n[" << index++ << "] alpha=" << to_string(inv.alpha.values) << "\n"
            << "    kappa=" << to_string(inv.kappa.values) << " delta=" << to_string(inv.delta)
            << " epsilon=" << to_string(inv.epsilon) << "\n"
            << "    base: " << base_text(inv.base) << "\n"
            << "    dim=" << inv.dimension << " poincare=" << inv.poincare.to_string()
            << " poincare(q)=" << rec.predicted_fixed << " fiber_dim=" << inv.fiber_dim << "\n";
        if (rec.count_total)
            out << "    count_fixed=" << optional_text(rec.count_fixed) << " count_total=" << optional_text(rec.count_total)
                << " predicted_total=" << rec.predicted_total << "\n";
    }
    out << "\ntotals: brute=" << optional_text(report.brute_total) << " predicted=" << report.predicted_total << "\n";
    const auto& c = report.checks;
    const std::pair<const char*, const std::optional<bool>*> rows[] = {
        {"partition", &c.partition},   {"counts", &c.counts},         {"nonemptiness", &c.nonemptiness},
        {"fibers", &c.fibers},         {"phi_psi", &c.phi_psi},       {"homogenize", &c.homogenize},
        {"resolution", &c.resolution}, {"fixed_locus", &c.fixed_locus}, {"bundle_counts", &c.bundle_counts}};
    bool any = false;
    for (const auto& [name, value] : rows) {
        if (!value->has_value()) continue;
        if (!any) out << "checks:\n";
        any = true;
        out << "    " << std::left << std::setw(14) << name << (**value ? "pass" : "FAIL") << "\n";
    }
    for (const auto& f : report.failures) out << "  ! " << f << "\n";
    out << "note: " << kScopeNote << "\n";
    return out.str();
}

std::string to_csv(const StratificationReport& report) {
    std::ostringstream out;
    out << "alpha,kappa,delta,epsilon,base,dim,poincare,fiber_dim,count_fixed,count_total,predicted_total\n";
    for (const auto& rec : report.strata) {
        const auto& inv = rec.invariants;
        std::string base, poly;
        for (const auto& g : inv.base) base += (base.empty() ? "" : ";") + std::to_string(g.sub) + "/" + std::to_string(g.amb);
        for (std::size_t t = 0; t < inv.poincare.coefficients().size(); ++t)
            poly += (t ? ";" : "") + std::to_string(inv.poincare.coefficients()[t]);
        out << flatten(inv.alpha.values) << "," << flatten(inv.kappa.values) << "," << flatten(inv.delta) << ","
            << flatten(inv.epsilon) << "," << base << "," << inv.dimension << "," << poly << "," << inv.fiber_dim << ","
            << (rec.count_fixed ? std::to_string(*rec.count_fixed) : "") << ","
            << (rec.count_total ? std::to_string(*rec.count_total) : "") << "," << rec.predicted_total << "\n";
    }
    return out.str();
}

std::string render(const StratificationReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv: return to_csv(report);
    case OutputFormat::Text: break;
    }
    return to_text(report);
}

CheckSelection parse_checks(const std::string& list, std::uint64_t budget) {
    CheckSelection sel;
    sel.options.budget = budget;
    sel.options.fibers = sel.options.phi_psi = sel.options.homogenize = sel.options.fixed_locus = false;
    sel.options.resolution = false;
    bool any_enumeration = false;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "strata") {
            continue;
        } else if (item == "verify" || item == "all") {
            sel.options.fibers = sel.options.phi_psi = sel.options.homogenize = sel.options.fixed_locus = true;
            any_enumeration = true;
            if (item == "all") sel.options.resolution = true;
        } else if (item == "resolution") {
            sel.options.resolution = true;
            any_enumeration = true;
        } else {
            throw std::invalid_argument("unknown check '" + item + "' (expected strata, verify, resolution, all)");
        }
    }
    sel.enumerate = any_enumeration || list.empty();
    if (list.empty()) sel.options.fibers = sel.options.phi_psi = sel.options.homogenize = sel.options.fixed_locus = true;
    return sel;
}

std::vector<SuiteEntry> parse_suite(const Json& config, std::uint64_t default_budget) {
    if (!config.is_object()) throw SuiteConfigError("suite config must be a JSON object");
    std::uint64_t budget = config.value("budget", default_budget);
    std::vector<SuiteEntry> entries;
    if (!config.contains("instances")) return entries;
    const Json& list = config.at("instances");
    if (!list.is_array()) throw SuiteConfigError("'instances' must be an array");
    try {
        for (const auto& item : list) {
            SuiteEntry e;
            e.spec.jordan = item.at("jordan").get<std::vector<int>>();
            e.spec.dims = item.at("dims").get<std::vector<int>>();
            e.spec.q = item.value("q", 2u);
            const CheckSelection sel = parse_checks(item.value("checks", std::string("verify")), budget);
            e.options = sel.options;
            if (item.contains("expect")) {
                const Json& ex = item.at("expect");
                if (ex.contains("strata")) e.expect.strata = ex.at("strata").get<std::size_t>();
                if (ex.contains("total")) e.expect.total = ex.at("total").get<std::int64_t>();
                if (ex.contains("records"))
                    e.expect.records = ex.at("records").get<std::vector<std::array<std::int64_t, 3>>>();
            }
            entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw SuiteConfigError(std::string("malformed suite instance: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw SuiteConfigError(ex.what());
    }
    return entries;
}

std::vector<SuiteEntry> load_suite(const std::string& path, std::uint64_t default_budget) {
    std::ifstream in(path);
    if (!in) throw SuiteConfigError("cannot read suite config '" + path + "'");
    Json config;
    try {
        in >> config;
    } catch (const nlohmann::json::exception& ex) {
        throw SuiteConfigError("suite config '" + path + "' is not valid JSON: " + ex.what());
    }
    return parse_suite(config, default_budget);
}

std::vector<SuiteRow> run_suite(const std::vector<SuiteEntry>& entries) {
    std::vector<SuiteRow> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) {
        SuiteRow row;
        row.spec = e.spec;
        try {
            row.report = verify_instance(e.spec, e.options);
        } catch (const std::exception& ex) {
            row.failures.push_back(ex.what());
            rows.push_back(std::move(row));
            continue;
        }
        const auto& rep = *row.report;
        if (e.expect.strata && *e.expect.strata != rep.strata.size()) {
            row.expectation_ok = false;
            row.failures.push_back("expected " + std::to_string(*e.expect.strata) + " strata, got " +
                                   std::to_string(rep.strata.size()));
        }
        if (e.expect.total && (!rep.brute_total || *e.expect.total != *rep.brute_total)) {
            row.expectation_ok = false;
            row.failures.push_back("expected total " + std::to_string(*e.expect.total) + ", got " +
                                   optional_text(rep.brute_total));
        }
        if (e.expect.records) {
            std::vector<std::array<std::int64_t, 3>> got;
            for (const auto& r : rep.strata)
                got.push_back({r.count_total.value_or(-1), r.count_fixed.value_or(-1), r.invariants.fiber_dim});
            if (got != *e.expect.records) {
                row.expectation_ok = false;
                row.failures.push_back("per-stratum (total, fixed, fiber_dim) records differ from expectation");
            }
        }
        for (const auto& f : rep.failures) row.failures.push_back(f);
        row.passed = row.expectation_ok && rep.checks.all_passed();
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const char* cell(const std::optional<bool>& v) { return !v ? "-" : (*v ? "pass" : "FAIL"); }

} // namespace

std::string suite_matrix_text(const std::vector<SuiteRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(30) << "instance" << " " << std::setw(7) << "strata"
        << " partition counts nonempty fibers phi_psi homog fixed bundle resol expect result\n";
    std::size_t passed = 0;
    for (const auto& row : rows) {
        std::string name = "(" + format_list(row.spec.jordan) + ") [" + format_list(row.spec.dims) +
                           "] q=" + std::to_string(row.spec.q);
        out << std::left << std::setw(30) << name << " ";
        if (!row.report) {
            out << "error: " << (row.failures.empty() ? "" : row.failures.front()) << "\n";
            continue;
        }
        const auto& c = row.report->checks;
        out << std::setw(7) << row.report->strata.size() << " " << std::setw(9) << cell(c.partition) << " "
            << std::setw(6) << cell(c.counts) << " " << std::setw(8) << cell(c.nonemptiness) << " " << std::setw(6)
            << cell(c.fibers) << " " << std::setw(7) << cell(c.phi_psi) << " " << std::setw(5) << cell(c.homogenize)
            << " " << std::setw(5) << cell(c.fixed_locus) << " " << std::setw(6) << cell(c.bundle_counts) << " "
            << std::setw(5) << cell(c.resolution) << " " << std::setw(6) << (row.expectation_ok ? "ok" : "FAIL") << " "
            << (row.passed ? "PASS" : "FAIL") << "\n";
        if (row.passed) ++passed;
    }
    out << passed << "/" << rows.size() << " instances passed\n";
    return out.str();
}

Json suite_matrix_json(const std::vector<SuiteRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["instance"] = {{"jordan", row.spec.jordan}, {"dims", row.spec.dims}, {"q", row.spec.q}};
        j["passed"] = row.passed;
        j["checks"] = row.report ? to_json(*row.report)["checks"] : Json(nullptr);
        j["failures"] = row.failures;
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace springer
