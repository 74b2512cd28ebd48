#include "springer/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument(std::string("--") + what + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument(std::string("--") + what + ": trailing comma");
    return out;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SPRINGER_STRATA_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("SPRINGER_STRATA_BUDGET is not a number: ") + env);
        }
    }
    return springer::kDefaultBudget;
}

springer::OutputFormat parse_format(const std::string& f) {
    if (f == "json") return springer::OutputFormat::Json;
    if (f == "csv") return springer::OutputFormat::Csv;
    return springer::OutputFormat::Text;
}

struct InstanceArgs {
    std::string jordan;
    std::string dims;
    unsigned q = 2;
    std::string format = "text";
    std::optional<std::uint64_t> budget;
    std::string checks = "verify";
    bool expect_failure = false;
    std::optional<std::size_t> perturb_fiber;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
    cmd->add_option("--jordan", a.jordan, "Jordan type, e.g. 2,1")->required();
    cmd->add_option("--dims", a.dims, "dimension vector, e.g. 1,2")->required();
    cmd->add_option("--q", a.q, "prime field size")->default_val(2);
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
    cmd->add_option("--budget", a.budget, "maximum number of flags to enumerate");
}

springer::InstanceSpec to_spec(const InstanceArgs& a) {
    return {parse_list(a.jordan, "jordan"), parse_list(a.dims, "dims"), a.q};
}

int run_strata(const InstanceArgs& a) {
    const auto report = springer::strata_report(to_spec(a));
    std::cout << springer::render(report, parse_format(a.format));
    return kExitPass;
}

int run_verify(const InstanceArgs& a) {
    const auto spec = to_spec(a);
    auto sel = springer::parse_checks(a.checks, a.budget.value_or(default_budget()));
    sel.options.perturb_fiber = a.perturb_fiber;
    if (!sel.enumerate) {
        std::cout << springer::render(springer::strata_report(spec), parse_format(a.format));
        return kExitPass;
    }
    const auto report = springer::verify_instance(spec, sel.options);
    std::cout << springer::render(report, parse_format(a.format));
    const bool ok = report.checks.all_passed();
    if (a.expect_failure) return ok ? kExitFail : kExitPass;
    return ok ? kExitPass : kExitFail;
}

int run_suite(const std::string& path, const std::string& format, std::optional<std::uint64_t> budget) {
    const auto entries = springer::load_suite(path, budget.value_or(default_budget()));
    const auto rows = springer::run_suite(entries);
    if (format == "json")
        std::cout << springer::suite_matrix_json(rows).dump(2) << "\n";
    else
        std::cout << springer::suite_matrix_text(rows);
    for (const auto& r : rows)
        if (!r.passed) return kExitFail;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit strata of x-stable partial flags over finite fields"};
    app.require_subcommand(1);

    InstanceArgs strata_args;
    auto* strata = app.add_subcommand("strata", "list the strata and their invariants");
    add_instance_options(strata, strata_args);

    InstanceArgs verify_args;
    auto* verify = app.add_subcommand("verify", "verify an instance by exhaustive point counting");
    add_instance_options(verify, verify_args);
    verify->add_option("--checks", verify_args.checks, "comma list over strata, verify, resolution, all")
        ->default_val("verify");
    verify->add_flag("--expect-failure", verify_args.expect_failure, "invert the exit status (self-tests)");
    verify->add_option("--perturb-fiber", verify_args.perturb_fiber, "add 1 to the fiber dimension of stratum N");

    std::string suite_path;
    std::string suite_format = "text";
    std::optional<std::uint64_t> suite_budget;
    auto* suite = app.add_subcommand("suite", "run every instance of a suite config");
    suite->add_option("config", suite_path, "suite config (JSON)")->required();
    suite->add_option("--format", suite_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    suite->add_option("--budget", suite_budget, "maximum number of flags per instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*strata) return run_strata(strata_args);
        if (*verify) return run_verify(verify_args);
        return run_suite(suite_path, suite_format, suite_budget);
    } catch (const springer::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise with --budget or SPRINGER_STRATA_BUDGET)\n";
        return kExitUsage;
    } catch (const springer::SuiteConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
