#pragma once

#include "springer/verify.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace springer {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv };

/// Report serialization. Polynomials are coefficient arrays, lowest degree
/// first; the pretty string is informational.
Json to_json(const StratificationReport& report);
std::string to_text(const StratificationReport& report);
std::string to_csv(const StratificationReport& report);
std::string render(const StratificationReport& report, OutputFormat format);

/// Comma list over {strata, verify, resolution, all}. "strata" alone means no
/// enumeration; partition/counts/nonemptiness run whenever enumeration does.
struct CheckSelection {
    bool enumerate = true;
    VerifyOptions options;
};
CheckSelection parse_checks(const std::string& list, std::uint64_t budget);

/// Expected values attached to a suite instance. Any mismatch fails the row.
struct SuiteExpectation {
    std::optional<std::size_t> strata;
    std::optional<std::int64_t> total;
    /// (count_total, count_fixed, fiber_dim) per stratum, in α order
    std::optional<std::vector<std::array<std::int64_t, 3>>> records;
};

struct SuiteEntry {
    InstanceSpec spec;
    VerifyOptions options;
    SuiteExpectation expect;
};

/// Thrown for an unreadable or malformed suite configuration.
class SuiteConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Suite configuration:
/// {"budget": N?, "instances": [{"jordan": [..], "dims": [..], "q": p,
///   "checks": "all"|"verify"|"resolution"?, "expect": {"strata": n,
///   "total": n, "records": [[total, fixed, fiber_dim], ...]}?}, ...]}
std::vector<SuiteEntry> parse_suite(const Json& config, std::uint64_t default_budget);
std::vector<SuiteEntry> load_suite(const std::string& path, std::uint64_t default_budget);

struct SuiteRow {
    InstanceSpec spec;
    std::optional<StratificationReport> report;
    bool expectation_ok = true;
    bool passed = false;
    std::vector<std::string> failures;
};

std::vector<SuiteRow> run_suite(const std::vector<SuiteEntry>& entries);
std::string suite_matrix_text(const std::vector<SuiteRow>& rows);
Json suite_matrix_json(const std::vector<SuiteRow>& rows);

std::string format_list(const std::vector<int>& values);

} // namespace springer
