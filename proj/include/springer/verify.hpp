#pragma once

#include "springer/doubly_flags.hpp"
#include "springer/flags.hpp"
#include "springer/strata.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace springer {

/// Thrown when an instance's flag count exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// |F_{k_•}(F_q^d)| = Π_j [k_{j+1} choose k_j]_q with k_{n+1} = d.
std::int64_t partial_flag_count(int ambient_dim, const std::vector<int>& dims, unsigned q);

struct StratumCounts {
    std::int64_t total = 0;  ///< |A_x ∩ P_α|
    std::int64_t fixed = 0;  ///< |A_x^s ∩ P_α|
};

struct StableFlagRecord {
    PartialFlag flag;
    AlphaMatrix alpha;
    bool homogeneous = false;
    PartialFlag homogenized;
};

/// Violations of the homogenization properties seen over every flag of A.
struct HomogenizeAudit {
    std::int64_t checked = 0;
    std::int64_t not_homogeneous = 0;
    std::int64_t not_idempotent = 0;
    std::int64_t signature_changed = 0;
    std::int64_t stability_lost = 0;
    bool clean() const noexcept {
        return not_homogeneous == 0 && not_idempotent == 0 && signature_changed == 0 && stability_lost == 0;
    }
};

/// Raw output of the exhaustive pass over A = F_{k_•}(F_q^d).
struct BruteForceCensus {
    std::int64_t flags_enumerated = 0;
    std::int64_t stable_total = 0;       ///< |A_x|
    std::int64_t homogeneous_stable = 0; ///< |A_x^s|
    std::map<AlphaMatrix, StratumCounts> buckets;
    std::vector<StableFlagRecord> stable;
    std::optional<HomogenizeAudit> audit;
};

struct CensusOptions {
    bool keep_stable = true;
    bool audit_homogenize = false;
};

/// Enumerates every flag, filters x-stable ones, buckets them by orbit
/// signature and sub-buckets by homogeneity.
BruteForceCensus brute_force_stratify(const NilpotentGeometry& geometry, const std::vector<int>& dims,
                                      const CensusOptions& options = {});

struct CheckResult {
    bool passed = true;
    std::vector<std::string> failures;
    void fail(std::string message) {
        passed = false;
        failures.push_back(std::move(message));
    }
};

struct StratumRecord {
    StratumInvariants invariants;
    std::optional<std::int64_t> count_fixed;
    std::optional<std::int64_t> count_total;
    std::int64_t predicted_fixed = 0; ///< poincare(q)
    std::int64_t predicted_total = 0; ///< q^{fiber_dim} poincare(q)
    std::optional<std::int64_t> count_doubly; ///< |F_κ(A_•)(F_q)|, when enumerated
    std::optional<int> empirical_fiber_dim;   ///< log_q(count_total / count_fixed) when integral
};

struct CheckSet {
    std::optional<bool> partition;
    std::optional<bool> counts;
    std::optional<bool> nonemptiness;
    std::optional<bool> fibers;
    std::optional<bool> phi_psi;
    std::optional<bool> homogenize;
    std::optional<bool> resolution;
    std::optional<bool> fixed_locus;
    std::optional<bool> bundle_counts;

    /// True iff no executed check failed.
    bool all_passed() const noexcept;
};

struct InstanceSpec {
    std::vector<int> jordan;
    std::vector<int> dims;
    unsigned q = 2;
};

struct StratificationReport {
    InstanceSpec instance;
    std::vector<StratumRecord> strata;
    std::optional<std::int64_t> brute_total;
    std::int64_t predicted_total = 0;
    std::optional<std::int64_t> flags_enumerated;
    /// Orbit signatures observed by brute force, with their counts.
    std::map<AlphaMatrix, StratumCounts> observed;
    CheckSet checks;
    std::vector<std::string> failures;
};

// Checks on a report produced from a census.
CheckResult check_partition(const StratificationReport& report, const BruteForceCensus& census);
CheckResult check_counts(const StratificationReport& report);
CheckResult check_nonemptiness(const StratificationReport& report);

/// Every homogeneous flag h of a stratum has exactly q^{fiber_dim} stable
/// preimages under homogenization inside the stratum, and homogenization maps
/// each stratum into itself.
CheckResult check_fibers_over_fixed_points(const BruteForceCensus& census, const std::vector<StratumInvariants>& strata,
                                           unsigned q);

/// φ∘ψ = id on F_κ(A_•)(F_q) and ψ∘φ = id on A_x^s ∩ P_α, for every stratum.
/// Also records |F_κ(A_•)(F_q)| per stratum into `doubly_counts`.
CheckResult check_phi_psi(const NilpotentGeometry& geometry, const BruteForceCensus& census,
                          const std::vector<StratumInvariants>& strata, std::vector<std::int64_t>* doubly_counts);

/// |F_κ(A_•)(F_q)| = poincare(q) for every stratum, given the enumerated counts.
CheckResult check_bundle_counts(const std::vector<StratumInvariants>& strata,
                                const std::vector<std::int64_t>& doubly_counts, unsigned q);

CheckResult check_homogenize(const BruteForceCensus& census);

/// The homogeneous x-stable flags are partitioned exactly by signature, the
/// ψ-images of the strata tile them, and dim(V_j ∩ E_{m-i+1}) = κ_{i,j}.
CheckResult check_fixed_locus_topology(const NilpotentGeometry& geometry, const BruteForceCensus& census,
                                       const std::vector<StratumInvariants>& strata);

/// The projection F_κ(A_•) -> F_{κ_{m,•}}(A_m) has image equal to the rank
/// condition set and singleton fibers over the equality locus.
CheckResult check_resolution(const NilpotentGeometry& geometry, const KappaMatrix& kappa);

/// log_q(total / fixed) when it is a nonnegative integer.
std::optional<int> empirical_fiber_dimension(std::int64_t total, std::int64_t fixed, unsigned q);

struct VerifyOptions {
    bool fibers = true;
    bool phi_psi = true;
    bool homogenize = true;
    bool fixed_locus = true;
    bool resolution = false; ///< only applied when the instance has n = 1
    std::uint64_t budget = kDefaultBudget;
    /// Adds 1 to the fiber dimension of this stratum before checking (self-test).
    std::optional<std::size_t> perturb_fiber;
};

/// Throws std::invalid_argument on an invalid spec, BudgetExceeded when the
/// instance is larger than the budget.
NilpotentGeometry geometry_for(const InstanceSpec& spec);

/// Invariants only; no enumeration.
StratificationReport strata_report(const InstanceSpec& spec);

/// Exhaustive verification of one instance.
StratificationReport verify_instance(const InstanceSpec& spec, const VerifyOptions& options = {});

} // namespace springer
