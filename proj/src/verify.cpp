#include "springer/verify.hpp"

#include <algorithm>
#include <set>

namespace springer {

std::int64_t partial_flag_count(int ambient_dim, const std::vector<int>& dims, unsigned q) {
    QPolynomial count = QPolynomial::constant(1);
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const int upper = j + 1 < dims.size() ? dims[j + 1] : ambient_dim;
        count *= gaussian_binomial(upper, dims[j]);
    }
    return count.evaluate(q);
}

BruteForceCensus brute_force_stratify(const NilpotentGeometry& geometry, const std::vector<int>& dims,
                                      const CensusOptions& options) {
    BruteForceCensus census;
    if (options.audit_homogenize) census.audit = HomogenizeAudit{};
    const Subspace ambient = Subspace::full(geometry.field(), geometry.dimension());
    const MatrixGF& x = geometry.x.matrix;

    for_each_partial_flag(dims, ambient, [&](const PartialFlag& f) {
        ++census.flags_enumerated;
        const bool stable = is_x_stable(f, x);
        std::optional<PartialFlag> hom;
        std::optional<AlphaMatrix> alpha;

        if (census.audit) {
            auto& audit = *census.audit;
            ++audit.checked;
            hom = homogenize(f, geometry);
            alpha = orbit_signature(f, geometry.kernels);
            if (!is_homogeneous(*hom, geometry.graded)) ++audit.not_homogeneous;
            if (homogenize(*hom, geometry) != *hom) ++audit.not_idempotent;
            if (orbit_signature(*hom, geometry.kernels) != *alpha) ++audit.signature_changed;
            if (stable && !is_x_stable(*hom, x)) ++audit.stability_lost;
        }
        if (!stable) return;

        ++census.stable_total;
        if (!alpha) alpha = orbit_signature(f, geometry.kernels);
        const bool homogeneous = is_homogeneous(f, geometry.graded);
        auto& bucket = census.buckets[*alpha];
        ++bucket.total;
        if (homogeneous) {
            ++bucket.fixed;
            ++census.homogeneous_stable;
        }
        if (options.keep_stable) {
            if (!hom) hom = homogenize(f, geometry);
            census.stable.push_back({f, *alpha, homogeneous, std::move(*hom)});
        }
    });
    return census;
}

bool CheckSet::all_passed() const noexcept {
    for (const auto& c : {partition, counts, nonemptiness, fibers, phi_psi, homogenize, resolution, fixed_locus,
                          bundle_counts})
        if (c.has_value() && !*c) return false;
    return true;
}

CheckResult check_partition(const StratificationReport& report, const BruteForceCensus& census) {
    CheckResult r;
    std::int64_t total = 0, fixed = 0;
    for (const auto& [alpha, counts] : report.observed) {
        total += counts.total;
        fixed += counts.fixed;
    }
    if (total != census.stable_total)
        r.fail("partition: strata totals sum to " + std::to_string(total) + " but |A_x| = " +
               std::to_string(census.stable_total));
    if (fixed != census.homogeneous_stable)
        r.fail("partition: fixed counts sum to " + std::to_string(fixed) + " but |A_x^s| = " +
               std::to_string(census.homogeneous_stable));
    return r;
}

CheckResult check_counts(const StratificationReport& report) {
    CheckResult r;
    const auto q = static_cast<std::int64_t>(report.instance.q);
    for (const auto& rec : report.strata) {
        const std::string tag = "counts: alpha=" + to_string(rec.invariants.alpha.values);
        const std::int64_t fixed = rec.count_fixed.value_or(0);
        const std::int64_t total = rec.count_total.value_or(0);
        const std::int64_t poincare = rec.invariants.poincare.evaluate(q);
        const std::int64_t scale = checked_pow(q, static_cast<unsigned>(std::max(rec.invariants.fiber_dim, 0)));
        if (fixed != poincare)
            r.fail(tag + " count_fixed " + std::to_string(fixed) + " != poincare(q) " + std::to_string(poincare));
        if (total != checked_mul(scale, fixed))
            r.fail(tag + " count_total " + std::to_string(total) + " != q^fiber_dim * count_fixed " +
                   std::to_string(checked_mul(scale, fixed)));
    }
    return r;
}

CheckResult check_nonemptiness(const StratificationReport& report) {
    CheckResult r;
    std::set<AlphaMatrix> admissible;
    for (const auto& rec : report.strata) admissible.insert(rec.invariants.alpha);
    for (const auto& [alpha, counts] : report.observed)
        if (!admissible.count(alpha))
            r.fail("nonemptiness: realized signature " + to_string(alpha.values) + " is not admissible");
    for (const auto& alpha : admissible)
        if (!report.observed.count(alpha))
            r.fail("nonemptiness: admissible signature " + to_string(alpha.values) + " is not realized");
    return r;
}

namespace {

std::map<AlphaMatrix, const StratumInvariants*> index_strata(const std::vector<StratumInvariants>& strata) {
    std::map<AlphaMatrix, const StratumInvariants*> idx;
    for (const auto& s : strata) idx[s.alpha] = &s;
    return idx;
}

} // namespace

CheckResult check_fibers_over_fixed_points(const BruteForceCensus& census, const std::vector<StratumInvariants>& strata,
                                           unsigned q) {
    CheckResult r;
    const auto idx = index_strata(strata);
    std::map<PartialFlag, std::int64_t> preimages;
    std::set<PartialFlag> fixed_points;
    for (const auto& rec : census.stable) {
        if (rec.homogeneous) fixed_points.insert(rec.flag);
        ++preimages[rec.homogenized];
    }
    for (const auto& [h, count] : preimages)
        if (!fixed_points.count(h)) {
            r.fail("fibers: homogenization of a stable flag is not a homogeneous stable flag");
            break;
        }
    for (const auto& rec : census.stable) {
        auto it = idx.find(rec.alpha);
        if (it == idx.end()) {
            r.fail("fibers: stable flag with inadmissible signature " + to_string(rec.alpha.values));
            continue;
        }
        if (!rec.homogeneous) continue;
        if (rec.homogenized != rec.flag) r.fail("fibers: a homogeneous flag is moved by homogenization");
        const std::int64_t expected = checked_pow(q, static_cast<unsigned>(std::max(it->second->fiber_dim, 0)));
        const std::int64_t got = preimages.count(rec.flag) ? preimages.at(rec.flag) : 0;
        if (got != expected)
            r.fail("fibers: alpha=" + to_string(rec.alpha.values) + " fixed point has " + std::to_string(got) +
                   " preimages, expected q^fiber_dim = " + std::to_string(expected));
    }
    // homogenization stabilizes each stratum
    std::map<PartialFlag, AlphaMatrix> signature_of;
    for (const auto& rec : census.stable) signature_of.emplace(rec.flag, rec.alpha);
    for (const auto& rec : census.stable) {
        auto it = signature_of.find(rec.homogenized);
        if (it != signature_of.end() && it->second != rec.alpha) {
            r.fail("fibers: homogenization moves a flag out of stratum " + to_string(rec.alpha.values));
            break;
        }
    }
    return r;
}

CheckResult check_phi_psi(const NilpotentGeometry& geometry, const BruteForceCensus& census,
                          const std::vector<StratumInvariants>& strata, std::vector<std::int64_t>* doubly_counts) {
    CheckResult r;
    if (doubly_counts) doubly_counts->assign(strata.size(), 0);
    if (geometry.order() == 0) return r;
    for (std::size_t s = 0; s < strata.size(); ++s) {
        const auto& st = strata[s];
        const std::string tag = "phi_psi: alpha=" + to_string(st.alpha.values);
        std::int64_t count = 0;
        std::int64_t bad = 0;
        for_each_doubly_flag(st.kappa, geometry.a_flag, [&](const DoublyIndexedFlag& f) {
            ++count;
            try {
                const PartialFlag w = psi(f, geometry);
                if (orbit_signature(w, geometry.kernels) != st.alpha) ++bad;
                else if (phi(w, geometry) != f) ++bad;
            } catch (const std::invalid_argument&) {
                ++bad;
            }
        });
        if (bad) r.fail(tag + " phi(psi(F)) != F for " + std::to_string(bad) + " points of F_kappa");
        if (doubly_counts) (*doubly_counts)[s] = count;

        bad = 0;
        for (const auto& rec : census.stable) {
            if (!rec.homogeneous || rec.alpha != st.alpha) continue;
            try {
                const DoublyIndexedFlag f = phi(rec.flag, geometry);
                if (!is_in_doubly_flag_variety(f, st.kappa, geometry.a_flag) || psi(f, geometry) != rec.flag) ++bad;
            } catch (const std::invalid_argument&) {
                ++bad;
            }
        }
        if (bad) r.fail(tag + " psi(phi(f)) != f for " + std::to_string(bad) + " fixed flags");
    }
    return r;
}

CheckResult check_bundle_counts(const std::vector<StratumInvariants>& strata,
                                const std::vector<std::int64_t>& doubly_counts, unsigned q) {
    CheckResult r;
    for (std::size_t s = 0; s < strata.size() && s < doubly_counts.size(); ++s) {
        const auto& st = strata[s];
        const std::int64_t expected = st.poincare.evaluate(q);
        if (doubly_counts[s] != expected)
            r.fail("bundle_counts: alpha=" + to_string(st.alpha.values) + " |F_kappa| = " +
                   std::to_string(doubly_counts[s]) + " != poincare(q) = " + std::to_string(expected));
        if (st.poincare.degree() != st.dimension)
            r.fail("bundle_counts: alpha=" + to_string(st.alpha.values) + " deg(poincare) != dimension");
    }
    return r;
}

CheckResult check_homogenize(const BruteForceCensus& census) {
    CheckResult r;
    if (!census.audit) {
        r.fail("homogenize: no audit was recorded");
        return r;
    }
    const auto& a = *census.audit;
    if (a.not_homogeneous) r.fail("homogenize: " + std::to_string(a.not_homogeneous) + " outputs not homogeneous");
    if (a.not_idempotent) r.fail("homogenize: " + std::to_string(a.not_idempotent) + " outputs not idempotent");
    if (a.signature_changed) r.fail("homogenize: " + std::to_string(a.signature_changed) + " signatures changed");
    if (a.stability_lost) r.fail("homogenize: " + std::to_string(a.stability_lost) + " stable flags lost stability");
    return r;
}

CheckResult check_fixed_locus_topology(const NilpotentGeometry& geometry, const BruteForceCensus& census,
                                       const std::vector<StratumInvariants>& strata) {
    CheckResult r;
    const auto idx = index_strata(strata);
    const int m = geometry.order();
    std::set<PartialFlag> fixed_points;
    for (const auto& rec : census.stable) {
        if (!rec.homogeneous) continue;
        fixed_points.insert(rec.flag);
        auto it = idx.find(rec.alpha);
        if (it == idx.end()) {
            r.fail("fixed_locus: homogeneous flag outside every admissible stratum");
            continue;
        }
        const auto& kappa = it->second->kappa.values;
        for (int i = 1; i <= m; ++i)
            for (std::size_t j = 0; j < rec.flag.length(); ++j) {
                const int got = static_cast<int>(intersect(rec.flag.spaces[j], geometry.graded.pieces[m - i]).dim());
                if (got != kappa(i - 1, j)) {
                    r.fail("fixed_locus: dim(V_j ∩ E_{m-i+1}) differs from kappa for alpha=" + to_string(rec.alpha.values));
                    i = m + 1;
                    break;
                }
            }
    }
    if (m == 0) return r;
    std::set<PartialFlag> covered;
    for (const auto& st : strata) {
        for_each_doubly_flag(st.kappa, geometry.a_flag, [&](const DoublyIndexedFlag& f) {
            const PartialFlag w = psi(f, geometry);
            if (orbit_signature(w, geometry.kernels) != st.alpha)
                r.fail("fixed_locus: psi-image leaves stratum " + to_string(st.alpha.values));
            if (!covered.insert(w).second) r.fail("fixed_locus: psi-images of two strata overlap");
        });
    }
    if (covered != fixed_points)
        r.fail("fixed_locus: psi-images cover " + std::to_string(covered.size()) + " flags, fixed locus has " +
               std::to_string(fixed_points.size()));
    return r;
}

CheckResult check_resolution(const NilpotentGeometry& geometry, const KappaMatrix& kappa) {
    CheckResult r;
    const auto& a = geometry.a_flag;
    const std::size_t m = kappa.values.rows(), n = kappa.values.cols();
    if (m == 0) return r;
    const std::string tag = "resolution: kappa=" + to_string(kappa.values);

    std::map<PartialFlag, std::int64_t> image;
    for_each_doubly_flag(kappa, a, [&](const DoublyIndexedFlag& f) { ++image[f.last_row()]; });

    std::vector<int> target(n);
    for (std::size_t j = 0; j < n; ++j) target[j] = kappa.values(m - 1, j);
    std::set<PartialFlag> schubert;
    std::int64_t open_locus = 0;
    for_each_partial_flag(target, a.spaces[m - 1], [&](const PartialFlag& f) {
        if (!schubert_membership(f, kappa, a)) return;
        schubert.insert(f);
        bool generic = true;
        for (std::size_t i = 0; i < m && generic; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (static_cast<int>(intersect(a.spaces[i], f.spaces[j]).dim()) != kappa.values(i, j)) {
                    generic = false;
                    break;
                }
        if (!generic) return;
        ++open_locus;
        const std::int64_t pre = image.count(f) ? image.at(f) : 0;
        if (pre != 1) r.fail(tag + " flag in the open locus has " + std::to_string(pre) + " preimages");
    });
    std::set<PartialFlag> image_set;
    for (const auto& [f, c] : image) image_set.insert(f);
    if (image_set != schubert)
        r.fail(tag + " projection image has " + std::to_string(image_set.size()) +
               " flags, rank-condition set has " + std::to_string(schubert.size()));
    return r;
}

std::optional<int> empirical_fiber_dimension(std::int64_t total, std::int64_t fixed, unsigned q) {
    if (fixed <= 0 || total % fixed != 0) return std::nullopt;
    std::int64_t ratio = total / fixed;
    int e = 0;
    while (ratio > 1) {
        if (ratio % q != 0) return std::nullopt;
        ratio /= q;
        ++e;
    }
    return ratio == 1 ? std::optional<int>(e) : std::nullopt;
}

NilpotentGeometry geometry_for(const InstanceSpec& spec) {
    const JordanType lambda(spec.jordan);
    const FieldSpec field(spec.q);
    validate_dimension_vector(spec.dims, static_cast<std::size_t>(lambda.dimension()));
    return NilpotentGeometry(build_nilpotent(lambda, field));
}

namespace {

StratumRecord make_record(StratumInvariants inv, unsigned q) {
    StratumRecord rec;
    rec.predicted_fixed = inv.poincare.evaluate(q);
    rec.predicted_total =
        checked_mul(checked_pow(q, static_cast<unsigned>(std::max(inv.fiber_dim, 0))), rec.predicted_fixed);
    rec.invariants = std::move(inv);
    return rec;
}

void apply(CheckResult result, std::optional<bool>& slot, std::vector<std::string>& failures) {
    slot = result.passed;
    for (auto& f : result.failures) failures.push_back(std::move(f));
}

} // namespace

StratificationReport strata_report(const InstanceSpec& spec) {
    const NilpotentGeometry geometry = geometry_for(spec);
    StratificationReport report;
    report.instance = spec;
    for (auto& inv : all_strata(spec.dims, geometry)) {
        report.strata.push_back(make_record(std::move(inv), spec.q));
        report.predicted_total = checked_add(report.predicted_total, report.strata.back().predicted_total);
    }
    return report;
}

StratificationReport verify_instance(const InstanceSpec& spec, const VerifyOptions& options) {
    const NilpotentGeometry geometry = geometry_for(spec);
    const std::int64_t estimate = partial_flag_count(static_cast<int>(geometry.dimension()), spec.dims, spec.q);
    if (static_cast<std::uint64_t>(estimate) > options.budget)
        throw BudgetExceeded("instance has " + std::to_string(estimate) + " flags, budget is " +
                             std::to_string(options.budget));

    std::vector<StratumInvariants> strata = all_strata(spec.dims, geometry);
    if (options.perturb_fiber && *options.perturb_fiber < strata.size()) strata[*options.perturb_fiber].fiber_dim += 1;

    StratificationReport report;
    report.instance = spec;
    for (const auto& inv : strata) {
        report.strata.push_back(make_record(inv, spec.q));
        report.predicted_total = checked_add(report.predicted_total, report.strata.back().predicted_total);
    }

    CensusOptions census_options;
    census_options.keep_stable = options.fibers || options.phi_psi || options.fixed_locus;
    census_options.audit_homogenize = options.homogenize;
    const BruteForceCensus census = brute_force_stratify(geometry, spec.dims, census_options);

    report.brute_total = census.stable_total;
    report.flags_enumerated = census.flags_enumerated;
    report.observed = census.buckets;
    for (auto& rec : report.strata) {
        auto it = census.buckets.find(rec.invariants.alpha);
        const StratumCounts counts = it == census.buckets.end() ? StratumCounts{} : it->second;
        rec.count_total = counts.total;
        rec.count_fixed = counts.fixed;
        rec.empirical_fiber_dim = empirical_fiber_dimension(counts.total, counts.fixed, spec.q);
    }

    apply(check_partition(report, census), report.checks.partition, report.failures);
    apply(check_counts(report), report.checks.counts, report.failures);
    apply(check_nonemptiness(report), report.checks.nonemptiness, report.failures);
    if (options.fibers) apply(check_fibers_over_fixed_points(census, strata, spec.q), report.checks.fibers, report.failures);
    if (options.phi_psi) {
        std::vector<std::int64_t> doubly;
        apply(check_phi_psi(geometry, census, strata, &doubly), report.checks.phi_psi, report.failures);
        if (geometry.order() > 0) {
            for (std::size_t s = 0; s < doubly.size(); ++s) report.strata[s].count_doubly = doubly[s];
            apply(check_bundle_counts(strata, doubly, spec.q), report.checks.bundle_counts, report.failures);
        }
    }
    if (options.homogenize) apply(check_homogenize(census), report.checks.homogenize, report.failures);
    if (options.fixed_locus)
        apply(check_fixed_locus_topology(geometry, census, strata), report.checks.fixed_locus, report.failures);
    // n = 1 only: for n > 1 the rank conditions can be strictly weaker than the image
    if (options.resolution && spec.dims.size() == 1) {
        CheckResult combined;
        for (const auto& st : strata) {
            CheckResult one = check_resolution(geometry, st.kappa);
            if (!one.passed) {
                combined.passed = false;
                for (auto& f : one.failures) combined.failures.push_back(std::move(f));
            }
        }
        apply(std::move(combined), report.checks.resolution, report.failures);
    }
    return report;
}

} // namespace springer
