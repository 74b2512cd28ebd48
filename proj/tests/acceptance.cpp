// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "suite_instances.hpp"

#include "springer/report.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

using namespace springer;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

std::string key(const InstanceSpec& s) {
    return "(" + format_list(s.jordan) + ") [" + format_list(s.dims) + "] q=" + std::to_string(s.q);
}

struct Run {
    InstanceSpec spec;
    StratificationReport report;
    double seconds = 0;
};

NilpotentGeometry geom(const std::vector<int>& lambda, unsigned q) {
    return NilpotentGeometry(build_nilpotent(JordanType(lambda), FieldSpec(q)));
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    // one exhaustive run per suite instance feeds criteria 1 and 3-6
    std::vector<Run> runs;
    std::vector<std::string> errors;
    for (unsigned q : {2u, 3u})
        for (const auto& inst : suite::instances()) {
            Run r;
            r.spec = {inst.jordan, inst.dims, q};
            VerifyOptions opt;
            opt.budget = std::uint64_t{1} << 40;
            const auto t0 = clock::now();
            try {
                r.report = verify_instance(r.spec, opt);
            } catch (const std::exception& e) {
                errors.push_back(key(r.spec) + ": " + e.what());
                continue;
            }
            r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
            runs.push_back(std::move(r));
        }
    const double suite_seconds = std::chrono::duration<double>(clock::now() - start).count();

    std::map<int, Outcome> out;
    for (const auto& e : errors)
        for (int c : {1, 3, 4, 5, 6}) out[c].fail(e);

    double slowest = 0;
    for (const auto& r : runs) {
        const auto& rep = r.report;
        const auto& c = rep.checks;
        const std::string k = key(r.spec);
        slowest = std::max(slowest, r.seconds);

        // 1: partition and per-stratum counts
        std::int64_t sum = 0;
        for (const auto& s : rep.strata) {
            sum += s.count_total.value_or(-1);
            if (s.count_fixed != s.predicted_fixed) out[1].fail(k + ": count_fixed != poincare(q)");
            if (s.count_total != s.predicted_total) out[1].fail(k + ": count_total != q^fiber * count_fixed");
        }
        if (!rep.brute_total || sum != *rep.brute_total) out[1].fail(k + ": strata do not sum to |A_x|");
        if (c.partition != true || c.counts != true) out[1].fail(k + ": partition/counts check failed");
        if (r.seconds >= 60) out[1].fail(k + ": took " + std::to_string(r.seconds) + " s");

        // 3: admissible list equals realized signatures
        std::set<AlphaMatrix> admissible, realized;
        for (const auto& s : rep.strata) admissible.insert(s.invariants.alpha);
        for (const auto& [a, cnt] : rep.observed) realized.insert(a);
        if (admissible != realized || c.nonemptiness != true) out[3].fail(k + ": admissible != realized");

        // 4: phi/psi round trips over F_2
        if (r.spec.q == 2 && c.phi_psi != true) out[4].fail(k + ": phi/psi round trip failed");

        // 5: |F_kappa(F_q)| = poincare(q), deg = sum(delta * epsilon)
        for (const auto& s : rep.strata) {
            int dim = 0;
            for (std::size_t i = 0; i < s.invariants.delta.rows(); ++i)
                for (std::size_t j = 0; j < s.invariants.delta.cols(); ++j)
                    dim += s.invariants.delta(i, j) * s.invariants.epsilon(i, j);
            if (s.invariants.poincare.degree() != dim) out[5].fail(k + ": deg(poincare) != sum delta*epsilon");
            if (s.count_doubly != s.predicted_fixed) out[5].fail(k + ": |F_kappa| != poincare(q)");
        }
        if (c.bundle_counts != true) out[5].fail(k + ": bundle count check failed");

        // 6: homogenization (q = 3 only up to 10^6 flags)
        const bool in_scope = r.spec.q == 2 || rep.flags_enumerated.value_or(0) <= 1'000'000;
        if (in_scope && (c.homogenize != true || c.fibers != true))
            out[6].fail(k + ": homogenization property failed");

        for (const auto& f : rep.failures)
            if (out[0].passed) out[0].fail(k + ": " + f);
    }
    if (suite_seconds >= 600) out[1].fail("suite took " + std::to_string(suite_seconds) + " s");

    // 2: pinned instance
    {
        const auto rep = verify_instance({{2, 1}, {1, 2}, 2});
        std::set<std::array<std::int64_t, 3>> got;
        for (const auto& s : rep.strata)
            got.insert({s.count_total.value_or(-1), s.count_fixed.value_or(-1), s.invariants.fiber_dim});
        const std::set<std::array<std::int64_t, 3>> want{{3, 3, 0}, {2, 1, 1}};
        if (rep.strata.size() != 2 || got != want || rep.brute_total != 5) out[2].fail("pinned instance differs");
    }

    // 7: resolution for n = 1 targets, every valid single-column kappa
    for (const auto& lambda : {std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
        const auto g = geom(lambda, 2);
        const auto& d = g.a_flag.dims;
        const std::size_t m = d.size();
        std::vector<int> col(m, 0);
        int tested = 0;
        while (true) {
            bool monotone = true;
            for (std::size_t i = 1; i < m; ++i) monotone = monotone && col[i - 1] <= col[i];
            if (monotone) {
                IntMatrix km(m, 1);
                for (std::size_t i = 0; i < m; ++i) km(i, 0) = col[i];
                ++tested;
                const auto res = check_resolution(g, KappaMatrix{km});
                if (!res.passed) out[7].fail(res.failures.front());
            }
            std::size_t i = 0;
            while (i < m && ++col[i] > d[i]) col[i++] = 0;
            if (i == m) break;
        }
        if (tested == 0) out[7].fail("no kappa tested");
    }

    // 8: empirical fiber dimension across q
    for (const auto& lambda : {std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
        int d = 0;
        for (int v : lambda) d += v;
        std::vector<int> complete;
        for (int k = 1; k <= d; ++k) complete.push_back(k);
        for (unsigned q : {2u, 3u, 5u}) {
            VerifyOptions opt;
            opt.fibers = opt.phi_psi = opt.homogenize = opt.fixed_locus = false;
            const auto rep = verify_instance({lambda, complete, q}, opt);
            for (const auto& s : rep.strata)
                if (s.empirical_fiber_dim != s.invariants.fiber_dim)
                    out[8].fail(key(rep.instance) + ": empirical fiber dimension disagrees");
        }
    }

    // 9: gaussian binomials
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            if (gaussian_binomial(n, k) != gaussian_binomial(n, n - k)) out[9].fail("asymmetric [n,k]");
    for (unsigned q : {2u, 3u})
        for (int dd = 0; dd <= 5; ++dd)
            for (int k = 0; k <= dd; ++k) {
                const auto subs = enumerate_subspaces(Subspace::full(FieldSpec(q), dd), k);
                if (static_cast<std::int64_t>(subs.size()) != gaussian_binomial(dd, k).evaluate(q))
                    out[9].fail("subspace count mismatch");
            }

    const char* names[] = {"",
                           "stratification identity over the suite",
                           "pinned instance (2,1) [1,2] q=2",
                           "admissible orbits are exactly the realized ones",
                           "phi and psi are mutually inverse over F_2",
                           "doubly indexed flag counts match the bundle base",
                           "homogenization properties and constant fibers",
                           "resolution for n = 1 targets",
                           "fiber dimension is independent of q",
                           "gaussian binomial arithmetic"};
    bool all = true;
    for (int c = 1; c <= 9; ++c) {
        const Outcome& o = out[c];
        all = all && o.passed;
        std::printf("criterion %d %s: %s%s%s\n", c, o.passed ? "PASS" : "FAIL", names[c], o.passed ? "" : " -- ",
                    o.detail.c_str());
    }
    std::printf("suite: %zu instance runs, slowest %.2f s, total %.2f s\n", runs.size(), slowest, suite_seconds);
    if (!out[0].passed) std::printf("other check failures: %s\n", out[0].detail.c_str());
    all = all && out[0].passed;
    return all ? 0 : 1;
}
