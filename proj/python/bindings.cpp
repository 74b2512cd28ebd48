#include "springer/fiber.hpp"
#include "springer/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace springer;

namespace {

using Rows = std::vector<std::vector<int>>;

IntMatrix to_matrix(const Rows& rows) {
    return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

NilpotentGeometry geometry(const std::vector<int>& jordan, unsigned q) {
    return NilpotentGeometry(build_nilpotent(JordanType(jordan), FieldSpec(q)));
}

// reports cross the boundary as JSON text; the Python side parses it
std::string report_json(const StratificationReport& r) { return to_json(r).dump(); }

py::dict invariants_dict(const StratumInvariants& s) {
    py::dict d;
    d["alpha"] = s.alpha.values.to_rows();
    d["kappa"] = s.kappa.values.to_rows();
    d["delta"] = s.delta.to_rows();
    d["epsilon"] = s.epsilon.to_rows();
    py::list base;
    for (const auto& g : s.base) base.append(py::make_tuple(g.sub, g.amb));
    d["base"] = base;
    d["dim"] = s.dimension;
    d["poincare"] = s.poincare.coefficients();
    d["fiber_dim"] = s.fiber_dim;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orbit strata of x-stable partial flags over finite fields";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<SuiteConfigError>(m, "SuiteConfigError", PyExc_ValueError);

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;

    m.def("gaussian_binomial", [](int n, int k) { return gaussian_binomial(n, k).coefficients(); }, py::arg("n"),
          py::arg("k"));
    m.def("count_subspaces",
          [](unsigned q, std::size_t d, std::size_t k) { return enumerate_subspaces(Subspace::full(FieldSpec(q), d), k).size(); },
          py::arg("q"), py::arg("d"), py::arg("k"));
    m.def("kernel_dims", [](const std::vector<int>& jordan) { return geometry(jordan, 2).kernels.dims; },
          py::arg("jordan"));
    m.def("a_dims", [](const std::vector<int>& jordan) { return geometry(jordan, 2).a_flag.dims; }, py::arg("jordan"));

    m.def(
        "enumerate_alpha",
        [](const std::vector<int>& dims, const std::vector<int>& kernel_dims) {
            std::vector<Rows> out;
            for (const auto& a : enumerate_alpha(dims, kernel_dims)) out.push_back(a.values.to_rows());
            return out;
        },
        py::arg("dims"), py::arg("kernel_dims"));
    m.def("kappa_from_alpha", [](const Rows& a) { return kappa_from_alpha(AlphaMatrix{to_matrix(a)}).values.to_rows(); },
          py::arg("alpha"));
    m.def("alpha_from_kappa", [](const Rows& k) { return alpha_from_kappa(KappaMatrix{to_matrix(k)}).values.to_rows(); },
          py::arg("kappa"));
    m.def(
        "delta_epsilon",
        [](const Rows& k, const std::vector<int>& a_dims) {
            const auto de = delta_epsilon(KappaMatrix{to_matrix(k)}, a_dims);
            return py::make_tuple(de.delta.to_rows(), de.epsilon.to_rows());
        },
        py::arg("kappa"), py::arg("a_dims"));
    m.def(
        "stratum_invariants",
        [](const std::vector<int>& jordan, const Rows& alpha) {
            return invariants_dict(stratum_invariants(AlphaMatrix{to_matrix(alpha)}, geometry(jordan, 2)));
        },
        py::arg("jordan"), py::arg("alpha"));
    m.def(
        "fiber_dimension",
        [](const std::vector<int>& jordan, const Rows& alpha) {
            return fiber_dimension(AlphaMatrix{to_matrix(alpha)}, geometry(jordan, 2));
        },
        py::arg("jordan"), py::arg("alpha"));
    m.def(
        "brute_force_stratify",
        [](const std::vector<int>& jordan, const std::vector<int>& dims, unsigned q, std::uint64_t budget) {
            const auto g = geometry(jordan, q);
            validate_dimension_vector(dims, g.dimension());
            const auto estimate = partial_flag_count(static_cast<int>(g.dimension()), dims, q);
            if (static_cast<std::uint64_t>(estimate) > budget)
                throw BudgetExceeded("instance has " + std::to_string(estimate) + " flags");
            CensusOptions opt;
            opt.keep_stable = false;
            BruteForceCensus c;
            {
                py::gil_scoped_release release;
                c = brute_force_stratify(g, dims, opt);
            }
            py::dict buckets;
            for (const auto& [a, counts] : c.buckets) {
                py::list rows;
                for (const auto& r : a.values.to_rows()) rows.append(py::tuple(py::cast(r)));
                buckets[py::tuple(rows)] = py::make_tuple(counts.total, counts.fixed);
            }
            py::dict out;
            out["flags"] = c.flags_enumerated;
            out["stable"] = c.stable_total;
            out["buckets"] = buckets;
            return out;
        },
        py::arg("jordan"), py::arg("dims"), py::arg("q") = 2, py::arg("budget") = kDefaultBudget);

    m.def(
        "_strata_json",
        [](const std::vector<int>& jordan, const std::vector<int>& dims, unsigned q) {
            return report_json(strata_report({jordan, dims, q}));
        },
        py::arg("jordan"), py::arg("dims"), py::arg("q") = 2);
    m.def(
        "_verify_json",
        [](const std::vector<int>& jordan, const std::vector<int>& dims, unsigned q, const std::string& checks,
           std::uint64_t budget) {
            const auto sel = parse_checks(checks, budget);
            const InstanceSpec spec{jordan, dims, q};
            if (!sel.enumerate) return report_json(strata_report(spec));
            py::gil_scoped_release release;
            return report_json(verify_instance(spec, sel.options));
        },
        py::arg("jordan"), py::arg("dims"), py::arg("q") = 2, py::arg("checks") = "verify",
        py::arg("budget") = kDefaultBudget);
}
