#include "springer/fiber.hpp"

#include "springer/doubly_flags.hpp"
#include "springer/strata.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace springer {

using Rational = boost::multiprecision::cpp_rational;

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix in rational_rank");
        m.emplace_back(r.begin(), r.end());
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const Rational factor = m[r][c] / m[rank][c];
            for (std::size_t t = c; t < cols; ++t) m[r][t] -= factor * m[rank][t];
        }
        ++rank;
    }
    return rank;
}

namespace {

using IntSquare = std::vector<std::vector<std::int64_t>>;

IntSquare multiply(const IntSquare& a, const IntSquare& b) {
    const std::size_t n = a.size();
    IntSquare out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

std::vector<std::size_t> coordinate_support(const Subspace& w) {
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < w.dim(); ++r) {
        auto row = w.basis().row(r);
        const auto nonzero = std::count_if(row.begin(), row.end(), [](Residue v) { return v != 0; });
        if (nonzero != 1 || row[w.pivots()[r]] != 1)
            throw std::logic_error("canonical base point is not a coordinate flag");
        support.push_back(w.pivots()[r]);
    }
    return support;
}

} // namespace

FiberComputation fiber_computation(const AlphaMatrix& alpha, const NilpotentGeometry& geometry) {
    FiberComputation out;
    const std::size_t d = geometry.dimension();
    const auto& labels = geometry.x.labels;

    std::vector<std::vector<bool>> inside;  // inside[j][t]: e_t ∈ W_j
    if (geometry.order() > 0) {
        const KappaMatrix kappa = kappa_from_alpha(alpha);
        const PartialFlag xi = psi(base_point(kappa, geometry.a_flag), geometry);
        for (const auto& w : xi.spaces) {
            out.base_point_support.push_back(coordinate_support(w));
            std::vector<bool> mask(d, false);
            for (auto t : out.base_point_support.back()) mask[t] = true;
            inside.push_back(std::move(mask));
        }
    }

    // n_P in the Jordan basis: entry (a, b) allowed iff height(a) < height(b)
    std::vector<std::pair<std::size_t, std::size_t>> nilradical;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (labels[a].height < labels[b].height) nilradical.emplace_back(a, b);

    auto breaks_flag = [&](std::size_t a, std::size_t b) {
        return std::any_of(inside.begin(), inside.end(), [&](const std::vector<bool>& mask) { return mask[b] && !mask[a]; });
    };

    // v is spanned by the elementary matrices of n_P that stabilize every W_j;
    // membership in v is the vanishing of every entry outside those positions
    std::vector<std::vector<bool>> in_v(d, std::vector<bool>(d, false));
    for (auto [a, b] : nilradical)
        if (!breaks_flag(a, b)) {
            in_v[a][b] = true;
            ++out.stabilizer_dim;
        }
    out.nilradical_dim = static_cast<int>(nilradical.size());

    // g = 1 + x and its inverse Σ_e (-x)^e, both integral
    IntSquare x(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) x[r][c] = geometry.x.matrix(r, c);
    IntSquare g = x, ginv(d, std::vector<std::int64_t>(d, 0)), term(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t t = 0; t < d; ++t) {
        g[t][t] += 1;
        term[t][t] = 1;
    }
    for (int e = 0; e <= geometry.order(); ++e) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) ginv[r][c] += term[r][c];
        term = multiply(term, x);
        for (auto& row : term)
            for (auto& v : row) v = -v;
    }

    // column per basis element z = E_{ab} of n_P: entries of g z g^{-1} - z outside v
    std::vector<std::vector<std::int64_t>> constraints;
    std::vector<std::vector<std::int64_t>> columns;
    columns.reserve(nilradical.size());
    for (auto [a, b] : nilradical) {
        // (g E_ab g^{-1})_{rc} = g[r][a] * ginv[b][c]
        std::vector<std::int64_t> col;
        col.reserve(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                if (in_v[r][c]) continue;
                std::int64_t val = g[r][a] * ginv[b][c] - ((r == a && c == b) ? 1 : 0);
                col.push_back(val);
            }
        columns.push_back(std::move(col));
    }
    if (!columns.empty() && !columns.front().empty()) {
        const std::size_t nrows = columns.front().size();
        constraints.assign(nrows, std::vector<std::int64_t>(columns.size(), 0));
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < nrows; ++r) constraints[r][c] = columns[c][r];
    }
    out.fixed_dim = out.nilradical_dim - static_cast<int>(rational_rank(constraints));
    return out;
}

int fiber_dimension(const AlphaMatrix& alpha, const NilpotentGeometry& geometry) {
    return fiber_computation(alpha, geometry).fiber_dim();
}

} // namespace springer
