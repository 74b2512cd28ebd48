#include "springer/strata.hpp"

#include "springer/fiber.hpp"
#include "springer/flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

namespace {

int entry(const AlphaMatrix& a, int i, int j) { return i == 0 ? 0 : a.values(i - 1, j - 1); }
int increment(const AlphaMatrix& a, int i, int j) { return entry(a, i, j) - entry(a, i - 1, j); }

bool monotone(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) < 0) return false;
            if (i + 1 < m.rows() && m(i, j) > m(i + 1, j)) return false;
            if (j + 1 < m.cols() && m(i, j) > m(i, j + 1)) return false;
        }
    return true;
}

} // namespace

bool satisfies_monotonicity(const AlphaMatrix& alpha, const std::vector<int>& dims) {
    const auto& v = alpha.values;
    if (v.cols() != dims.size()) return false;
    if (!monotone(v)) return false;
    for (std::size_t j = 0; j < v.cols(); ++j) {
        const int top = v.rows() == 0 ? 0 : v(v.rows() - 1, j);
        if (top != dims[j]) return false;
    }
    return true;
}

bool satisfies_increment_order(const AlphaMatrix& alpha) {
    const int m = static_cast<int>(alpha.values.rows());
    const int n = static_cast<int>(alpha.values.cols());
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            const int inc = increment(alpha, i, j);
            if (inc > entry(alpha, 1, j)) return false;
            for (int ip = i; ip <= m; ++ip)
                for (int jp = 1; jp <= j; ++jp)
                    if (increment(alpha, ip, jp) > inc) return false;
        }
    return true;
}

bool satisfies_kernel_bounds(const AlphaMatrix& alpha, const std::vector<int>& kernel_dims) {
    const int m = static_cast<int>(alpha.values.rows());
    const int n = static_cast<int>(alpha.values.cols());
    if (static_cast<int>(kernel_dims.size()) != m) return false;
    for (int i = 1; i <= m; ++i) {
        const int jump = kernel_dims[i - 1] - (i >= 2 ? kernel_dims[i - 2] : 0);
        for (int j = 1; j <= n; ++j)
            if (increment(alpha, i, j) > jump) return false;
    }
    return true;
}

bool is_admissible(const AlphaMatrix& alpha, const std::vector<int>& dims, const std::vector<int>& kernel_dims) {
    return satisfies_monotonicity(alpha, dims) && satisfies_increment_order(alpha) &&
           satisfies_kernel_bounds(alpha, kernel_dims);
}

std::vector<AlphaMatrix> enumerate_alpha(const std::vector<int>& dims, const std::vector<int>& kernel_dims) {
    const int m = static_cast<int>(kernel_dims.size());
    const int n = static_cast<int>(dims.size());
    std::vector<AlphaMatrix> out;
    if (m == 0) {
        if (std::all_of(dims.begin(), dims.end(), [](int k) { return k == 0; }))
            out.push_back(AlphaMatrix{IntMatrix(0, static_cast<std::size_t>(n))});
        return out;
    }

    AlphaMatrix alpha{IntMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n))};
    // increments Δ_{i,j}; cells are placed column by column, top to bottom
    std::vector<int> inc(static_cast<std::size_t>(m * n), 0);
    auto delta = [&](int i, int j) -> int& { return inc[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };

    auto consistent = [&](int i, int j) {
        const int d = delta(i, j);
        // increments weakly decrease down a column and weakly increase along
        // a row (the uniform form of the increment-order condition)
        for (int jp = 1; jp < j; ++jp)
            for (int ip = i; ip <= m; ++ip)
                if (delta(ip, jp) > d) return false;
        for (int ip = 1; ip < i; ++ip)
            if (d > delta(ip, j)) return false;
        return true;
    };

    auto place = [&](auto&& self, int i, int j) -> void {
        if (j > n) {
            if (is_admissible(alpha, dims, kernel_dims)) out.push_back(alpha);
            return;
        }
        const int below = i >= 2 ? alpha.values(i - 2, j - 1) : 0;
        const int left = j >= 2 ? alpha.values(i - 1, j - 2) : 0;
        const int jump = kernel_dims[i - 1] - (i >= 2 ? kernel_dims[i - 2] : 0);
        int lo = std::max(below, left);
        int hi = std::min(dims[j - 1], below + jump);
        if (i == m) lo = std::max(lo, dims[j - 1]);
        for (int v = lo; v <= hi; ++v) {
            alpha.values(i - 1, j - 1) = v;
            delta(i, j) = v - below;
            if (!consistent(i, j)) continue;
            if (i == m)
                self(self, 1, j + 1);
            else
                self(self, i + 1, j);
        }
        alpha.values(i - 1, j - 1) = 0;
        delta(i, j) = 0;
    };
    place(place, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

KappaMatrix kappa_from_alpha(const AlphaMatrix& alpha) {
    const int m = static_cast<int>(alpha.values.rows());
    const int n = static_cast<int>(alpha.values.cols());
    KappaMatrix kappa{IntMatrix(alpha.values.rows(), alpha.values.cols())};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) kappa.values(i - 1, j - 1) = increment(alpha, m - i + 1, j);
    if (!monotone(kappa.values)) throw std::invalid_argument("orbit matrix does not yield a monotone kappa matrix");
    return kappa;
}

AlphaMatrix alpha_from_kappa(const KappaMatrix& kappa) {
    if (!monotone(kappa.values)) throw std::invalid_argument("kappa matrix is not monotone");
    const int m = static_cast<int>(kappa.values.rows());
    const int n = static_cast<int>(kappa.values.cols());
    AlphaMatrix alpha{IntMatrix(kappa.values.rows(), kappa.values.cols())};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            int s = 0;
            for (int h = m - i + 1; h <= m; ++h) s += kappa.values(h - 1, j - 1);
            alpha.values(i - 1, j - 1) = s;
        }
    return alpha;
}

bool is_valid_kappa(const KappaMatrix& kappa, const std::vector<int>& a_dims) {
    if (kappa.values.rows() != a_dims.size()) return false;
    if (!monotone(kappa.values)) return false;
    for (std::size_t i = 0; i < kappa.values.rows(); ++i)
        for (std::size_t j = 0; j < kappa.values.cols(); ++j)
            if (kappa.values(i, j) > a_dims[i]) return false;
    return true;
}

DeltaEpsilon delta_epsilon(const KappaMatrix& kappa, const std::vector<int>& a_dims) {
    const auto& k = kappa.values;
    const std::size_t m = k.rows(), n = k.cols();
    if (a_dims.size() != m) throw std::invalid_argument("kappa rows do not match the A-flag length");
    DeltaEpsilon de{IntMatrix(m, n), IntMatrix(m, n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            de.delta(i, j) = k(i, j) - (i > 0 ? k(i - 1, j) : 0);
            de.epsilon(i, j) = (j + 1 < n ? k(i, j + 1) : a_dims[i]) - k(i, j);
            if (de.delta(i, j) < 0 || de.epsilon(i, j) < 0)
                throw std::invalid_argument("kappa matrix yields a negative delta/epsilon entry");
        }
    return de;
}

std::vector<GrassmannianFactor> bundle_base(const DeltaEpsilon& de) {
    std::vector<GrassmannianFactor> base;
    const int m = static_cast<int>(de.delta.rows());
    const int n = static_cast<int>(de.delta.cols());
    base.reserve(static_cast<std::size_t>(m * n));
    for (int j = 1; j <= n; ++j)
        for (int i = m; i >= 1; --i) {
            const int d = de.delta(i - 1, j - 1);
            base.push_back({i, j, d, d + de.epsilon(i - 1, j - 1)});
        }
    return base;
}

QPolynomial poincare_polynomial(const std::vector<GrassmannianFactor>& base) {
    QPolynomial p = QPolynomial::constant(1);
    for (const auto& g : base) p *= gaussian_binomial(g.amb, g.sub);
    return p;
}

StratumInvariants stratum_invariants(const AlphaMatrix& alpha, const NilpotentGeometry& geometry) {
    std::vector<int> dims(alpha.values.cols(), 0);
    if (alpha.values.rows() > 0)
        for (std::size_t j = 0; j < dims.size(); ++j) dims[j] = alpha.values(alpha.values.rows() - 1, j);
    if (!is_admissible(alpha, dims, geometry.kernels.dims))
        throw std::invalid_argument("orbit matrix is not admissible for this operator");

    StratumInvariants s;
    s.alpha = alpha;
    s.kappa = kappa_from_alpha(alpha);
    auto de = delta_epsilon(s.kappa, geometry.a_flag.dims);
    s.base = bundle_base(de);
    s.delta = std::move(de.delta);
    s.epsilon = std::move(de.epsilon);
    for (std::size_t t = 0; t < s.delta.data().size(); ++t) s.dimension += s.delta.data()[t] * s.epsilon.data()[t];
    s.poincare = poincare_polynomial(s.base);
    s.fiber_dim = fiber_dimension(alpha, geometry);
    return s;
}

std::vector<StratumInvariants> all_strata(const std::vector<int>& dims, const NilpotentGeometry& geometry) {
    validate_dimension_vector(dims, geometry.dimension());
    std::vector<StratumInvariants> out;
    for (const auto& alpha : enumerate_alpha(dims, geometry.kernels.dims))
        out.push_back(stratum_invariants(alpha, geometry));
    return out;
}

} // namespace springer
