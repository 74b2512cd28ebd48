#pragma once

#include "springer/int_matrix.hpp"
#include "springer/nilpotent.hpp"
#include "springer/qpoly.hpp"

#include <vector>

namespace springer {

// Admissibility of an orbit matrix α (m x n) for dimension vector k_• and
// kernel dimensions l_• (l_i = dim ker x^i). Rows are 1-based in the
// descriptions; α_{0,j} is read as 0.

/// 0 <= α_{i,j} <= α_{i',j'} for i <= i', j <= j', and α_{m,j} = k_j.
bool satisfies_monotonicity(const AlphaMatrix& alpha, const std::vector<int>& dims);
/// α_{i',j'} - α_{i'-1,j'} <= α_{i,j} - α_{i-1,j} <= α_{1,j} for 2 <= i <= i', j' <= j.
bool satisfies_increment_order(const AlphaMatrix& alpha);
/// α_{i,j} - α_{i-1,j} <= l_i - l_{i-1} for i >= 2, and α_{1,j} <= l_1.
bool satisfies_kernel_bounds(const AlphaMatrix& alpha, const std::vector<int>& kernel_dims);
bool is_admissible(const AlphaMatrix& alpha, const std::vector<int>& dims, const std::vector<int>& kernel_dims);

/// Every admissible α, each once, sorted lexicographically (row-major).
std::vector<AlphaMatrix> enumerate_alpha(const std::vector<int>& dims, const std::vector<int>& kernel_dims);

/// κ_{i,j} = α_{m-i+1,j} - α_{m-i,j} (i <= m-1), κ_{m,j} = α_{1,j}.
/// Throws std::invalid_argument if the result is negative or not monotone.
KappaMatrix kappa_from_alpha(const AlphaMatrix& alpha);
/// α_{i,j} = Σ_{h=m-i+1}^{m} κ_{h,j}. Throws if κ is negative or not monotone.
AlphaMatrix alpha_from_kappa(const KappaMatrix& kappa);

/// κ_{i,j} ∈ [0, d_i] and monotone in both indices.
bool is_valid_kappa(const KappaMatrix& kappa, const std::vector<int>& a_dims);

struct DeltaEpsilon {
    IntMatrix delta;
    IntMatrix epsilon;
};

/// δ_{i,j} = κ_{i,j} - κ_{i-1,j}; ε_{i,j} = κ_{i,j+1} - κ_{i,j}, ε_{i,n} = d_i - κ_{i,n}.
/// Throws std::invalid_argument on a negative entry.
DeltaEpsilon delta_epsilon(const KappaMatrix& kappa, const std::vector<int>& a_dims);

/// Grass_{sub}(amb) at position (row, col) of the bundle base; 1-based.
struct GrassmannianFactor {
    int row;
    int col;
    int sub;
    int amb;
    friend bool operator==(const GrassmannianFactor&, const GrassmannianFactor&) = default;
};

/// Ordered base (G_{m,1}, ..., G_{1,1}, G_{m,2}, ..., G_{1,n}).
std::vector<GrassmannianFactor> bundle_base(const DeltaEpsilon& de);

/// Π [δ+ε choose δ]_q over the base.
QPolynomial poincare_polynomial(const std::vector<GrassmannianFactor>& base);

struct StratumInvariants {
    AlphaMatrix alpha;
    KappaMatrix kappa;
    IntMatrix delta;
    IntMatrix epsilon;
    std::vector<GrassmannianFactor> base;
    int dimension = 0;
    QPolynomial poincare;
    int fiber_dim = 0;
};

/// Assembles κ, δ, ε, the base, dimension Σδε, the Poincaré polynomial and
/// the vector-bundle rank for an admissible α. Throws std::invalid_argument
/// if α is not admissible for the geometry's kernel dimensions.
StratumInvariants stratum_invariants(const AlphaMatrix& alpha, const NilpotentGeometry& geometry);

/// stratum_invariants for every admissible α of the instance, in α order.
std::vector<StratumInvariants> all_strata(const std::vector<int>& dims, const NilpotentGeometry& geometry);

} // namespace springer
