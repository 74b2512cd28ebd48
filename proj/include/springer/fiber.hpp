#pragma once

#include "springer/int_matrix.hpp"
#include "springer/nilpotent.hpp"

#include <cstdint>
#include <vector>

namespace springer {

/// Rank over Q of an integer matrix, computed exactly.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Pieces of the vector-bundle rank computation at the canonical base point
/// ξ = ψ(base_point(κ)).
struct FiberComputation {
    /// dim n_P: matrices sending ker x^i into ker x^{i-1}
    int nilradical_dim = 0;
    /// dim v = {z ∈ n_P : z W_j ⊆ W_j for all j}
    int stabilizer_dim = 0;
    /// dim {z ∈ n_P : (1+x) z (1+x)^{-1} - z ∈ v}
    int fixed_dim = 0;
    /// Coordinate sets (0-based basis indices) spanning each W_j of ξ.
    std::vector<std::vector<std::size_t>> base_point_support;

    int fiber_dim() const noexcept { return fixed_dim - stabilizer_dim; }
};

FiberComputation fiber_computation(const AlphaMatrix& alpha, const NilpotentGeometry& geometry);

/// Rank of the vector bundle A_x ∩ P_α -> A_x^s ∩ P_α: the dimension of the
/// subspace of n_P / v fixed by Ad(1+x), computed over Q.
int fiber_dimension(const AlphaMatrix& alpha, const NilpotentGeometry& geometry);

} // namespace springer
