#pragma once

#include "springer/int_matrix.hpp"
#include "springer/nilpotent.hpp"
#include "springer/subspace.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace springer {

/// V_1 ⊆ ... ⊆ V_n.
struct PartialFlag {
    std::vector<Subspace> spaces;

    std::vector<int> dims() const;
    std::size_t length() const noexcept { return spaces.size(); }

    friend bool operator==(const PartialFlag&, const PartialFlag&) = default;
    friend auto operator<=>(const PartialFlag&, const PartialFlag&) = default;
};

/// Throws std::invalid_argument unless 0 <= k_1 <= ... <= k_n <= ambient_dim.
void validate_dimension_vector(const std::vector<int>& dims, std::size_t ambient_dim);

/// Visits every flag in `ambient` with dimension vector `dims` exactly once.
/// V_{j+1} ranges over the superspaces of V_j, so the order is deterministic.
void for_each_partial_flag(const std::vector<int>& dims, const Subspace& ambient,
                           const std::function<void(const PartialFlag&)>& visit);
std::vector<PartialFlag> enumerate_partial_flags(const std::vector<int>& dims, const Subspace& ambient);

bool is_x_stable(const PartialFlag& flag, const MatrixGF& x);

/// α_{i,j} = dim(V_j ∩ ker x^i) for 1 <= i <= m, 1 <= j <= n.
AlphaMatrix orbit_signature(const PartialFlag& flag, const KernelFlag& kernels);

/// True iff every V_j is the direct sum of its intersections with the graded pieces.
bool is_homogeneous(const PartialFlag& flag, const GradedDecomposition& graded);

/// V^{(hom)} = ⊕_i pr_{E_i}(V ∩ ker x^i), applied to every member of the flag.
Subspace homogenize(const Subspace& v, const NilpotentGeometry& geometry);
PartialFlag homogenize(const PartialFlag& flag, const NilpotentGeometry& geometry);

} // namespace springer
