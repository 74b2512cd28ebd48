#pragma once

#include "springer/flags.hpp"
#include "springer/int_matrix.hpp"
#include "springer/nilpotent.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace springer {

/// Array (V_{i,j}) with V_{i,j} ⊆ A_i, nested in both indices.
class DoublyIndexedFlag {
public:
    DoublyIndexedFlag(std::size_t rows, std::size_t cols, const Subspace& fill);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    /// 1-based access, V_{i,j}.
    const Subspace& at(std::size_t i, std::size_t j) const { return cells_.at((i - 1) * cols_ + (j - 1)); }
    Subspace& at(std::size_t i, std::size_t j) { return cells_.at((i - 1) * cols_ + (j - 1)); }

    KappaMatrix kappa() const;
    /// The column (V_{m,1}, ..., V_{m,n}) as a partial flag in A_m.
    PartialFlag last_row() const;

    friend bool operator==(const DoublyIndexedFlag&, const DoublyIndexedFlag&) = default;
    friend auto operator<=>(const DoublyIndexedFlag&, const DoublyIndexedFlag&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Subspace> cells_;
};

/// Checks V_{i,j} ⊆ A_i, dim V_{i,j} = κ_{i,j}, and nesting in both indices.
bool is_in_doubly_flag_variety(const DoublyIndexedFlag& flag, const KappaMatrix& kappa, const AFlag& a);

/// Point of F_κ(A_•) built from initial segments of an ordered basis of A_m
/// adapted to A_1 ⊂ ... ⊂ A_m. Throws std::invalid_argument if κ is not valid
/// for the A-flag dimensions.
DoublyIndexedFlag base_point(const KappaMatrix& kappa, const AFlag& a);

/// Visits every point of F_κ(A_•)(F_q) exactly once.
void for_each_doubly_flag(const KappaMatrix& kappa, const AFlag& a,
                          const std::function<void(const DoublyIndexedFlag&)>& visit);

/// W_j = ⊕_i x̂^{m-i}(V_{i,j}). Throws std::invalid_argument if the input
/// violates the doubly indexed flag invariants.
PartialFlag psi(const DoublyIndexedFlag& flag, const NilpotentGeometry& geometry);

/// V_{i,j} = x^{m-i}(V_j ∩ ker x^{m-i+1}). Throws std::invalid_argument if
/// the flag is not x-stable or not homogeneous.
DoublyIndexedFlag phi(const PartialFlag& flag, const NilpotentGeometry& geometry);

/// dim(A_i ∩ V_j) >= κ_{i,j} for all i, j. Throws std::invalid_argument if
/// the flag's dimension vector differs from the last row of κ.
bool schubert_membership(const PartialFlag& flag, const KappaMatrix& kappa, const AFlag& a);

} // namespace springer
