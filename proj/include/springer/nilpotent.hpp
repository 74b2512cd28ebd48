#pragma once

#include "springer/matrix.hpp"
#include "springer/subspace.hpp"

#include <cstddef>
#include <vector>

namespace springer {

/// A partition λ_1 >= λ_2 >= ... > 0 giving the Jordan block sizes of a
/// nilpotent operator.
class JordanType {
public:
    JordanType() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit JordanType(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Ambient dimension d = Σ λ_b.
    int dimension() const noexcept;
    /// Nilpotent order m = λ_1 (0 for the empty partition).
    int order() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Conjugate partition λ'.
    std::vector<int> conjugate() const;

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::vector<int> parts_;
};

/// Position of a Jordan basis vector e^{(b)}_h: x e^{(b)}_h = e^{(b)}_{h-1},
/// x e^{(b)}_1 = 0. Both indices are 1-based.
struct BasisLabel {
    int block;
    int height;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct NilpotentOperator {
    MatrixGF matrix;
    JordanType jordan_type;
    /// Label of each basis vector, in basis order (block by block, heights ascending).
    std::vector<BasisLabel> labels;

    FieldSpec field() const noexcept { return matrix.field(); }
    std::size_t dimension() const noexcept { return matrix.rows(); }
    int order() const noexcept { return jordan_type.order(); }
    /// Basis index of e^{(b)}_h.
    std::size_t index_of(int block, int height) const;
};

NilpotentOperator build_nilpotent(const JordanType& lambda, FieldSpec field);

/// ker x ⊂ ker x^2 ⊂ ... ⊂ ker x^m = A; spaces[i-1] = ker x^i.
struct KernelFlag {
    std::vector<Subspace> spaces;
    std::vector<int> dims;
};

/// A = E_1 ⊕ ... ⊕ E_m with E_i = span{e^{(b)}_i}; pieces[i-1] = E_i.
struct GradedDecomposition {
    std::vector<Subspace> pieces;
};

/// A_i = x^{m-i}(ker x^{m-i+1}); spaces[i-1] = A_i, so A_m = ker x.
struct AFlag {
    std::vector<Subspace> spaces;
    std::vector<int> dims;
};

KernelFlag kernel_flag(const NilpotentOperator& x);
GradedDecomposition graded_pieces(const NilpotentOperator& x);
AFlag a_flag(const NilpotentOperator& x);

/// The operator together with everything derived from it that the flag and
/// stratum computations need. Built once per instance.
struct NilpotentGeometry {
    NilpotentOperator x;
    KernelFlag kernels;
    GradedDecomposition graded;
    AFlag a_flag;
    /// powers[e] = x^e for e = 0..m
    std::vector<MatrixGF> powers;
    /// projectors[i-1] = coordinate projection onto E_i along the other pieces
    std::vector<MatrixGF> projectors;
    /// lifts[i-1] = x̂^{m-i}: A_i -> E_{m-i+1}, the inverse of x^{m-i} on E_{m-i+1}
    std::vector<MatrixGF> lifts;

    explicit NilpotentGeometry(NilpotentOperator op);

    int order() const noexcept { return x.order(); }
    std::size_t dimension() const noexcept { return x.dimension(); }
    FieldSpec field() const noexcept { return x.field(); }
};

} // namespace springer
