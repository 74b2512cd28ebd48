#include "springer/nilpotent.hpp"

#include <numeric>
#include <stdexcept>

namespace springer {

JordanType::JordanType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Jordan block sizes must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Jordan block sizes must be weakly decreasing");
    }
}

int JordanType::dimension() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> JordanType::conjugate() const {
    std::vector<int> conj(order(), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++conj[i];
    return conj;
}

std::size_t NilpotentOperator::index_of(int block, int height) const {
    const auto& parts = jordan_type.parts();
    if (block < 1 || block > static_cast<int>(parts.size()) || height < 1 || height > parts[block - 1])
        throw std::out_of_range("Jordan label out of range");
    std::size_t offset = 0;
    for (int b = 1; b < block; ++b) offset += parts[b - 1];
    return offset + height - 1;
}

NilpotentOperator build_nilpotent(const JordanType& lambda, FieldSpec field) {
    const auto d = static_cast<std::size_t>(lambda.dimension());
    NilpotentOperator op{MatrixGF(field, d, d), lambda, {}};
    op.labels.reserve(d);
    std::size_t offset = 0;
    for (std::size_t b = 0; b < lambda.parts().size(); ++b) {
        const int size = lambda.parts()[b];
        for (int h = 1; h <= size; ++h) {
            op.labels.push_back({static_cast<int>(b) + 1, h});
            // column of e_h carries a 1 in the row of e_{h-1}
            if (h >= 2) op.matrix(offset + h - 2, offset + h - 1) = 1;
        }
        offset += size;
    }
    return op;
}

KernelFlag kernel_flag(const NilpotentOperator& x) {
    KernelFlag flag;
    MatrixGF p = MatrixGF::identity(x.field(), x.dimension());
    for (int i = 1; i <= x.order(); ++i) {
        p = p * x.matrix;
        flag.spaces.push_back(kernel(p));
        flag.dims.push_back(static_cast<int>(flag.spaces.back().dim()));
    }
    return flag;
}

GradedDecomposition graded_pieces(const NilpotentOperator& x) {
    GradedDecomposition e;
    for (int i = 1; i <= x.order(); ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < x.labels.size(); ++t)
            if (x.labels[t].height == i) idx.push_back(t);
        e.pieces.push_back(Subspace::coordinate(x.field(), x.dimension(), idx));
    }
    return e;
}

AFlag a_flag(const NilpotentOperator& x) {
    AFlag a;
    const int m = x.order();
    const KernelFlag ker = kernel_flag(x);
    for (int i = 1; i <= m; ++i) {
        a.spaces.push_back(image(x.matrix.power(static_cast<unsigned>(m - i)), ker.spaces[m - i]));
        a.dims.push_back(static_cast<int>(a.spaces.back().dim()));
    }
    return a;
}

NilpotentGeometry::NilpotentGeometry(NilpotentOperator op)
    : x(std::move(op)), kernels(kernel_flag(x)), graded(graded_pieces(x)), a_flag(springer::a_flag(x)) {
    const int m = x.order();
    const std::size_t d = x.dimension();
    const FieldSpec f = x.field();
    powers.push_back(MatrixGF::identity(f, d));
    for (int e = 1; e <= m; ++e) powers.push_back(powers.back() * x.matrix);

    for (int i = 1; i <= m; ++i) {
        MatrixGF proj(f, d, d);
        for (std::size_t t = 0; t < d; ++t)
            if (x.labels[t].height == i) proj(t, t) = 1;
        projectors.push_back(std::move(proj));
    }

    // x^{m-i} sends e^{(b)}_{m-i+1} to e^{(b)}_1, so the inverse sends e^{(b)}_1 back up
    const auto& parts = x.jordan_type.parts();
    for (int i = 1; i <= m; ++i) {
        MatrixGF lift(f, d, d);
        const int target = m - i + 1;
        for (std::size_t b = 0; b < parts.size(); ++b) {
            if (parts[b] < target) continue;
            const int block = static_cast<int>(b) + 1;
            lift(x.index_of(block, target), x.index_of(block, 1)) = 1;
        }
        lifts.push_back(std::move(lift));
    }
}

} // namespace springer
