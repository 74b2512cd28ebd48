#include "springer/flags.hpp"

#include <stdexcept>
#include <string>

namespace springer {

std::vector<int> PartialFlag::dims() const {
    std::vector<int> out;
    out.reserve(spaces.size());
    for (const auto& s : spaces) out.push_back(static_cast<int>(s.dim()));
    return out;
}

void validate_dimension_vector(const std::vector<int>& dims, std::size_t ambient_dim) {
    int prev = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (dims[j] < prev)
            throw std::invalid_argument("dimension vector must be weakly increasing and nonnegative");
        if (dims[j] > static_cast<int>(ambient_dim))
            throw std::invalid_argument("dimension " + std::to_string(dims[j]) + " exceeds ambient dimension " +
                                        std::to_string(ambient_dim));
        prev = dims[j];
    }
}

namespace {

void extend_flag(const std::vector<int>& dims, const Subspace& ambient, PartialFlag& current,
                 const std::function<void(const PartialFlag&)>& visit) {
    const std::size_t j = current.spaces.size();
    if (j == dims.size()) {
        visit(current);
        return;
    }
    const Subspace lower = j == 0 ? Subspace::zero(ambient.field(), ambient.ambient_dim()) : current.spaces.back();
    for_each_subspace_between(lower, ambient, static_cast<std::size_t>(dims[j]), [&](const Subspace& s) {
        current.spaces.push_back(s);
        extend_flag(dims, ambient, current, visit);
        current.spaces.pop_back();
    });
}

} // namespace

void for_each_partial_flag(const std::vector<int>& dims, const Subspace& ambient,
                           const std::function<void(const PartialFlag&)>& visit) {
    validate_dimension_vector(dims, ambient.dim());
    PartialFlag current;
    current.spaces.reserve(dims.size());
    extend_flag(dims, ambient, current, visit);
}

std::vector<PartialFlag> enumerate_partial_flags(const std::vector<int>& dims, const Subspace& ambient) {
    std::vector<PartialFlag> out;
    for_each_partial_flag(dims, ambient, [&](const PartialFlag& f) { out.push_back(f); });
    return out;
}

bool is_x_stable(const PartialFlag& flag, const MatrixGF& x) {
    for (const auto& v : flag.spaces) {
        for (std::size_t r = 0; r < v.dim(); ++r)
            if (!v.contains_vector(x.apply(v.basis().row(r)))) return false;
    }
    return true;
}

AlphaMatrix orbit_signature(const PartialFlag& flag, const KernelFlag& kernels) {
    const std::size_t m = kernels.spaces.size(), n = flag.spaces.size();
    AlphaMatrix alpha{IntMatrix(m, n)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            alpha.values(i, j) = static_cast<int>(intersect(flag.spaces[j], kernels.spaces[i]).dim());
    return alpha;
}

bool is_homogeneous(const PartialFlag& flag, const GradedDecomposition& graded) {
    for (const auto& v : flag.spaces) {
        std::size_t total = 0;
        for (const auto& e : graded.pieces) total += intersect(v, e).dim();
        if (total != v.dim()) return false;
    }
    return true;
}

Subspace homogenize(const Subspace& v, const NilpotentGeometry& geometry) {
    Subspace out = Subspace::zero(v.field(), v.ambient_dim());
    for (int i = 1; i <= geometry.order(); ++i) {
        const Subspace layer = intersect(v, geometry.kernels.spaces[i - 1]);
        out = sum(out, image(geometry.projectors[i - 1], layer));
    }
    return out;
}

PartialFlag homogenize(const PartialFlag& flag, const NilpotentGeometry& geometry) {
    PartialFlag out;
    out.spaces.reserve(flag.spaces.size());
    for (const auto& v : flag.spaces) out.spaces.push_back(homogenize(v, geometry));
    return out;
}

} // namespace springer
