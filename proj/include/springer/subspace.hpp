#pragma once

#include "springer/matrix.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace springer {

/// A linear subspace of F_q^n, stored as the RREF of a basis.
///
/// The representation is canonical: two subspaces are equal as sets of
/// vectors iff their bases are identical entry by entry, so `==`, `<=>` and
/// `std::hash` operate directly on the stored matrix.
class Subspace {
public:
    /// Zero subspace of F_q^ambient_dim.
    Subspace(FieldSpec field, std::size_t ambient_dim);

    static Subspace zero(FieldSpec field, std::size_t ambient_dim) { return {field, ambient_dim}; }
    static Subspace full(FieldSpec field, std::size_t ambient_dim);
    /// Span of the rows of `generators`.
    static Subspace span_of(const MatrixGF& generators);
    /// Span of coordinate vectors e_i for the given (0-based) indices.
    static Subspace coordinate(FieldSpec field, std::size_t ambient_dim,
                               std::span<const std::size_t> indices);

    FieldSpec field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const MatrixGF& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains_vector(std::span<const Residue> v) const;
    /// True iff `w` is a subspace of *this.
    bool contains(const Subspace& w) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
        return a.basis_ <=> b.basis_;
    }

private:
    explicit Subspace(MatrixGF echelon);

    MatrixGF basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical span of a list of vectors of length `ambient_dim`.
Subspace subspace_from_generators(FieldSpec field, const std::vector<std::vector<long long>>& vectors,
                                  std::size_t ambient_dim);

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);
/// {x u : u in U} for a square matrix x.
Subspace image(const MatrixGF& x, const Subspace& u);
/// {v : x v = 0}.
Subspace kernel(const MatrixGF& x);

/// Calls `visit` for every subspace W with lower <= W <= upper and dim W = k,
/// each exactly once, in a fixed order (pivot pattern of W/lower relative to
/// a complement basis, then free entries).
void for_each_subspace_between(const Subspace& lower, const Subspace& upper, std::size_t k,
                               const std::function<void(const Subspace&)>& visit);

/// All k-dimensional subspaces of `ambient`, sorted lexicographically by RREF.
/// Throws std::invalid_argument if k > dim ambient.
std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, std::size_t k);

} // namespace springer

template <>
struct std::hash<springer::Subspace> {
    std::size_t operator()(const springer::Subspace& s) const noexcept {
        std::size_t h = s.ambient_dim() * 1000003u + s.dim();
        for (auto v : s.basis().data()) h = h * 131u + v;
        return h;
    }
};
