#include "springer/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    if (!(u.field() == w.field())) throw std::invalid_argument("subspaces over different fields");
}

MatrixGF stack(const MatrixGF& a, const MatrixGF& b) {
    MatrixGF out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

} // namespace

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace::Subspace(MatrixGF echelon) : basis_(std::move(echelon)), pivots_(pivot_columns(basis_)) {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
    return Subspace(MatrixGF::identity(field, ambient_dim));
}

Subspace Subspace::span_of(const MatrixGF& generators) { return Subspace(rref(generators)); }

Subspace Subspace::coordinate(FieldSpec field, std::size_t ambient_dim,
                              std::span<const std::size_t> indices) {
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    MatrixGF m(field, 0, ambient_dim);
    std::vector<Residue> row(ambient_dim);
    for (std::size_t i : sorted) {
        if (i >= ambient_dim) throw std::invalid_argument("coordinate index out of range");
        std::fill(row.begin(), row.end(), Residue{0});
        row[i] = 1;
        m.append_row(row);
    }
    return Subspace(std::move(m));
}

bool Subspace::contains_vector(std::span<const Residue> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vector length does not match ambient");
    const FieldSpec f = field();
    std::vector<Residue> w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const Residue c = w[pivots_[r]];
        if (c == 0) continue;
        auto row = basis_.row(r);
        for (std::size_t t = pivots_[r]; t < w.size(); ++t) w[t] = f.sub(w[t], f.mul(c, row[t]));
    }
    return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool Subspace::contains(const Subspace& w) const {
    require_same_ambient(*this, w);
    if (w.dim() > dim()) return false;
    for (std::size_t r = 0; r < w.basis_.rows(); ++r)
        if (!contains_vector(w.basis_.row(r))) return false;
    return true;
}

Subspace subspace_from_generators(FieldSpec field, const std::vector<std::vector<long long>>& vectors,
                                  std::size_t ambient_dim) {
    return Subspace::span_of(MatrixGF(field, vectors, ambient_dim));
}

Subspace sum(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    return Subspace::span_of(stack(u.basis(), w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    if (u.contains(w)) return w;
    if (w.contains(u)) return u;
    // Zassenhaus: rows (u, u) and (w, 0); rows with vanishing left half
    // carry a basis of U ∩ W in their right half.
    const std::size_t n = u.ambient_dim();
    const FieldSpec f = u.field();
    MatrixGF z(f, u.dim() + w.dim(), 2 * n);
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(r, c) = z(r, n + c) = u.basis()(r, c);
    for (std::size_t r = 0; r < w.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z(u.dim() + r, c) = w.basis()(r, c);
    const MatrixGF e = rref(z);
    MatrixGF result(f, 0, n);
    for (std::size_t r = 0; r < e.rows(); ++r) {
        auto row = e.row(r);
        if (std::all_of(row.begin(), row.begin() + n, [](Residue v) { return v == 0; }))
            result.append_row(row.subspan(n));
    }
    return Subspace::span_of(result);
}

Subspace image(const MatrixGF& x, const Subspace& u) {
    if (x.rows() != x.cols() || x.cols() != u.ambient_dim())
        throw std::invalid_argument("operator size does not match subspace ambient");
    // rows of B x^T are the images of the basis rows of B
    return Subspace::span_of(u.basis() * x.transpose());
}

Subspace kernel(const MatrixGF& x) {
    const FieldSpec f = x.field();
    const MatrixGF e = rref(x);
    const auto pivots = pivot_columns(e);
    const std::size_t n = x.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    MatrixGF gens(f, 0, n);
    std::vector<Residue> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), Residue{0});
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows(); ++r) v[pivots[r]] = f.neg(e(r, free));
        gens.append_row(v);
    }
    return Subspace::span_of(gens);
}

void for_each_subspace_between(const Subspace& lower, const Subspace& upper, std::size_t k,
                               const std::function<void(const Subspace&)>& visit) {
    require_same_ambient(lower, upper);
    if (!upper.contains(lower)) throw std::invalid_argument("lower subspace is not contained in upper");
    if (k < lower.dim() || k > upper.dim()) return;

    const FieldSpec f = upper.field();
    const unsigned q = f.q();
    const std::size_t n = upper.ambient_dim();

    // complement of `lower` inside `upper`, taken greedily from upper's basis
    MatrixGF complement(f, 0, n);
    Subspace covered = lower;
    for (std::size_t r = 0; r < upper.dim() && covered.dim() < upper.dim(); ++r) {
        auto row = upper.basis().row(r);
        if (covered.contains_vector(row)) continue;
        complement.append_row(row);
        MatrixGF one(f, 0, n);
        one.append_row(row);
        covered = sum(covered, Subspace::span_of(one));
    }

    const std::size_t c = complement.rows();
    const std::size_t extra = k - lower.dim();

    std::vector<std::size_t> pivots(extra);
    for (std::size_t i = 0; i < extra; ++i) pivots[i] = i;

    MatrixGF coeff(f, extra, c);
    while (true) {
        // free positions for this pivot pattern
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t r = 0; r < extra; ++r)
            for (std::size_t col = pivots[r] + 1; col < c; ++col)
                if (!std::binary_search(pivots.begin(), pivots.end(), col)) free_cells.emplace_back(r, col);

        for (std::size_t r = 0; r < extra; ++r)
            for (std::size_t col = 0; col < c; ++col) coeff(r, col) = (col == pivots[r]) ? 1 : 0;

        while (true) {
            MatrixGF gens = lower.basis();
            const MatrixGF lifted = coeff * complement;
            for (std::size_t r = 0; r < lifted.rows(); ++r) gens.append_row(lifted.row(r));
            visit(Subspace::span_of(gens));

            // odometer over free entries, last cell fastest
            std::size_t pos = free_cells.size();
            while (pos > 0) {
                auto [r, col] = free_cells[pos - 1];
                if (coeff(r, col) + 1u < q) {
                    coeff(r, col) = static_cast<Residue>(coeff(r, col) + 1);
                    break;
                }
                coeff(r, col) = 0;
                --pos;
            }
            if (pos == 0) break;
        }

        // next pivot combination (lexicographic)
        std::size_t i = extra;
        while (i > 0 && pivots[i - 1] == c - extra + (i - 1)) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t t = i; t < extra; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, std::size_t k) {
    if (k > ambient.dim()) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    std::vector<Subspace> out;
    for_each_subspace_between(Subspace::zero(ambient.field(), ambient.ambient_dim()), ambient, k,
                              [&](const Subspace& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace springer
