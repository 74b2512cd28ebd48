#include "springer/doubly_flags.hpp"

#include "springer/strata.hpp"

#include <stdexcept>

namespace springer {

DoublyIndexedFlag::DoublyIndexedFlag(std::size_t rows, std::size_t cols, const Subspace& fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

KappaMatrix DoublyIndexedFlag::kappa() const {
    KappaMatrix k{IntMatrix(rows_, cols_)};
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j) k.values(i - 1, j - 1) = static_cast<int>(at(i, j).dim());
    return k;
}

PartialFlag DoublyIndexedFlag::last_row() const {
    PartialFlag f;
    for (std::size_t j = 1; j <= cols_; ++j) f.spaces.push_back(at(rows_, j));
    return f;
}

bool is_in_doubly_flag_variety(const DoublyIndexedFlag& flag, const KappaMatrix& kappa, const AFlag& a) {
    if (flag.rows() != kappa.values.rows() || flag.cols() != kappa.values.cols()) return false;
    if (flag.rows() != a.spaces.size()) return false;
    for (std::size_t i = 1; i <= flag.rows(); ++i)
        for (std::size_t j = 1; j <= flag.cols(); ++j) {
            const Subspace& v = flag.at(i, j);
            if (static_cast<int>(v.dim()) != kappa.values(i - 1, j - 1)) return false;
            if (!a.spaces[i - 1].contains(v)) return false;
            if (i + 1 <= flag.rows() && !flag.at(i + 1, j).contains(v)) return false;
            if (j + 1 <= flag.cols() && !flag.at(i, j + 1).contains(v)) return false;
        }
    return true;
}

DoublyIndexedFlag base_point(const KappaMatrix& kappa, const AFlag& a) {
    if (!is_valid_kappa(kappa, a.dims)) throw std::invalid_argument("kappa matrix is not valid for this A-flag");
    const std::size_t m = kappa.values.rows(), n = kappa.values.cols();
    if (m == 0) throw std::invalid_argument("base point needs a nonempty A-flag");
    const FieldSpec f = a.spaces.front().field();
    const std::size_t d = a.spaces.front().ambient_dim();

    // ordered basis of A_m whose first d_i vectors span A_i
    MatrixGF ordered(f, 0, d);
    Subspace covered = Subspace::zero(f, d);
    for (const auto& ai : a.spaces) {
        for (std::size_t r = 0; r < ai.dim(); ++r) {
            auto row = ai.basis().row(r);
            if (covered.contains_vector(row)) continue;
            ordered.append_row(row);
            covered = Subspace::span_of(ordered);
        }
    }

    DoublyIndexedFlag flag(m, n, Subspace::zero(f, d));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            MatrixGF gens(f, 0, d);
            for (int r = 0; r < kappa.values(i - 1, j - 1); ++r) gens.append_row(ordered.row(static_cast<std::size_t>(r)));
            flag.at(i, j) = Subspace::span_of(gens);
        }
    return flag;
}

namespace {

void fill_cell(const KappaMatrix& kappa, const AFlag& a, DoublyIndexedFlag& flag, std::size_t cell,
               const std::function<void(const DoublyIndexedFlag&)>& visit) {
    const std::size_t m = flag.rows(), n = flag.cols();
    if (cell == m * n) {
        visit(flag);
        return;
    }
    // column-major: j outer, i inner
    const std::size_t j = cell / m + 1, i = cell % m + 1;
    Subspace lower = Subspace::zero(a.spaces.front().field(), a.spaces.front().ambient_dim());
    if (i > 1) lower = flag.at(i - 1, j);
    if (j > 1) lower = sum(lower, flag.at(i, j - 1));
    const int k = kappa.values(i - 1, j - 1);
    if (static_cast<int>(lower.dim()) > k) return;
    const Subspace saved = flag.at(i, j);
    for_each_subspace_between(lower, a.spaces[i - 1], static_cast<std::size_t>(k), [&](const Subspace& s) {
        flag.at(i, j) = s;
        fill_cell(kappa, a, flag, cell + 1, visit);
    });
    flag.at(i, j) = saved;
}

} // namespace

void for_each_doubly_flag(const KappaMatrix& kappa, const AFlag& a,
                          const std::function<void(const DoublyIndexedFlag&)>& visit) {
    if (!is_valid_kappa(kappa, a.dims)) throw std::invalid_argument("kappa matrix is not valid for this A-flag");
    const std::size_t m = kappa.values.rows(), n = kappa.values.cols();
    if (m == 0) throw std::invalid_argument("doubly indexed flags need a nonempty A-flag");
    DoublyIndexedFlag flag(m, n, Subspace::zero(a.spaces.front().field(), a.spaces.front().ambient_dim()));
    fill_cell(kappa, a, flag, 0, visit);
}

PartialFlag psi(const DoublyIndexedFlag& flag, const NilpotentGeometry& geometry) {
    if (!is_in_doubly_flag_variety(flag, flag.kappa(), geometry.a_flag))
        throw std::invalid_argument("input is not a point of the doubly indexed flag variety");
    const std::size_t m = flag.rows();
    PartialFlag out;
    for (std::size_t j = 1; j <= flag.cols(); ++j) {
        Subspace w = Subspace::zero(geometry.field(), geometry.dimension());
        for (std::size_t i = 1; i <= m; ++i) w = sum(w, image(geometry.lifts[i - 1], flag.at(i, j)));
        out.spaces.push_back(std::move(w));
    }
    return out;
}

DoublyIndexedFlag phi(const PartialFlag& flag, const NilpotentGeometry& geometry) {
    if (!is_x_stable(flag, geometry.x.matrix)) throw std::invalid_argument("flag is not x-stable");
    if (!is_homogeneous(flag, geometry.graded)) throw std::invalid_argument("flag is not homogeneous");
    const auto m = static_cast<std::size_t>(geometry.order());
    if (m == 0) throw std::invalid_argument("phi needs a nonzero ambient space");
    DoublyIndexedFlag out(m, flag.length(), Subspace::zero(geometry.field(), geometry.dimension()));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= flag.length(); ++j) {
            const Subspace layer = intersect(flag.spaces[j - 1], geometry.kernels.spaces[m - i]);
            out.at(i, j) = image(geometry.powers[m - i], layer);
        }
    return out;
}

bool schubert_membership(const PartialFlag& flag, const KappaMatrix& kappa, const AFlag& a) {
    const std::size_t m = kappa.values.rows(), n = kappa.values.cols();
    if (flag.length() != n || a.spaces.size() != m)
        throw std::invalid_argument("flag length or A-flag length does not match kappa");
    for (std::size_t j = 0; j < n; ++j)
        if (m > 0 && static_cast<int>(flag.spaces[j].dim()) != kappa.values(m - 1, j))
            throw std::invalid_argument("flag dimension vector differs from the last row of kappa");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<int>(intersect(a.spaces[i], flag.spaces[j]).dim()) < kappa.values(i, j)) return false;
    return true;
}

} // namespace springer
