#include "springer/flags.hpp"
#include "springer/nilpotent.hpp"
#include "springer/qpoly.hpp"

#include <doctest.h>

#include <set>

using namespace springer;

namespace {

NilpotentGeometry geom(std::vector<int> lambda, unsigned q) {
    return NilpotentGeometry(build_nilpotent(JordanType(std::move(lambda)), FieldSpec(q)));
}

Subspace span_labels(const NilpotentGeometry& g, std::vector<std::pair<int, int>> labels) {
    std::vector<std::size_t> idx;
    for (auto [b, h] : labels) idx.push_back(g.x.index_of(b, h));
    std::sort(idx.begin(), idx.end());
    return Subspace::coordinate(g.field(), g.dimension(), idx);
}

std::vector<long long> unit(const NilpotentGeometry& g, int b, int h) {
    std::vector<long long> v(g.dimension(), 0);
    v[g.x.index_of(b, h)] = 1;
    return v;
}

// Basis extension route: extend V∩ker x^{i-1} to V∩ker x^i vector by vector, keep the
// height-i coordinates of each new vector.
Subspace homogenize_by_extension(const Subspace& v, const NilpotentGeometry& g) {
    const FieldSpec f = g.field();
    std::vector<std::vector<long long>> gens;
    Subspace prev = Subspace::zero(f, g.dimension());
    for (int i = 1; i <= g.order(); ++i) {
        const Subspace layer = intersect(v, g.kernels.spaces[i - 1]);
        Subspace grown = prev;
        for (std::size_t r = 0; r < layer.dim(); ++r) {
            const auto row = layer.basis().row(r);
            if (grown.contains_vector(row)) continue;
            std::vector<long long> w(row.begin(), row.end());
            grown = sum(grown, subspace_from_generators(f, {w}, g.dimension()));
            for (std::size_t t = 0; t < w.size(); ++t)
                if (g.x.labels[t].height != i) w[t] = 0;
            gens.push_back(w);
        }
        prev = layer;
    }
    return subspace_from_generators(f, gens, g.dimension());
}

} // namespace

TEST_CASE("jordan types") {
    CHECK_THROWS(JordanType({1, 2}));
    CHECK_THROWS(JordanType({2, 0}));
    const JordanType l({3, 2, 2, 1});
    CHECK(l.dimension() == 8);
    CHECK(l.order() == 3);
    CHECK(l.conjugate() == std::vector<int>{4, 3, 1});
    CHECK(JordanType(std::vector<int>{}).dimension() == 0);
}

TEST_CASE("build_nilpotent examples") {
    auto z = geom({1, 1, 1}, 2);
    CHECK(z.x.matrix.is_zero());
    CHECK(z.order() == 1);
    auto s = geom({3}, 2);
    CHECK(s.kernels.dims == std::vector<int>{1, 2, 3});
    auto g = geom({2, 1}, 2);
    CHECK(g.kernels.dims == std::vector<int>{2, 3});
    CHECK(g.order() == 2);
    for (auto lambda : {std::vector<int>{1}, {2}, {3, 1}, {2, 2}, {3, 2}, {2, 1, 1}, {4, 2, 1}}) {
        auto h = geom(lambda, 3);
        const int m = h.order();
        CHECK(h.x.matrix.power(m).is_zero());
        CHECK(!h.x.matrix.power(m - 1).is_zero());
        const auto conj = JordanType(lambda).conjugate();
        int acc = 0;
        for (int i = 1; i <= m; ++i) {
            acc += conj[i - 1];
            CHECK(h.kernels.dims[i - 1] == acc);
        }
    }
}

TEST_CASE("graded pieces and the A flag") {
    auto g = geom({2, 1}, 2);
    CHECK(g.graded.pieces[0] == span_labels(g, {{1, 1}, {2, 1}}));
    CHECK(g.graded.pieces[1] == span_labels(g, {{1, 2}}));
    CHECK(g.a_flag.spaces[0] == span_labels(g, {{1, 1}}));
    CHECK(g.a_flag.spaces[0] == image(g.x.matrix, Subspace::full(g.field(), 3)));
    CHECK(g.a_flag.spaces[1] == g.kernels.spaces[0]);
    CHECK(g.a_flag.dims == std::vector<int>{1, 2});
    CHECK(geom({2, 2}, 2).a_flag.dims == std::vector<int>{2, 2});
    auto z = geom({1, 1}, 3);
    CHECK(z.graded.pieces.size() == 1);
    CHECK(z.graded.pieces[0] == Subspace::full(z.field(), 2));
    CHECK(z.a_flag.spaces[0] == Subspace::full(z.field(), 2));

    for (auto lambda : {std::vector<int>{3, 1}, {3, 2}, {2, 2, 1}, {4, 2, 1}}) {
        auto h = geom(lambda, 2);
        const int m = h.order();
        Subspace acc = Subspace::zero(h.field(), h.dimension());
        std::size_t total = 0;
        for (int i = 1; i <= m; ++i) {
            const Subspace& e = h.graded.pieces[i - 1];
            total += e.dim();
            acc = sum(acc, e);
            CHECK(acc == h.kernels.spaces[i - 1]);
            const Subspace xe = image(h.x.matrix, e);
            if (i == 1) CHECK(xe.dim() == 0);
            else {
                CHECK(h.graded.pieces[i - 2].contains(xe));
                CHECK(xe.dim() == e.dim());
            }
            const Subspace a = h.a_flag.spaces[i - 1];
            CHECK(a == image(h.powers[m - i], h.kernels.spaces[m - i]));
            CHECK(image(h.powers[m - i], h.graded.pieces[m - i]) == a);
            CHECK(static_cast<int>(a.dim()) == h.kernels.dims[m - i] - (m - i >= 1 ? h.kernels.dims[m - i - 1] : 0));
            if (i > 1) CHECK(a.contains(h.a_flag.spaces[i - 2]));
        }
        CHECK(total == h.dimension());
        CHECK(h.a_flag.spaces[m - 1] == h.kernels.spaces[0]);
    }
}

TEST_CASE("enumerate_partial_flags examples and counts") {
    const FieldSpec f2(2);
    CHECK(enumerate_partial_flags({1, 2}, Subspace::full(f2, 3)).size() == 21);
    CHECK(enumerate_partial_flags({0}, Subspace::full(f2, 3)).size() == 1);
    CHECK(enumerate_partial_flags({3}, Subspace::full(f2, 3)).size() == 1);
    CHECK(enumerate_partial_flags({}, Subspace::full(f2, 0)).size() == 1);
    CHECK_THROWS(enumerate_partial_flags({2, 1}, Subspace::full(f2, 3)));
    CHECK_THROWS(enumerate_partial_flags({4}, Subspace::full(f2, 3)));
    for (unsigned q : {2u, 3u}) {
        for (auto dims : {std::vector<int>{1, 2, 3}, {1, 3}, {2, 2}, {0, 2, 4}, {1, 2, 3, 4}}) {
            const int d = 4;
            std::int64_t expected = 1;
            for (std::size_t j = 0; j < dims.size(); ++j) {
                const int next = j + 1 < dims.size() ? dims[j + 1] : d;
                expected *= gaussian_binomial(next, dims[j]).evaluate(q);
            }
            const auto flags = enumerate_partial_flags(dims, Subspace::full(FieldSpec(q), d));
            CHECK(static_cast<std::int64_t>(flags.size()) == expected);
            CHECK(flags == enumerate_partial_flags(dims, Subspace::full(FieldSpec(q), d)));
            std::set<PartialFlag> unique(flags.begin(), flags.end());
            CHECK(unique.size() == flags.size());
            for (const auto& fl : flags) CHECK(fl.dims() == dims);
        }
    }
}

TEST_CASE("x-stability examples") {
    auto z = geom({1, 1, 1}, 2);
    for (const auto& fl : enumerate_partial_flags({1, 2}, Subspace::full(z.field(), 3)))
        CHECK(is_x_stable(fl, z.x.matrix));
    auto g = geom({2, 1}, 2);
    PartialFlag bad{{subspace_from_generators(g.field(), {unit(g, 1, 2)}, 3)}};
    CHECK_FALSE(is_x_stable(bad, g.x.matrix));
    auto h = geom({3, 2}, 3);
    PartialFlag kernels{h.kernels.spaces};
    CHECK(is_x_stable(kernels, h.x.matrix));
}

TEST_CASE("orbit signature examples") {
    auto z = geom({1, 1, 1}, 2);
    for (const auto& fl : enumerate_partial_flags({1, 2}, Subspace::full(z.field(), 3))) {
        const auto a = orbit_signature(fl, z.kernels);
        CHECK(a.values == IntMatrix{{1, 2}});
    }
    auto g = geom({2, 1}, 2);
    const Subspace ker = g.kernels.spaces[0];
    PartialFlag f1{{span_labels(g, {{2, 1}}), ker}};
    CHECK(orbit_signature(f1, g.kernels).values == IntMatrix{{1, 2}, {1, 2}});
    PartialFlag f2{{span_labels(g, {{1, 1}}), span_labels(g, {{1, 1}, {1, 2}})}};
    CHECK(orbit_signature(f2, g.kernels).values == IntMatrix{{1, 1}, {1, 2}});
}

TEST_CASE("homogeneity examples") {
    auto z = geom({1, 1}, 3);
    for (const auto& fl : enumerate_partial_flags({1}, Subspace::full(z.field(), 2))) CHECK(is_homogeneous(fl, z.graded));
    auto g = geom({2, 1}, 2);
    auto mixed = unit(g, 1, 1);
    mixed[g.x.index_of(1, 2)] = 1;
    PartialFlag bad{{subspace_from_generators(g.field(), {mixed}, 3)}};
    CHECK_FALSE(is_homogeneous(bad, g.graded));
    PartialFlag coord{{span_labels(g, {{1, 2}}), span_labels(g, {{1, 2}, {2, 1}})}};
    CHECK(is_homogeneous(coord, g.graded));
}

TEST_CASE("homogenize examples") {
    auto g = geom({2, 1}, 2);
    auto v = unit(g, 1, 2);
    v[g.x.index_of(2, 1)] = 1;
    const Subspace s = subspace_from_generators(g.field(), {v}, 3);
    CHECK(homogenize(s, g) == span_labels(g, {{1, 2}}));
    PartialFlag coord{{span_labels(g, {{1, 2}}), span_labels(g, {{1, 2}, {2, 1}})}};
    CHECK(homogenize(coord, g) == coord);
    auto z = geom({1, 1, 1}, 3);
    for (const auto& fl : enumerate_partial_flags({1, 2}, Subspace::full(z.field(), 3))) CHECK(homogenize(fl, z) == fl);
}

TEST_CASE("homogenize: exhaustive properties for d <= 4 over F_2") {
    for (auto lambda : {std::vector<int>{2}, {2, 1}, {3}, {2, 2}, {3, 1}, {2, 1, 1}, {4}}) {
        auto g = geom(lambda, 2);
        const int d = static_cast<int>(g.dimension());
        for (int k = 1; k < d; ++k) {
            for (const auto& fl : enumerate_partial_flags({k}, Subspace::full(g.field(), d))) {
                const PartialFlag h = homogenize(fl, g);
                CHECK(h.spaces[0] == homogenize_by_extension(fl.spaces[0], g));
                CHECK(h.dims() == fl.dims());
                CHECK(is_homogeneous(h, g.graded));
                CHECK(homogenize(h, g) == h);
                CHECK(orbit_signature(h, g.kernels) == orbit_signature(fl, g.kernels));
                if (is_x_stable(fl, g.x.matrix)) CHECK(is_x_stable(h, g.x.matrix));
                if (is_homogeneous(fl, g.graded)) CHECK(h == fl);
            }
        }
        for (const auto& fl : enumerate_partial_flags({1, 2}, Subspace::full(g.field(), d))) {
            const PartialFlag h = homogenize(fl, g);
            CHECK(h.spaces[1].contains(h.spaces[0]));
            CHECK(orbit_signature(h, g.kernels) == orbit_signature(fl, g.kernels));
        }
    }
}
