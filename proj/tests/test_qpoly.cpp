#include "springer/qpoly.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

using namespace springer;

TEST_CASE("gaussian binomial examples") {
    for (int n = 0; n <= 6; ++n) CHECK(gaussian_binomial(n, 0) == QPolynomial::constant(1));
    CHECK(gaussian_binomial(2, 1) == QPolynomial({1, 1}));
    CHECK(gaussian_binomial(4, 2) == QPolynomial({1, 1, 2, 1, 1}));
    CHECK(gaussian_binomial(4, 2).to_string() == "q^4+q^3+2q^2+q+1");
    CHECK(gaussian_binomial(4, 2).evaluate(2) == 35);
    CHECK(gaussian_binomial(3, 4).is_zero());
    CHECK(gaussian_binomial(3, -1).is_zero());
}

TEST_CASE("gaussian binomial symmetry, degree and classical specialization") {
    for (int n = 0; n <= 8; ++n) {
        std::int64_t binom = 1;
        for (int k = 0; k <= n; ++k) {
            const auto g = gaussian_binomial(n, k);
            CHECK(g == gaussian_binomial(n, n - k));
            CHECK(g.degree() == k * (n - k));
            CHECK(g.evaluate(1) == binom);
            for (auto c : g.coefficients()) CHECK(c >= 0);
            binom = binom * (n - k) / (k + 1);
        }
    }
}

TEST_CASE("gaussian binomial against product formula") {
    // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1)
    for (std::int64_t q : {2, 3, 5}) {
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k) {
                std::int64_t num = 1, den = 1;
                for (int i = 0; i < k; ++i) {
                    num *= checked_pow(q, n - i) - 1;
                    den *= checked_pow(q, i + 1) - 1;
                }
                CHECK(gaussian_binomial(n, k).evaluate(q) == num / den);
            }
    }
}

TEST_CASE("polynomial arithmetic") {
    const QPolynomial a({1, 1}), b({-1, 0, 1});
    CHECK((a * b) == QPolynomial({-1, -1, 1, 1}));
    CHECK((a + b) == QPolynomial({0, 1, 1}));
    CHECK((b + QPolynomial({1, 0, -1})).is_zero());
    CHECK(QPolynomial().degree() == -1);
    CHECK(QPolynomial().to_string() == "0");
    CHECK(QPolynomial::monomial(3, 2).to_string() == "2q^3");
    CHECK(QPolynomial({1, 0, 1}).to_string() == "q^2+1");
    CHECK(QPolynomial({0, -1}).to_string() == "-q");
    CHECK(QPolynomial({1, 1, 1}).evaluate(3) == 13);
}

TEST_CASE("checked arithmetic refuses overflow") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(2, 63), std::overflow_error);
    CHECK(checked_pow(2, 62) == (std::int64_t{1} << 62));
}
