#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace springer {

/// Polynomial in a formal variable q with exact int64 coefficients,
/// lowest degree first. Arithmetic throws std::overflow_error rather than
/// wrapping.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<std::int64_t> coefficients);
    static QPolynomial constant(std::int64_t c) { return QPolynomial({c}); }
    static QPolynomial monomial(unsigned degree, std::int64_t c = 1);

    /// Coefficients with trailing zeros trimmed; empty for the zero polynomial.
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    std::int64_t coefficient(std::size_t degree) const noexcept {
        return degree < coeffs_.size() ? coeffs_[degree] : 0;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t evaluate(std::int64_t q) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Human-readable form, highest degree first, e.g. "q^4+q^3+2q^2+q+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// The Gaussian binomial [n choose k]_q; the zero polynomial when k is out
/// of range.
QPolynomial gaussian_binomial(int n, int k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, unsigned exponent);

} // namespace springer
