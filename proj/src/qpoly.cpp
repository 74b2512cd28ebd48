#include "springer/qpoly.hpp"

#include <stdexcept>

namespace springer {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

std::int64_t checked_pow(std::int64_t base, unsigned exponent) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

QPolynomial::QPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

QPolynomial QPolynomial::monomial(unsigned degree, std::int64_t c) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPolynomial::evaluate(std::int64_t q) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, q), *it);
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (i == 0 || mag != 1) s += std::to_string(mag);
        if (i >= 1) s += "q";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

QPolynomial gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<QPolynomial> row(1, QPolynomial::constant(1));
    for (int i = 1; i <= n; ++i) {
        std::vector<QPolynomial> next(i + 1);
        for (int j = 0; j <= i; ++j) {
            QPolynomial v;
            if (j >= 1) v += row[j - 1];
            if (j <= i - 1) v += QPolynomial::monomial(static_cast<unsigned>(j)) * row[j];
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[k];
}

} // namespace springer
