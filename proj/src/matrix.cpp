#include "springer/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

MatrixGF::MatrixGF(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF::MatrixGF(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long v : r) data_.push_back(field.reduce(v));
    }
}

MatrixGF::MatrixGF(FieldSpec field, const std::vector<std::vector<long long>>& rows, std::size_t cols)
    : field_(field), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("row length does not match column count");
        for (long long v : r) data_.push_back(field.reduce(v));
    }
}

MatrixGF MatrixGF::identity(FieldSpec field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void MatrixGF::append_row(std::span<const Residue> values) {
    if (values.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool MatrixGF::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

MatrixGF MatrixGF::operator*(const MatrixGF& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product size mismatch");
    if (!(field_ == rhs.field_)) throw std::invalid_argument("matrix product over different fields");
    MatrixGF out(field_, rows_, rhs.cols_);
    const unsigned q = field_.q();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            unsigned acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) acc += unsigned((*this)(i, t)) * rhs(t, j);
            out(i, j) = static_cast<Residue>(acc % q);
        }
    }
    return out;
}

MatrixGF MatrixGF::power(unsigned exponent) const {
    if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
    MatrixGF result = identity(field_, rows_);
    for (unsigned e = 0; e < exponent; ++e) result = result * (*this);
    return result;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Residue> MatrixGF::apply(std::span<const Residue> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
    std::vector<Residue> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned acc = 0;
        for (std::size_t t = 0; t < cols_; ++t) acc += unsigned((*this)(i, t)) * v[t];
        out[i] = static_cast<Residue>(acc % field_.q());
    }
    return out;
}

std::strong_ordering operator<=>(const MatrixGF& a, const MatrixGF& b) noexcept {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
}

MatrixGF rref(const MatrixGF& input) {
    MatrixGF m = input;
    const FieldSpec f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t t = 0; t < cols; ++t) std::swap(m(p, t), m(lead, t));
        const Residue s = f.inv(m(lead, c));
        for (std::size_t t = c; t < cols; ++t) m(lead, t) = f.mul(m(lead, t), s);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c) == 0) continue;
            const Residue factor = m(r, c);
            for (std::size_t t = c; t < cols; ++t)
                m(r, t) = f.sub(m(r, t), f.mul(factor, m(lead, t)));
        }
        ++lead;
    }
    MatrixGF out(f, 0, cols);
    for (std::size_t r = 0; r < lead; ++r) out.append_row(m.row(r));
    return out;
}

std::size_t rank(const MatrixGF& m) { return rref(m).rows(); }

std::vector<std::size_t> pivot_columns(const MatrixGF& echelon) {
    std::vector<std::size_t> pivots;
    pivots.reserve(echelon.rows());
    for (std::size_t r = 0; r < echelon.rows(); ++r) {
        auto row = echelon.row(r);
        auto it = std::find_if(row.begin(), row.end(), [](Residue v) { return v != 0; });
        pivots.push_back(static_cast<std::size_t>(it - row.begin()));
    }
    return pivots;
}

} // namespace springer
