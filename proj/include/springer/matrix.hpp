#pragma once

#include "springer/field.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace springer {

/// Dense row-major matrix over a prime field.
class MatrixGF {
public:
    MatrixGF(FieldSpec field, std::size_t rows, std::size_t cols);
    /// Builds from integer rows; entries are reduced mod q.
    MatrixGF(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);
    MatrixGF(FieldSpec field, const std::vector<std::vector<long long>>& rows, std::size_t cols);

    static MatrixGF identity(FieldSpec field, std::size_t n);
    static MatrixGF zero(FieldSpec field, std::size_t rows, std::size_t cols) {
        return MatrixGF(field, rows, cols);
    }

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Residue> values);
    bool is_zero() const noexcept;

    MatrixGF operator*(const MatrixGF& rhs) const;
    MatrixGF power(unsigned exponent) const;
    MatrixGF transpose() const;
    /// Applies the matrix to a column vector.
    std::vector<Residue> apply(std::span<const Residue> v) const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    /// Lexicographic on (rows, cols, row-major entries).
    friend std::strong_ordering operator<=>(const MatrixGF& a, const MatrixGF& b) noexcept;

    const std::vector<Residue>& data() const noexcept { return data_; }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Reduced row echelon form with zero rows removed.
MatrixGF rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

/// Pivot column of every row of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const MatrixGF& echelon);

} // namespace springer
