#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace springer {

/// Small dense integer matrix, row-major, 0-based indexing.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, int fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    IntMatrix(std::initializer_list<std::initializer_list<int>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    int& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const std::vector<int>& data() const noexcept { return data_; }

    std::vector<std::vector<int>> to_rows() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> data_;
};

inline IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

inline IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline std::vector<std::vector<int>> IntMatrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

/// "[[1,2],[1,2]]"
inline std::string to_string(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + std::to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

/// α: entry (i-1, j-1) is dim(V_j ∩ ker x^i). Labels a parabolic orbit.
struct AlphaMatrix {
    IntMatrix values;
    friend bool operator==(const AlphaMatrix&, const AlphaMatrix&) = default;
    friend auto operator<=>(const AlphaMatrix&, const AlphaMatrix&) = default;
};

/// κ: entry (i-1, j-1) is dim V_{i,j} of a doubly indexed flag.
struct KappaMatrix {
    IntMatrix values;
    friend bool operator==(const KappaMatrix&, const KappaMatrix&) = default;
    friend auto operator<=>(const KappaMatrix&, const KappaMatrix&) = default;
};

} // namespace springer
