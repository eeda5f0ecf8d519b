#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace kwsmote {

/// Dense row-major matrix of doubles. The column count is fixed by the
/// constructor or by the first appended row.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<double> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }

    /// Appends one row. An empty matrix adopts the width of the first row.
    void append_row(std::span<const double> values) {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = values.size();
        } else if (values.size() != cols_) {
            throw std::invalid_argument("Matrix::append_row: width mismatch: expected " +
                                        std::to_string(cols_) + ", got " +
                                        std::to_string(values.size()));
        }
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

    const std::vector<double>& data() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace kwsmote
