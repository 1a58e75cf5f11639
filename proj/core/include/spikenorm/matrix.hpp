#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spikenorm {

// Dense row-major matrix.  The networks and unit-ball transforms handled
// here are tiny, so this stays deliberately minimal.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Row-major nested initialization; all rows must have equal length.
    explicit Matrix(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    std::vector<double> multiply(const std::vector<double>& x) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline Matrix::Matrix(const std::vector<std::vector<double>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

inline std::vector<double> Matrix::multiply(const std::vector<double>& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("Matrix::multiply: size mismatch");
    }
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

}  // namespace spikenorm
