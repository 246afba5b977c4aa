#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace aircal {

// Dense row-major matrix of doubles; the single numeric carrier used for
// feature tables, activations and gradients.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// a (m x k) * b (k x n)
Matrix matmul(const Matrix& a, const Matrix& b);

// transpose(a) * b, with a (m x i) and b (m x j) sharing the row count
Matrix matmul_at_b(const Matrix& a, const Matrix& b);

// a * transpose(b), with a (m x k) and b (n x k) sharing the column count
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix gather_rows(const Matrix& x, std::span<const std::size_t> indices);

}  // namespace aircal
