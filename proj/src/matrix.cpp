#include "aircal/matrix.hpp"

#include <cmath>

#include "aircal/errors.hpp"

namespace aircal {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_) throw DimensionError("from_rows: ragged row lengths");
        std::size_t c = 0;
        for (double v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* orow = out.data() + i * out.cols();
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            const double* brow = b.data() + k * b.cols();
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("matmul_at_b: row counts differ");
    Matrix out(a.cols(), b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m) {
        const double* arow = a.data() + m * a.cols();
        const double* brow = b.data() + m * b.cols();
        for (std::size_t i = 0; i < a.cols(); ++i) {
            double* orow = out.data() + i * out.cols();
            const double ami = arow[i];
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += ami * brow[j];
        }
    }
    return out;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("matmul_a_bt: column counts differ");
    Matrix out(a.rows(), b.rows());
    for (std::size_t m = 0; m < a.rows(); ++m) {
        const double* arow = a.data() + m * a.cols();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            const double* brow = b.data() + i * b.cols();
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += arow[k] * brow[k];
            out(m, i) = s;
        }
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
    return out;
}

Matrix gather_rows(const Matrix& x, std::span<const std::size_t> indices) {
    Matrix out(indices.size(), x.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= x.rows()) throw DimensionError("gather_rows: index out of range");
        for (std::size_t c = 0; c < x.cols(); ++c) out(i, c) = x(indices[i], c);
    }
    return out;
}

}  // namespace aircal
