#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sce {

/// Row-major dense matrix of 64-bit reals. Used for feature matrices,
/// weight matrices and embeddings throughout the toolkit.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument(
                "DenseMatrix: data length " + std::to_string(data_.size()) +
                " does not match " + std::to_string(rows_) + "x" +
                std::to_string(cols_));
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    const std::vector<double>& values() const { return data_; }

    bool same_shape(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    bool all_finite() const {
        for (double v : data_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    double frobenius_sq() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return s;
    }

    void fill(double v) {
        for (double& x : data_) x = v;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

namespace detail {

inline void require_inner_match(const DenseMatrix& a, const DenseMatrix& b,
                                std::size_t inner_a, std::size_t inner_b,
                                const char* op) {
    if (inner_a != inner_b) {
        throw std::invalid_argument(
            std::string(op) + ": inner dimensions disagree (" +
            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" +
            std::to_string(b.cols()) + ")");
    }
}

}  // namespace detail

/// C = A * B. Accumulation over k runs in fixed ascending order per output
/// row, so results are reproducible.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_inner_match(a, b, a.cols(), b.rows(), "matmul");
    DenseMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double v = ai[p];
            if (v == 0.0) continue;
            const double* bp = b.row(p);
            for (std::size_t j = 0; j < m; ++j) ci[j] += v * bp[j];
        }
    }
    return c;
}

/// C = A^T * B, with A n x r and B n x m giving C r x m.
inline DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_inner_match(a, b, a.rows(), b.rows(), "matmul_tn");
    DenseMatrix c(a.cols(), b.cols());
    const std::size_t n = a.rows(), r = a.cols(), m = b.cols();
    for (std::size_t p = 0; p < n; ++p) {
        const double* ap = a.row(p);
        const double* bp = b.row(p);
        for (std::size_t i = 0; i < r; ++i) {
            const double v = ap[i];
            if (v == 0.0) continue;
            double* ci = c.row(i);
            for (std::size_t j = 0; j < m; ++j) ci[j] += v * bp[j];
        }
    }
    return c;
}

/// C = A * B^T, with A n x r and B m x r giving C n x m.
inline DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
    detail::require_inner_match(a, b, a.cols(), b.cols(), "matmul_nt");
    DenseMatrix c(a.rows(), b.rows());
    const std::size_t n = a.rows(), r = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            const double* bj = b.row(j);
            double s = 0.0;
            for (std::size_t p = 0; p < r; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
    return c;
}

inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("matrix add: shape mismatch");
    }
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

inline DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c.data()[i] *= s;
    return c;
}

inline void axpy(double s, const DenseMatrix& x, DenseMatrix& y) {
    if (!x.same_shape(y)) {
        throw std::invalid_argument("axpy: shape mismatch");
    }
    for (std::size_t i = 0; i < y.size(); ++i) y.data()[i] += s * x.data()[i];
}

}  // namespace sce
