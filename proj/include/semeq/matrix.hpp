#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "semeq/errors.hpp"

namespace semeq {

using Vec = std::vector<double>;

namespace detail {

inline void require_finite(const double* p, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(p[i])) {
            throw InvalidArgument(std::string(what) + ": non-finite entry at index " +
                                  std::to_string(i));
        }
    }
}

}  // namespace detail

// Dense real matrix, row-major. Constructors reject non-finite entries.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (!std::isfinite(fill)) throw InvalidArgument("Matrix: non-finite fill value");
    }

    Matrix(std::size_t rows, std::size_t cols, Vec data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw InvalidArgument("Matrix: data length " + std::to_string(data_.size()) +
                                  " != rows*cols " + std::to_string(rows_ * cols_));
        detail::require_finite(data_.data(), data_.size(), "Matrix");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

    Vec row(std::size_t r) const {
        return Vec(row_ptr(r), row_ptr(r) + cols_);
    }

    void set_row(std::size_t r, const Vec& v) {
        if (v.size() != cols_) throw InvalidArgument("Matrix::set_row: length mismatch");
        std::copy(v.begin(), v.end(), row_ptr(r));
    }

    const Vec& data() const { return data_; }
    Vec& data() { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

using EigenRowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const EigenRowMajor> as_eigen(const Matrix& m) {
    return {m.data().data(), static_cast<Eigen::Index>(m.rows()),
            static_cast<Eigen::Index>(m.cols())};
}

inline Eigen::Map<EigenRowMajor> as_eigen(Matrix& m) {
    return {m.data().data(), static_cast<Eigen::Index>(m.rows()),
            static_cast<Eigen::Index>(m.cols())};
}

inline Eigen::Map<const Eigen::VectorXd> as_eigen(const Vec& v) {
    return {v.data(), static_cast<Eigen::Index>(v.size())};
}

inline Eigen::Map<Eigen::VectorXd> as_eigen(Vec& v) {
    return {v.data(), static_cast<Eigen::Index>(v.size())};
}

inline Matrix from_eigen(const EigenRowMajor& e) {
    Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    as_eigen(m) = e;
    return m;
}

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
    return as_eigen(a).dot(as_eigen(b));
}

inline double norm(const Vec& a) { return as_eigen(a).norm(); }

inline double squared_distance(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidArgument("squared_distance: length mismatch");
    return (as_eigen(a) - as_eigen(b)).squaredNorm();
}

}  // namespace semeq
