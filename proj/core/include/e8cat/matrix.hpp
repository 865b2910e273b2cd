#pragma once

#include "e8cat/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace e8cat {

using ExactVector = std::vector<ExactScalar>;

/// Dense matrix over Q(v2). Row-major.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    static ExactMatrix identity(size_t n) {
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ExactScalar& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
    const ExactScalar& at(size_t r, size_t c) const { return d_[r * cols_ + c]; }

    ExactVector row(size_t r) const {
        return ExactVector(d_.begin() + r * cols_, d_.begin() + (r + 1) * cols_);
    }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix operator-() const {
        ExactMatrix m(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = -d_[i];
        return m;
    }
    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
        x.check_same_shape(y);
        ExactMatrix m(x.rows_, x.cols_);
        for (size_t i = 0; i < x.d_.size(); ++i) m.d_[i] = x.d_[i] + y.d_[i];
        return m;
    }
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
        x.check_same_shape(y);
        ExactMatrix m(x.rows_, x.cols_);
        for (size_t i = 0; i < x.d_.size(); ++i) m.d_[i] = x.d_[i] - y.d_[i];
        return m;
    }
    friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& y) {
        ExactMatrix m(y.rows_, y.cols_);
        for (size_t i = 0; i < y.d_.size(); ++i) m.d_[i] = s * y.d_[i];
        return m;
    }

    /// Product skipping zero entries of the left factor; matrices in this
    /// project are usually signed permutations or block sparse.
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix m(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i) {
            for (size_t k = 0; k < x.cols_; ++k) {
                const ExactScalar& a = x.at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) {
                    const ExactScalar& b = y.at(k, j);
                    if (b.is_zero()) continue;
                    m.at(i, j) += a * b;
                }
            }
        }
        return m;
    }

    ExactVector apply(const ExactVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        ExactVector out(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const ExactScalar& a = at(i, j);
                if (!a.is_zero()) out[i] += a * v[j];
            }
        return out;
    }

    ExactMatrix transposed() const {
        ExactMatrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    ExactScalar trace() const {
        ExactScalar t;
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : d_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
            }
        return true;
    }

  private:
    void check_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<ExactScalar> d_;
};

inline ExactScalar dot(const ExactVector& x, const ExactVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    ExactScalar s;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}

inline bool is_zero_vector(const ExactVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace e8cat
