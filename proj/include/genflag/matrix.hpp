#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "genflag/errors.hpp"
#include "genflag/rational.hpp"

namespace genflag {

/// Dense row-major matrix of exact rationals. Entry (r, c) of an operator
/// matrix is the coefficient of the r-th output coordinate in the image of
/// the c-th input coordinate.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    DenseMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            require(row.size() == cols_, "ragged matrix literal");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        ensure(cols_ == o.rows_, "matrix product shape mismatch");
        DenseMatrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& v = at(r, k);
                if (v == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    if (o.at(k, c) != 0) p.at(r, c) += v * o.at(k, c);
                }
            }
        return p;
    }

    DenseMatrix operator*(const Rational& s) const {
        DenseMatrix p = *this;
        for (auto& v : p.data_) v *= s;
        return p;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        ensure(x.size() == cols_, "matrix apply shape mismatch");
        std::vector<Rational> y(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) != 0 && x[c] != 0) y[r] += at(r, c) * x[c];
        return y;
    }

    /// Submatrix of the given half-open row/column ranges.
    DenseMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        ensure(r0 <= r1 && r1 <= rows_ && c0 <= c1 && c1 <= cols_, "block out of range");
        DenseMatrix b(r1 - r0, c1 - c0);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) b.at(r - r0, c - c0) = at(r, c);
        return b;
    }

    friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
        os << "[";
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? " [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c)
                os << (c ? "," : "") << to_string(m.at(r, c));
            os << "]";
        }
        return os << "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace genflag
