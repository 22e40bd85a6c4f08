#include "genflag/linalg.hpp"

#include <vector>

namespace genflag {

namespace {

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> eliminate(DenseMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c) swap(m.at(row, c), m.at(pr, c));
        Rational inv = m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) /= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

DenseMatrix rref(const DenseMatrix& m) {
    DenseMatrix r = m;
    eliminate(r);
    return r;
}

std::size_t rank(const DenseMatrix& m) {
    DenseMatrix r = m;
    return eliminate(r).size();
}

std::optional<DenseMatrix> invert(const DenseMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto pivots = eliminate(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    return aug.block(0, n, n, 2 * n);
}

DenseMatrix kernel(const DenseMatrix& m) {
    DenseMatrix r = m;
    auto pivots = eliminate(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::size_t dim = m.cols() - pivots.size();
    DenseMatrix k(dim, m.cols());
    std::size_t kr = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        k.at(kr, free) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(kr, pivots[pi]) = -r.at(pi, free);
        ++kr;
    }
    // Free columns in increasing order give a matrix already in echelon form
    // up to row order; normalize through rref for a canonical result.
    return rref(k);
}

DenseMatrix stack_rows(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    ensure(a.cols() == b.cols(), "stack_rows column mismatch");
    DenseMatrix s(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) s.at(a.rows() + r, c) = b.at(r, c);
    return s;
}

} // namespace genflag
