#pragma once

#include <cstddef>
#include <vector>

#include "genflag/linalg.hpp"

namespace genflag {

/// A subspace of Q^n in canonical form: the basis is the reduced row-echelon
/// matrix of any generating set, one basis vector per row. Two Subspace
/// values are equal exactly when they describe the same subspace.
class Subspace {
public:
    /// Zero subspace.
    explicit Subspace(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of `generators` (zero rows dropped).
    static Subspace span(std::size_t ambient_dim, const DenseMatrix& generators);

    /// Span of the given coordinate axes.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const DenseMatrix& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& o) const;

    /// { f in the dual coordinate space : f(v) = 0 for all v here }.
    Subspace annihilator() const;

    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

    /// Row-by-row image under m (columns of m = input coordinates).
    Subspace image(const DenseMatrix& m) const;

private:
    std::size_t ambient_;
    DenseMatrix basis_;
};

} // namespace genflag
