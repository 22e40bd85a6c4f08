#include "genflag/subspace.hpp"

namespace genflag {

Subspace Subspace::span(std::size_t ambient_dim, const DenseMatrix& generators) {
    if (generators.rows() == 0) return Subspace(ambient_dim);
    ensure(generators.cols() == ambient_dim, "generator width differs from ambient dimension");
    DenseMatrix r = rref(generators);
    std::size_t nz = 0;
    while (nz < r.rows()) {
        bool zero = true;
        for (std::size_t c = 0; c < r.cols(); ++c)
            if (r.at(nz, c) != 0) { zero = false; break; }
        if (zero) break;
        ++nz;
    }
    Subspace s(ambient_dim);
    s.basis_ = r.block(0, nz, 0, ambient_dim);
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    DenseMatrix g(axes.size(), ambient_dim);
    for (std::size_t i = 0; i < axes.size(); ++i) {
        ensure(axes[i] < ambient_dim, "coordinate axis out of range");
        g.at(i, axes[i]) = 1;
    }
    return span(ambient_dim, g);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = DenseMatrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    ensure(v.size() == ambient_, "vector dimension mismatch");
    DenseMatrix row(1, ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) row.at(0, c) = v[c];
    return rank(stack_rows(basis_, row)) == dim();
}

bool Subspace::contains(const Subspace& o) const {
    ensure(ambient_ == o.ambient_, "ambient dimension mismatch");
    return rank(stack_rows(basis_, o.basis_)) == dim();
}

Subspace Subspace::annihilator() const {
    // Solve basis * f^T = 0; kernel already returns a canonical basis.
    Subspace a(ambient_);
    if (dim() == 0) return full(ambient_);
    DenseMatrix k = kernel(basis_);
    a.basis_ = k;
    return a;
}

Subspace Subspace::intersect(const Subspace& o) const {
    require(ambient_ == o.ambient_, "intersect: ambient dimension mismatch");
    return annihilator().sum(o.annihilator()).annihilator();
}

Subspace Subspace::sum(const Subspace& o) const {
    ensure(ambient_ == o.ambient_, "sum: ambient dimension mismatch");
    return span(ambient_, stack_rows(basis_, o.basis_));
}

Subspace Subspace::image(const DenseMatrix& m) const {
    ensure(m.cols() == ambient_, "image: shape mismatch");
    // Images of basis vectors as rows: basis * m^T.
    return span(m.rows(), basis_ * m.transpose());
}

} // namespace genflag
