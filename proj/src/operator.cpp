#include "genflag/operator.hpp"

#include <algorithm>

#include "genflag/linalg.hpp"

namespace genflag {

StructuredOperator identity_op(const FlagSchema& s) {
    require_valid(s);
    return StructuredOperator{s, std::nullopt, 0, DenseMatrix()};
}

StructuredOperator shift_op(const FlagSchema& s, long k) {
    require_valid(s);
    require(k == 0 || s.index_schema.has_translation(),
            "index order does not admit a uniform shift");
    return StructuredOperator{s, std::nullopt, k, DenseMatrix()};
}

StructuredOperator make_operator(const FlagSchema& s, const IndexInterval& window,
                                 long tail_shift, DenseMatrix matrix) {
    require_valid(s);
    require(tail_shift == 0 || s.index_schema.has_translation(),
            "index order does not admit a uniform shift");
    std::size_t n = window.size(s.index_schema);
    require(n > 0, "operator window is empty");
    require(matrix.rows() == n && matrix.cols() == n, "operator matrix shape mismatch");
    require(rank(matrix) == n, "operator matrix is singular");
    return StructuredOperator{s, window, tail_shift, std::move(matrix)};
}

std::optional<IndexInterval> output_window(const StructuredOperator& f) {
    if (!f.window) return std::nullopt;
    return f.window->translate(f.schema.index_schema, f.tail_shift);
}

StructuredOperator absorb(const StructuredOperator& f, const IndexInterval& new_window) {
    const IndexSchema& ord = f.schema.index_schema;
    if (f.window) {
        require(new_window.covers(*f.window), "absorb: new window must contain the old one");
        if (new_window == *f.window) return f;
    }
    auto in_idx = new_window.indices(ord);
    auto out_idx = new_window.translate(ord, f.tail_shift).indices(ord);
    std::size_t n = in_idx.size();
    ensure(out_idx.size() == n, "translated window changed size");

    DenseMatrix m(n, n);
    std::vector<long> old_in, old_out;
    if (f.window) {
        old_in = f.window->indices(ord);
        old_out = output_window(f)->indices(ord);
    }
    for (std::size_t c = 0; c < n; ++c) {
        auto it = std::find(old_in.begin(), old_in.end(), in_idx[c]);
        if (it == old_in.end()) {
            // Tail column: e_i -> e_{succ^d(i)}.
            auto img = ord.succ_n(in_idx[c], f.tail_shift);
            ensure(img.has_value(), "tail image fell off the index line");
            m.at(window_position(out_idx, *img), c) = 1;
        } else {
            std::size_t oc = static_cast<std::size_t>(it - old_in.begin());
            for (std::size_t orow = 0; orow < old_out.size(); ++orow)
                m.at(window_position(out_idx, old_out[orow]), c) = f.matrix.at(orow, oc);
        }
    }
    return StructuredOperator{f.schema, new_window, f.tail_shift, std::move(m)};
}

StructuredOperator compose(const StructuredOperator& f, const StructuredOperator& g) {
    require(f.schema == g.schema, "compose: operators on different schemas");
    const IndexSchema& ord = f.schema.index_schema;
    std::optional<IndexInterval> r;
    if (g.window) r = g.window;
    if (f.window) {
        IndexInterval pulled = f.window->translate(ord, -g.tail_shift);
        r = r ? r->unite(pulled) : pulled;
    }
    long tail = f.tail_shift + g.tail_shift;
    if (!r) return StructuredOperator{f.schema, std::nullopt, tail, DenseMatrix()};
    StructuredOperator ga = absorb(g, *r);
    StructuredOperator fa = absorb(f, r->translate(ord, g.tail_shift));
    return StructuredOperator{f.schema, r, tail, fa.matrix * ga.matrix};
}

StructuredOperator invert_op(const StructuredOperator& f) {
    if (!f.window) return StructuredOperator{f.schema, std::nullopt, -f.tail_shift, DenseMatrix()};
    auto inv = invert(f.matrix);
    ensure(inv.has_value(), "operator matrix is singular");
    return StructuredOperator{f.schema, output_window(f), -f.tail_shift, std::move(*inv)};
}

StructuredOperator bar_op(const StructuredOperator& f) {
    if (!f.window) return StructuredOperator{f.schema, std::nullopt, -f.tail_shift, DenseMatrix()};
    return StructuredOperator{f.schema, output_window(f), -f.tail_shift, f.matrix.transpose()};
}

SparseVec apply_to_vector(const StructuredOperator& f, const SparseVec& x) {
    const IndexSchema& ord = f.schema.index_schema;
    SparseVec y;
    std::vector<long> in_idx, out_idx;
    if (f.window) {
        in_idx = f.window->indices(ord);
        out_idx = output_window(f)->indices(ord);
    }
    for (const auto& [i, v] : x) {
        if (v == 0) continue;
        require(ord.valid(i), "vector coordinate at an invalid index");
        auto it = std::find(in_idx.begin(), in_idx.end(), i);
        if (it == in_idx.end()) {
            auto img = ord.succ_n(i, f.tail_shift);
            ensure(img.has_value(), "tail image fell off the index line");
            y[*img] += v;
        } else {
            std::size_t c = static_cast<std::size_t>(it - in_idx.begin());
            for (std::size_t r = 0; r < out_idx.size(); ++r)
                if (f.matrix.at(r, c) != 0) y[out_idx[r]] += f.matrix.at(r, c) * v;
        }
    }
    for (auto it = y.begin(); it != y.end();)
        it = it->second == 0 ? y.erase(it) : std::next(it);
    return y;
}

bool op_equal(const StructuredOperator& f, const StructuredOperator& g) {
    require(f.schema == g.schema, "comparing operators on different schemas");
    if (f.tail_shift != g.tail_shift) return false;
    std::optional<IndexInterval> w = f.window;
    if (g.window) w = w ? w->unite(*g.window) : g.window;
    if (!w) return true;
    return absorb(f, *w).matrix == absorb(g, *w).matrix;
}

bool is_scalar_multiple(const StructuredOperator& f, const StructuredOperator& g) {
    require(f.schema == g.schema, "comparing operators on different schemas");
    if (f.tail_shift != g.tail_shift) return false;
    std::optional<IndexInterval> w = f.window;
    if (g.window) w = w ? w->unite(*g.window) : g.window;
    if (!w) return true;
    // Widen once more so a genuine scalar also scales the tail columns.
    IndexInterval ww = w->extend(f.schema.index_schema, 1);
    DenseMatrix a = absorb(f, ww).matrix;
    DenseMatrix b = absorb(g, ww).matrix;
    Rational ratio = 0;
    for (std::size_t r = 0; r < a.rows() && ratio == 0; ++r)
        for (std::size_t c = 0; c < a.cols() && ratio == 0; ++c)
            if (b.at(r, c) != 0) ratio = a.at(r, c) / b.at(r, c);
    if (ratio == 0) return a.is_zero() && b.is_zero();
    return a == b * ratio;
}

namespace {

// Window guaranteeing that every tail entry crossing the cut lies inside.
IndexInterval splitting_window(const StructuredOperator& f, CutId cut) {
    const IndexSchema& ord = f.schema.index_schema;
    long m = (f.tail_shift < 0 ? -f.tail_shift : f.tail_shift) + 1;
    IndexInterval around = IndexInterval{cut.after, cut.after}.extend(ord, m);
    return f.window ? f.window->unite(around) : around;
}

} // namespace

CutSplitting splitting_at_cut(const StructuredOperator& f, CutId cut) {
    require(f.schema.index_schema.valid(cut.after), "cut at an invalid index");
    StructuredOperator a = absorb(f, splitting_window(f, cut));
    auto in_idx = a.window->indices(a.schema.index_schema);
    auto out_idx = output_window(a)->indices(a.schema.index_schema);
    std::size_t li = static_cast<std::size_t>(lower_size_in_window(a.schema, cut, in_idx));
    std::size_t lo = static_cast<std::size_t>(lower_size_in_window(a.schema, cut, out_idx));
    std::size_t n = in_idx.size();
    return CutSplitting{cut,
                        f.tail_shift,
                        static_cast<long>(li),
                        static_cast<long>(lo),
                        a.matrix.block(0, lo, 0, li),
                        a.matrix.block(0, lo, li, n),
                        a.matrix.block(lo, n, 0, li),
                        a.matrix.block(lo, n, li, n)};
}

long degree_at_cut(const StructuredOperator& f, CutId cut) {
    long rc = static_cast<long>(rank(splitting_at_cut(f, cut).c));
    long rcp = static_cast<long>(rank(splitting_at_cut(invert_op(f), cut).c));
    return rc - rcp;
}

DegreeReport degree_report(const StructuredOperator& f) {
    DegreeReport rep;
    rep.uniform_tail_degree = f.tail_shift;
    IndexInterval w = f.window ? *f.window
                               : IndexInterval{-1, 1}; // any seed; far cuts are uniform
    w = normalize_interval(f.schema.index_schema, w.lo, w.hi);
    for (CutId c : report_cuts(f.schema, w)) rep.per_cut.emplace_back(c, degree_at_cut(f, c));
    return rep;
}

bool is_eventually_identity(const StructuredOperator& f) { return f.tail_shift == 0; }

bool is_w_aligned(const StructuredOperator& f) {
    return f.tail_shift == 0 || f.schema.family == CutFamily::FiniteCuts;
}

bool is_eligible(const StructuredOperator& f) {
    // W-alignment already rules out a nonzero tail on an EveryPosition
    // family, so the far cuts left unchecked below all carry degree zero.
    if (!is_w_aligned(f)) return false;
    if (f.tail_shift == 0 && !f.window) return true;
    for (const auto& [cut, deg] : degree_report(f).per_cut)
        if (deg != 0) return false;
    return true;
}

} // namespace genflag
