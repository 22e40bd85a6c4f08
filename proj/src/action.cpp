#include "genflag/action.hpp"

#include <algorithm>

#include "genflag/linalg.hpp"

namespace genflag {

namespace {

// Working window: point and operator windows, their pullbacks under the
// tail, a tail-sized margin, and a neighborhood of every finite cut.
IndexInterval action_window(const StructuredOperator& f, const FlagPoint& p) {
    const IndexSchema& ord = f.schema.index_schema;
    long d = f.tail_shift;
    IndexInterval b = p.window;
    if (f.window) b = b.unite(*f.window);
    IndexInterval r = b.unite(b.translate(ord, -d));
    r = r.extend(ord, d < 0 ? -d : d);
    if (f.schema.family == CutFamily::FiniteCuts) {
        long m = (d < 0 ? -d : d) + 1;
        for (long c : f.schema.cuts) r = r.unite(IndexInterval{c, c}.extend(ord, m));
    }
    return r;
}

} // namespace

FlagPoint act(const StructuredOperator& f, const FlagPoint& p) {
    require(f.schema == p.schema, "act: operator and point on different schemas");
    const IndexSchema& ord = f.schema.index_schema;

    IndexInterval r = action_window(f, p);
    FlagPoint pa = enlarge_window(p, r);
    StructuredOperator fa = absorb(f, r);
    auto minv = invert(fa.matrix);
    ensure(minv.has_value(), "operator matrix is singular");
    // bar(f^{-1}) in matrix form: maps dual coordinates over r to dual
    // coordinates over the translated window.
    DenseMatrix psi = minv->transpose();

    IndexInterval r_out = r.translate(ord, f.tail_shift);
    auto in_idx = r.indices(ord);

    FlagPoint out{f.schema, r_out, {}};
    for (const auto& t : window_traces(f.schema, r_out)) {
        long l_in = lower_size_in_window(f.schema, t.cut, in_idx);
        Subspace c = chain_at_prefix(pa, l_in);
        Subspace image = c.annihilator().image(psi).annihilator();
        out.chain.emplace_back(t.prefix, image);
    }
    return out;
}

FlagPoint act_direct(const StructuredOperator& f, const FlagPoint& p) {
    require(f.schema == p.schema, "act_direct: operator and point on different schemas");
    require(is_eventually_identity(f), "act_direct needs an eventually-identity operator");

    IndexInterval r = p.window;
    if (f.window) r = r.unite(*f.window);
    FlagPoint pa = enlarge_window(p, r);
    StructuredOperator fa = absorb(f, r);

    FlagPoint out{f.schema, r, {}};
    for (const auto& [prefix, sub] : pa.chain)
        out.chain.emplace_back(prefix, sub.image(fa.matrix));
    return out;
}

FlagPoint duality_map(const FlagPoint& p) {
    auto mirror = find_mirror(p.schema);
    require(mirror.has_value(), "duality_map needs a symmetric schema");
    const IndexSchema& ord = p.schema.index_schema;

    auto idx = p.window.indices(ord);
    std::vector<long> image;
    for (long i : idx) image.push_back(mirror->apply(i));
    IndexInterval w{*std::min_element(image.begin(), image.end()),
                    *std::max_element(image.begin(), image.end())};
    auto out_idx = w.indices(ord);
    ensure(out_idx.size() == idx.size(), "mirror image of the window changed size");

    // Coordinate relabeling j -> sigma(j), reversing the flag order.
    std::vector<std::size_t> pos(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) pos[j] = window_position(out_idx, image[j]);

    FlagPoint out{p.schema, w, {}};
    for (const auto& t : window_traces(p.schema, w)) {
        CutId source = mirror->mirror_cut(t.cut);
        long l_src = lower_size_in_window(p.schema, source, idx);
        Subspace y = chain_at_prefix(p, l_src).annihilator();
        DenseMatrix relabeled(y.dim(), out_idx.size());
        for (std::size_t r = 0; r < y.dim(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                relabeled.at(r, pos[c]) = y.basis().at(r, c);
        out.chain.emplace_back(t.prefix, Subspace::span(out_idx.size(), relabeled));
    }
    return out;
}

bool in_stabilizer(const StructuredOperator& f, const FlagPoint& p) {
    require(f.schema == p.schema, "in_stabilizer: operator and point on different schemas");
    return point_equal(act(f, p), p);
}

} // namespace genflag
