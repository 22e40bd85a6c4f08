#include "genflag/flag_point.hpp"

#include <algorithm>

namespace genflag {

FlagPoint reference_point(const FlagSchema& s, const IndexInterval& window) {
    require_valid(s);
    auto idx = window.indices(s.index_schema);
    require(!idx.empty(), "reference point needs a nonempty window");
    FlagPoint p{s, window, {}};
    for (const auto& t : window_traces(s, window)) {
        std::vector<std::size_t> axes(t.prefix);
        for (long i = 0; i < t.prefix; ++i) axes[i] = static_cast<std::size_t>(i);
        p.chain.emplace_back(t.prefix, Subspace::coordinate(idx.size(), axes));
    }
    return p;
}

void validate_point(const FlagPoint& p) {
    require_valid(p.schema);
    auto idx = p.window.indices(p.schema.index_schema);
    require(!idx.empty(), "point has an empty window");
    auto traces = window_traces(p.schema, p.window);
    require(p.chain.size() == traces.size(), "chain length does not match the window's cuts");
    const Subspace* prev = nullptr;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto& [prefix, sub] = p.chain[i];
        require(prefix == traces[i].prefix, "chain prefix does not match a cut of the window");
        require(sub.ambient_dim() == idx.size(), "chain subspace has wrong ambient dimension");
        if (prev) require(sub.contains(*prev), "chain subspaces are not nested");
        prev = &sub;
    }
}

Subspace chain_at_prefix(const FlagPoint& p, long prefix) {
    std::size_t n = p.window.size(p.schema.index_schema);
    if (prefix <= 0) return Subspace(n);
    if (prefix >= static_cast<long>(n)) return Subspace::full(n);
    for (const auto& [l, sub] : p.chain)
        if (l == prefix) return sub;
    throw invariant_error("no chain entry at prefix " + std::to_string(prefix));
}

FlagPoint enlarge_window(const FlagPoint& p, const IndexInterval& new_window) {
    require(new_window.covers(p.window), "enlarge_window: new window must contain the old one");
    if (new_window == p.window) return p;
    const IndexSchema& ord = p.schema.index_schema;
    auto old_idx = p.window.indices(ord);
    auto new_idx = new_window.indices(ord);

    std::vector<std::size_t> old_pos(old_idx.size());
    for (std::size_t i = 0; i < old_idx.size(); ++i)
        old_pos[i] = window_position(new_idx, old_idx[i]);

    FlagPoint q{p.schema, new_window, {}};
    for (const auto& t : window_traces(p.schema, new_window)) {
        long old_prefix = lower_size_in_window(p.schema, t.cut, old_idx);
        Subspace old_sub = chain_at_prefix(p, old_prefix);

        // Embed the old window subspace and adjoin the reference vectors of
        // the new indices below the cut.
        DenseMatrix gen(old_sub.dim(), new_idx.size());
        for (std::size_t r = 0; r < old_sub.dim(); ++r)
            for (std::size_t c = 0; c < old_idx.size(); ++c)
                gen.at(r, old_pos[c]) = old_sub.basis().at(r, c);
        std::vector<std::size_t> axes;
        for (std::size_t j = 0; j < new_idx.size(); ++j) {
            if (!ord.less_eq(new_idx[j], t.cut.after)) continue;
            bool in_old = std::find(old_idx.begin(), old_idx.end(), new_idx[j]) != old_idx.end();
            if (!in_old) axes.push_back(j);
        }
        DenseMatrix fresh(axes.size(), new_idx.size());
        for (std::size_t r = 0; r < axes.size(); ++r) fresh.at(r, axes[r]) = 1;
        q.chain.emplace_back(t.prefix, Subspace::span(new_idx.size(), stack_rows(gen, fresh)));
    }
    return q;
}

bool point_equal(const FlagPoint& p, const FlagPoint& q) {
    require(p.schema == q.schema, "points on different schemas");
    IndexInterval w = p.window.unite(q.window);
    FlagPoint a = enlarge_window(p, w);
    FlagPoint b = enlarge_window(q, w);
    return a.chain == b.chain;
}

bool is_commensurable(const FlagPoint& p, const FlagPoint& q) {
    require(p.schema == q.schema, "points on different schemas");
    IndexInterval w = p.window.unite(q.window);
    FlagPoint a = enlarge_window(p, w);
    FlagPoint b = enlarge_window(q, w);
    for (std::size_t i = 0; i < a.chain.size(); ++i)
        if (a.chain[i].second.dim() != b.chain[i].second.dim()) return false;
    return true;
}

std::vector<std::pair<CutId, long>> relative_position(const FlagPoint& p) {
    std::vector<std::pair<CutId, long>> out;
    auto traces = window_traces(p.schema, p.window);
    for (std::size_t i = 0; i < traces.size(); ++i)
        out.emplace_back(traces[i].cut,
                         static_cast<long>(p.chain[i].second.dim()) - traces[i].prefix);
    return out;
}

} // namespace genflag
