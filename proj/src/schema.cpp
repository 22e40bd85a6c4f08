#include "genflag/schema.hpp"

#include <algorithm>

namespace genflag {

FlagSchema finite_cuts_schema(IndexKind kind, std::vector<long> cuts) {
    FlagSchema s{IndexSchema{kind, false}, CutFamily::FiniteCuts, std::move(cuts)};
    require_valid(s);
    return s;
}

FlagSchema every_position_schema(IndexKind kind) {
    FlagSchema s{IndexSchema{kind, false}, CutFamily::EveryPosition, {}};
    require_valid(s);
    return s;
}

std::optional<std::string> validate_schema(const FlagSchema& s) {
    const IndexSchema& ord = s.index_schema;
    if (s.family == CutFamily::EveryPosition) {
        if (!s.cuts.empty()) return "EveryPosition family carries no explicit cut list";
        return std::nullopt;
    }
    if (s.cuts.empty()) return "finite cut family needs at least one cut";
    auto max = ord.max_index();
    for (long c : s.cuts) {
        if (!ord.valid(c)) return "cut position is not a valid index: " + std::to_string(c);
        if (max && c == *max) return "cut above the maximal index has no upper block";
    }
    for (std::size_t i = 0; i + 1 < s.cuts.size(); ++i) {
        if (s.cuts[i] == s.cuts[i + 1])
            return "duplicate cut position: " + std::to_string(s.cuts[i]);
        if (!ord.less(s.cuts[i], s.cuts[i + 1]))
            return "cut positions not increasing in the index order";
    }
    return std::nullopt;
}

void require_valid(const FlagSchema& s) {
    if (auto err = validate_schema(s)) throw bad_input("invalid schema: " + *err);
}

namespace {

// Block sizes of a finite cut family, bottom to top; nullopt = infinite.
std::vector<std::optional<long>> block_sizes(const FlagSchema& s) {
    const IndexSchema& ord = s.index_schema;
    std::vector<std::optional<long>> sizes;
    auto min = ord.min_index();
    if (min) {
        auto d = ord.step_distance(*min, s.cuts.front());
        sizes.push_back(d ? std::optional<long>(*d + 1) : std::nullopt);
    } else {
        sizes.push_back(std::nullopt);
    }
    for (std::size_t i = 0; i + 1 < s.cuts.size(); ++i)
        sizes.push_back(ord.step_distance(s.cuts[i], s.cuts[i + 1]));
    auto max = ord.max_index();
    if (max) {
        auto d = ord.step_distance(s.cuts.back(), *max);
        sizes.push_back(d ? std::optional<long>(*d) : std::nullopt);
    } else {
        sizes.push_back(std::nullopt);
    }
    return sizes;
}

} // namespace

bool is_symmetric(const FlagSchema& s) {
    require_valid(s);
    if (s.family == CutFamily::EveryPosition) return s.index_schema.self_reverse();
    auto sizes = block_sizes(s);
    for (std::size_t i = 0, j = sizes.size() - 1; i < j; ++i, --j)
        if (sizes[i] != sizes[j]) return false;
    return true;
}

FlagSchema shifted_schema(const FlagSchema& s, long k) {
    require_valid(s);
    require(s.family == CutFamily::FiniteCuts && s.cuts.size() == 1 &&
                s.index_schema.kind == IndexKind::SatoSplit && !s.index_schema.reversed,
            "shifted schemas exist only for single-cut SatoSplit families");
    auto moved = s.index_schema.succ_n(s.cuts.front(), k);
    ensure(moved.has_value(), "shifted cut fell off the index line");
    return FlagSchema{s.index_schema, CutFamily::FiniteCuts, {*moved}};
}

FlagSchema dual_schema(const FlagSchema& s) {
    require_valid(s);
    const IndexSchema& ord = s.index_schema;
    if (s.family == CutFamily::EveryPosition) {
        IndexSchema dual_ord = ord.self_reverse() ? IndexSchema{ord.kind, false}
                                                  : IndexSchema{ord.kind, !ord.reversed};
        return FlagSchema{dual_ord, CutFamily::EveryPosition, {}};
    }
    FlagSchema d;
    if (ord.self_reverse()) {
        // Re-identify the reversed order with itself via i -> -i: the
        // annihilator of lower(c) becomes the lower set of -succ(c).
        d.index_schema = IndexSchema{ord.kind, false};
        for (long c : s.cuts) {
            auto sc = ord.succ(c);
            ensure(sc.has_value(), "cut has no successor");
            d.cuts.push_back(-*sc);
        }
    } else {
        // PositiveInts has no order reversal; keep a reversed marker.
        d.index_schema = IndexSchema{ord.kind, !ord.reversed};
        for (long c : s.cuts) d.cuts.push_back(ord.reversed ? c - 1 : c + 1);
    }
    d.family = CutFamily::FiniteCuts;
    std::sort(d.cuts.begin(), d.cuts.end(),
              [&](long a, long b) { return d.index_schema.less(a, b); });
    require_valid(d);
    return d;
}

long lower_size_in_window(const FlagSchema& s, CutId cut, const std::vector<long>& window_indices) {
    long n = 0;
    for (long i : window_indices) {
        if (s.index_schema.less_eq(i, cut.after)) ++n;
        else break;
    }
    return n;
}

std::vector<TraceCut> window_traces(const FlagSchema& s, const IndexInterval& window) {
    require_valid(s);
    auto idx = window.indices(s.index_schema);
    long n = static_cast<long>(idx.size());
    std::vector<TraceCut> traces;
    if (s.family == CutFamily::EveryPosition) {
        for (long l = 1; l < n; ++l) traces.push_back({l, CutId{idx[l - 1]}});
        return traces;
    }
    for (long c : s.cuts) {
        long l = lower_size_in_window(s, CutId{c}, idx);
        if (l <= 0 || l >= n) continue;
        if (!traces.empty() && traces.back().prefix == l) continue;
        traces.push_back({l, CutId{c}});
    }
    return traces;
}

std::vector<CutId> report_cuts(const FlagSchema& s, const IndexInterval& window) {
    if (s.family == CutFamily::FiniteCuts) {
        std::vector<CutId> out;
        for (long c : s.cuts) out.push_back(CutId{c});
        return out;
    }
    std::vector<CutId> out;
    for (const auto& t : window_traces(s, window)) out.push_back(t.cut);
    return out;
}

TypeVector truncate_type(const FlagSchema& s, const IndexInterval& window) {
    TypeVector t;
    for (const auto& tc : window_traces(s, window)) t.dims.push_back(tc.prefix);
    return t;
}

long MirrorMap::apply(long i) const {
    auto r = order.succ_n(-i, offset);
    ensure(r.has_value(), "mirror image fell off the index line");
    return *r;
}

CutId MirrorMap::mirror_cut(CutId c) const {
    auto sc = order.succ(c.after);
    ensure(sc.has_value(), "cut has no successor");
    return CutId{apply(*sc)};
}

std::optional<MirrorMap> find_mirror(const FlagSchema& s) {
    require_valid(s);
    const IndexSchema& ord = s.index_schema;
    if (!ord.self_reverse() || ord.reversed) return std::nullopt;
    if (s.family == CutFamily::EveryPosition) return MirrorMap{ord, 0};

    // Fit the offset so the top cut mirrors onto the bottom cut, then check
    // the whole cut set.
    auto sc = ord.succ(s.cuts.back());
    if (!sc) return std::nullopt;
    auto t = ord.step_distance(-*sc, s.cuts.front());
    if (!t) return std::nullopt;
    // succ^t o neg is a bijection of the whole index set only for t = 0
    // when the order has an extreme element.
    if (*t != 0 && (ord.min_index() || ord.max_index())) return std::nullopt;
    MirrorMap m{ord, *t};
    std::size_t k = s.cuts.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto img = ord.succ(s.cuts[k - 1 - i]);
        if (!img) return std::nullopt;
        auto moved = ord.succ_n(-*img, m.offset);
        if (!moved || *moved != s.cuts[i]) return std::nullopt;
    }
    return m;
}

} // namespace genflag
