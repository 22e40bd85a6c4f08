#include "genflag/index_order.hpp"

#include <algorithm>

namespace genflag {

std::string kind_name(IndexKind k) {
    switch (k) {
        case IndexKind::PositiveInts: return "positive_ints";
        case IndexKind::AllInts: return "all_ints";
        case IndexKind::SatoSplit: return "sato_split";
        case IndexKind::PosThenNeg: return "pos_then_neg";
    }
    throw invariant_error("unknown index kind");
}

IndexKind kind_from_name(const std::string& name) {
    if (name == "positive_ints") return IndexKind::PositiveInts;
    if (name == "all_ints") return IndexKind::AllInts;
    if (name == "sato_split") return IndexKind::SatoSplit;
    if (name == "pos_then_neg") return IndexKind::PosThenNeg;
    throw bad_input("unknown index kind: " + name);
}

bool IndexSchema::valid(long i) const {
    switch (kind) {
        case IndexKind::PositiveInts: return i >= 1;
        case IndexKind::AllInts: return true;
        case IndexKind::SatoSplit:
        case IndexKind::PosThenNeg: return i != 0;
    }
    return false;
}

bool IndexSchema::less(long i, long j) const {
    if (reversed) return IndexSchema{kind, false}.less(j, i);
    switch (kind) {
        case IndexKind::PositiveInts:
        case IndexKind::AllInts:
        case IndexKind::SatoSplit: return i < j;
        case IndexKind::PosThenNeg:
            if (i > 0 && j < 0) return true;
            if (i < 0 && j > 0) return false;
            return i < j;
    }
    return false;
}

std::optional<long> IndexSchema::succ(long i) const {
    if (reversed) return IndexSchema{kind, false}.pred(i);
    switch (kind) {
        case IndexKind::PositiveInts:
        case IndexKind::AllInts: return i + 1;
        case IndexKind::SatoSplit: return i == -1 ? 1 : i + 1;
        case IndexKind::PosThenNeg:
            if (i == -1) return std::nullopt;
            return i + 1;
    }
    return std::nullopt;
}

std::optional<long> IndexSchema::pred(long i) const {
    if (reversed) return IndexSchema{kind, false}.succ(i);
    switch (kind) {
        case IndexKind::PositiveInts: return i == 1 ? std::nullopt : std::optional<long>(i - 1);
        case IndexKind::AllInts: return i - 1;
        case IndexKind::SatoSplit: return i == 1 ? -1 : i - 1;
        case IndexKind::PosThenNeg:
            if (i == 1) return std::nullopt;
            return i - 1;
    }
    return std::nullopt;
}

std::optional<long> IndexSchema::succ_n(long i, long n) const {
    std::optional<long> cur = i;
    for (long k = 0; k < (n < 0 ? -n : n) && cur; ++k) cur = n > 0 ? succ(*cur) : pred(*cur);
    return cur;
}

std::optional<long> IndexSchema::step_distance(long i, long j) const {
    if (reversed) {
        auto d = IndexSchema{kind, false}.step_distance(i, j);
        if (d) return -*d;
        return std::nullopt;
    }
    switch (kind) {
        case IndexKind::PositiveInts:
        case IndexKind::AllInts: return j - i;
        case IndexKind::SatoSplit: {
            long d = j - i;
            if (i < 0 && j > 0) --d;
            if (i > 0 && j < 0) ++d;
            return d;
        }
        case IndexKind::PosThenNeg:
            if ((i > 0) != (j > 0)) return std::nullopt;
            return j - i;
    }
    return std::nullopt;
}

std::optional<long> IndexSchema::min_index() const {
    if (reversed) return IndexSchema{kind, false}.max_index();
    switch (kind) {
        case IndexKind::PositiveInts:
        case IndexKind::PosThenNeg: return 1;
        default: return std::nullopt;
    }
}

std::optional<long> IndexSchema::max_index() const {
    if (reversed) return IndexSchema{kind, false}.min_index();
    switch (kind) {
        case IndexKind::PosThenNeg: return -1;
        default: return std::nullopt;
    }
}

std::vector<long> IndexInterval::indices(const IndexSchema& s) const {
    std::vector<long> out;
    if (s.kind == IndexKind::PosThenNeg) {
        for (long i = std::max(lo, 1L); i <= hi; ++i) out.push_back(i);
        for (long i = lo; i <= std::min(hi, -1L); ++i) out.push_back(i);
    } else {
        for (long i = lo; i <= hi; ++i)
            if (s.valid(i)) out.push_back(i);
    }
    if (s.reversed) std::reverse(out.begin(), out.end());
    return out;
}

IndexInterval IndexInterval::extend(const IndexSchema& s, long m) const {
    long nlo = lo, nhi = hi;
    switch (s.kind) {
        case IndexKind::PositiveInts:
            nlo = std::max(1L, lo - m);
            nhi = hi + m;
            break;
        case IndexKind::AllInts:
            nlo = lo - m;
            nhi = hi + m;
            break;
        case IndexKind::SatoSplit:
            nlo = (lo >= 1 && lo - m < 1) ? lo - m - 1 : lo - m;
            nhi = (hi <= -1 && hi + m > -1) ? hi + m + 1 : hi + m;
            break;
        case IndexKind::PosThenNeg:
            nlo = lo > 0 ? std::max(1L, lo - m) : lo - m;
            nhi = hi < 0 ? std::min(-1L, hi + m) : hi + m;
            break;
    }
    return {nlo, nhi};
}

IndexInterval IndexInterval::translate(const IndexSchema& s, long d) const {
    if (d == 0) return *this;
    require(s.has_translation(), "index order does not admit a uniform shift");
    auto nlo = s.succ_n(lo, d);
    auto nhi = s.succ_n(hi, d);
    ensure(nlo && nhi, "translate walked off the index line");
    return {std::min(*nlo, *nhi), std::max(*nlo, *nhi)};
}

IndexInterval normalize_interval(const IndexSchema& s, long lo, long hi) {
    while (lo <= hi && !s.valid(lo)) ++lo;
    while (lo <= hi && !s.valid(hi)) --hi;
    if (s.kind == IndexKind::PositiveInts) lo = std::max(lo, 1L);
    require(lo <= hi, "empty index window");
    return {lo, hi};
}

std::size_t window_position(const std::vector<long>& window_indices, long i) {
    for (std::size_t p = 0; p < window_indices.size(); ++p)
        if (window_indices[p] == i) return p;
    throw invariant_error("index not in window");
}

} // namespace genflag
