#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genflag/errors.hpp"

namespace genflag {

/// The four orderings of the basis index set. Indices are nonzero integers
/// except for AllInts, where 0 is a valid index.
///
///   PositiveInts  1 < 2 < 3 < ...
///   AllInts       ... < -1 < 0 < 1 < ...
///   SatoSplit     ... < -2 < -1 < 1 < 2 < ...   (every negative below every positive)
///   PosThenNeg    1 < 2 < ... < ... < -2 < -1   (every positive below every negative)
enum class IndexKind { PositiveInts, AllInts, SatoSplit, PosThenNeg };

std::string kind_name(IndexKind k);
IndexKind kind_from_name(const std::string& name);

/// An index ordering, possibly with the order reversed (the reversed form
/// arises only as the dual of a non-self-reverse ordering).
struct IndexSchema {
    IndexKind kind = IndexKind::SatoSplit;
    bool reversed = false;

    /// Whether the pairing i <-> -i is meaningful (isotropic forms).
    bool paired() const {
        return !reversed && (kind == IndexKind::AllInts || kind == IndexKind::SatoSplit);
    }

    /// Whether i -> succ(i) is a bijection of the whole index set, so that
    /// uniform tail shifts make sense.
    bool has_translation() const {
        return kind == IndexKind::AllInts || kind == IndexKind::SatoSplit;
    }

    /// Whether the reversed order is isomorphic to the order itself.
    bool self_reverse() const { return kind != IndexKind::PositiveInts; }

    bool valid(long i) const;
    bool less(long i, long j) const;
    bool less_eq(long i, long j) const { return i == j || less(i, j); }

    std::optional<long> succ(long i) const;
    std::optional<long> pred(long i) const;

    /// n-fold successor (predecessor for n < 0); nullopt if it walks off.
    std::optional<long> succ_n(long i, long n) const;

    /// Signed number of successor steps from i to j, when finite.
    std::optional<long> step_distance(long i, long j) const;

    std::optional<long> min_index() const;
    std::optional<long> max_index() const;

    bool operator==(const IndexSchema&) const = default;
};

/// A finite window of indices, encoded by inclusive integer bounds lo <= hi.
/// The window is the set of valid indices in [lo, hi]. For PosThenNeg a
/// two-sided window {1..hi} u {lo..-1} is the union of a low-end and a
/// high-end piece of the order; for the other kinds it is an order interval.
struct IndexInterval {
    long lo = 0;
    long hi = 0;

    bool operator==(const IndexInterval&) const = default;

    bool contains(const IndexSchema& s, long i) const {
        return s.valid(i) && lo <= i && i <= hi;
    }
    bool covers(const IndexInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    IndexInterval unite(const IndexInterval& o) const {
        return {lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi};
    }

    /// Indices of the window in flag order.
    std::vector<long> indices(const IndexSchema& s) const;
    std::size_t size(const IndexSchema& s) const { return indices(s).size(); }

    /// Grows the window by m index steps on each natural end (clamped at the
    /// extreme indices of the order).
    IndexInterval extend(const IndexSchema& s, long m) const;

    /// Image window under i -> succ^d(i); requires a translation-invariant
    /// ordering when d != 0.
    IndexInterval translate(const IndexSchema& s, long d) const;
};

/// Clamps bounds to valid indices (skips 0, clamps below PositiveInts' 1).
IndexInterval normalize_interval(const IndexSchema& s, long lo, long hi);

/// Position of index i within the flag-ordered window list; throws if absent.
std::size_t window_position(const std::vector<long>& window_indices, long i);

} // namespace genflag
