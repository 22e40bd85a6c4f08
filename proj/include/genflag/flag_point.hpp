#pragma once

#include <utility>
#include <vector>

#include "genflag/schema.hpp"
#include "genflag/subspace.hpp"

namespace genflag {

/// A generalized flag commensurable with the reference flag, described
/// finitely: outside the window it agrees with the reference flag by
/// declaration, inside the window it is a nested chain of subspaces of the
/// window coordinate space, one per trace (cut splitting the window).
///
/// The subspace at the trace with prefix l has dim = l + offset; nonzero
/// offsets occur for points of shifted components (single-cut SatoSplit).
struct FlagPoint {
    FlagSchema schema;
    IndexInterval window;
    std::vector<std::pair<long, Subspace>> chain; // (prefix, subspace), sorted by prefix

    bool operator==(const FlagPoint&) const = default;
};

/// The reference flag itself, restricted to the window: coordinate prefixes.
FlagPoint reference_point(const FlagSchema& s, const IndexInterval& window);

void validate_point(const FlagPoint& p);

/// Same flag on a larger window: each chain subspace gains the coordinate
/// vectors of the reference indices that entered its lower set.
FlagPoint enlarge_window(const FlagPoint& p, const IndexInterval& new_window);

/// Exact equality as infinite flags (windows aligned first).
bool point_equal(const FlagPoint& p, const FlagPoint& q);

/// Equal chain dimensions at every cut over a common window; equivalently,
/// equal offsets everywhere.
bool is_commensurable(const FlagPoint& p, const FlagPoint& q);

/// Per-cut offsets (dim minus reference dim); all zeros exactly when the
/// point lies in the reference component. In the single-cut case the one
/// entry identifies the component X(k).
std::vector<std::pair<CutId, long>> relative_position(const FlagPoint& p);

/// Chain subspace at the cut with the given window prefix; prefix 0 and
/// full-window prefixes resolve to the zero and full subspace.
Subspace chain_at_prefix(const FlagPoint& p, long prefix);

} // namespace genflag
