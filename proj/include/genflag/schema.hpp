#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genflag/index_order.hpp"

namespace genflag {

/// One cut of the reference flag: the boundary directly above index `after`.
/// The flag space at this cut is spanned by the basis vectors with index
/// less-or-equal `after`.
struct CutId {
    long after = 0;
    bool operator==(const CutId&) const = default;
};

enum class CutFamily { FiniteCuts, EveryPosition };

/// The reference generalized flag: an index ordering plus its cut structure.
/// EveryPosition places a cut above every index that has one (i.e. every
/// index except a maximal one).
struct FlagSchema {
    IndexSchema index_schema;
    CutFamily family = CutFamily::FiniteCuts;
    std::vector<long> cuts; // FiniteCuts: "after" positions, increasing in flag order

    bool operator==(const FlagSchema&) const = default;
};

FlagSchema finite_cuts_schema(IndexKind kind, std::vector<long> cuts);
FlagSchema every_position_schema(IndexKind kind);

/// nullopt when the schema is well formed, otherwise a description of the
/// first defect (invalid cut position, non-increasing cuts, empty block).
std::optional<std::string> validate_schema(const FlagSchema& s);
void require_valid(const FlagSchema& s);

/// Whether some order-reversing bijection of the index set maps the block
/// partition to itself. For finite cut families this is the palindromic
/// block-size test (infinite end blocks match only infinite end blocks);
/// for EveryPosition it is an order-reversal test on the index kind.
bool is_symmetric(const FlagSchema& s);

/// Moves the single cut of a SatoSplit grassmannian schema k steps up.
FlagSchema shifted_schema(const FlagSchema& s, long k);

/// Schema of the perpendicular chain over the order-reversed index set,
/// re-identified with an unreversed ordering whenever one exists.
FlagSchema dual_schema(const FlagSchema& s);

/// Dimension vector of the reference flag restricted to the window:
/// the distinct values |lower(cut) n window| with 0 < value < window size.
struct TypeVector {
    std::vector<long> dims;
    bool operator==(const TypeVector&) const = default;
};

TypeVector truncate_type(const FlagSchema& s, const IndexInterval& window);

/// |lower(cut) n window|, i.e. how many window indices lie below the cut.
long lower_size_in_window(const FlagSchema& s, CutId cut, const std::vector<long>& window_indices);

/// A cut that splits the window properly, keyed by the length of the prefix
/// of the flag-ordered window it cuts off. Cuts with equal prefixes carry
/// the same window data and are collapsed to one representative.
struct TraceCut {
    long prefix = 0;
    CutId cut;
};

std::vector<TraceCut> window_traces(const FlagSchema& s, const IndexInterval& window);

/// Cuts at which per-cut reports are produced: all cuts of a finite family,
/// or the cuts meeting the window of an EveryPosition family.
std::vector<CutId> report_cuts(const FlagSchema& s, const IndexInterval& window);

/// The fixed order-reversing index bijection i -> succ^offset(-i) of a
/// symmetric schema, mapping the cut set onto itself.
struct MirrorMap {
    IndexSchema order;
    long offset = 0;

    long apply(long i) const;
    CutId mirror_cut(CutId c) const;
};

std::optional<MirrorMap> find_mirror(const FlagSchema& s);

} // namespace genflag
