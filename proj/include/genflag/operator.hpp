#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "genflag/flag_point.hpp"
#include "genflag/matrix.hpp"
#include "genflag/schema.hpp"

namespace genflag {

/// An invertible operator on the indexed basis, stored finitely: an
/// invertible matrix on a window of indices plus a uniform tail. Outside the
/// window the operator maps e_i to e_{succ^tail(i)}; the matrix sends the
/// window coordinates to the coordinates of the translated window. Columns
/// are inputs, rows are outputs, both in flag order.
///
/// This subgroup contains every operator that is the identity outside a
/// finite set, all shift powers, and their products.
struct StructuredOperator {
    FlagSchema schema;
    std::optional<IndexInterval> window; // nullopt: pure tail, 0x0 matrix
    long tail_shift = 0;
    DenseMatrix matrix;
};

StructuredOperator identity_op(const FlagSchema& s);

/// The k-fold shift e_i -> e_{succ^k(i)}; requires a translation-invariant
/// index order.
StructuredOperator shift_op(const FlagSchema& s, long k);

/// Validates and builds an operator; throws bad_input on a singular matrix,
/// a tail on a non-translation order, or a shape mismatch.
StructuredOperator make_operator(const FlagSchema& s, const IndexInterval& window,
                                 long tail_shift, DenseMatrix matrix);

std::optional<IndexInterval> output_window(const StructuredOperator& f);

/// Semantically the identity: same operator on a larger window, with the
/// absorbed tail columns written as shifted unit columns.
StructuredOperator absorb(const StructuredOperator& f, const IndexInterval& new_window);

StructuredOperator compose(const StructuredOperator& f, const StructuredOperator& g);
StructuredOperator invert_op(const StructuredOperator& f);

/// The dual operator restricted to the span of the dual basis, expressed in
/// dual coordinates over the same index set: the matrix transposes with the
/// window roles exchanged and the tail negates. Satisfies
/// <bar_op(f)(y), x> = <y, f(x)> for the pairing <e_i*, e_j> = delta_ij.
StructuredOperator bar_op(const StructuredOperator& f);

/// Finitely supported vector in basis (or dual basis) coordinates.
using SparseVec = std::map<long, Rational>;
SparseVec apply_to_vector(const StructuredOperator& f, const SparseVec& x);

bool op_equal(const StructuredOperator& f, const StructuredOperator& g);

/// Projective equality: one is a nonzero rational multiple of the other.
bool is_scalar_multiple(const StructuredOperator& f, const StructuredOperator& g);

/// Blocks of the operator at one cut. C collects the entries with output
/// above the cut and input below it and is complete (the window is grown
/// until no tail entry crosses the cut outside it); A, B, D are the window
/// fragments of the other three blocks, tail metadata aside.
struct CutSplitting {
    CutId cut;
    long tail_shift = 0;
    long lower_in = 0;  // window inputs below the cut
    long lower_out = 0; // window outputs below the cut
    DenseMatrix a, b, c, d;
};

CutSplitting splitting_at_cut(const StructuredOperator& f, CutId cut);

/// rk C - rk C' at the cut, where C' is the crossing block of the inverse.
long degree_at_cut(const StructuredOperator& f, CutId cut);

/// Degrees at the explicitly tracked cuts plus the analytic value at every
/// far cut (the tail crosses each far cut |tail| times with full rank).
struct DegreeReport {
    std::vector<std::pair<CutId, long>> per_cut;
    long uniform_tail_degree = 0;
};

DegreeReport degree_report(const StructuredOperator& f);

/// Identity on all but finitely many basis vectors.
bool is_eventually_identity(const StructuredOperator& f);

/// Finitely many entries below the block diagonal, for the operator and its
/// inverse: a nonzero tail crosses every far cut of an EveryPosition family.
bool is_w_aligned(const StructuredOperator& f);

/// W-aligned with degree zero at every cut.
bool is_eligible(const StructuredOperator& f);

/// Whether act(f, p) = p (implemented with the flag action).
bool in_stabilizer(const StructuredOperator& f, const FlagPoint& p);

} // namespace genflag
