#pragma once

#include "genflag/flag_point.hpp"
#include "genflag/operator.hpp"

namespace genflag {

/// The flag action: per cut, the point's subspace is sent through
/// annihilate -> apply the dual of the inverse -> annihilate, over a window
/// grown so the tail is block-respecting outside it. Offsets shift by the
/// operator's degree at each cut.
///
/// Total for every representable operator. At the far cuts of an
/// EveryPosition family a nonzero tail moves the flag at infinitely many
/// cuts; the result then records the per-cut data on the window and keeps
/// the declared reference tail.
FlagPoint act(const StructuredOperator& f, const FlagPoint& p);

/// Direct-image form: each chain subspace replaced by its image under the
/// window matrix. Requires an eventually-identity operator; serves as the
/// independent oracle for act.
FlagPoint act_direct(const StructuredOperator& f, const FlagPoint& p);

/// The duality involution on a symmetric schema: the flag of annihilators,
/// re-identified with the primal space through the schema's fixed
/// order-reversing index bijection.
FlagPoint duality_map(const FlagPoint& p);

} // namespace genflag
