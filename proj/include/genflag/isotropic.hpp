#pragma once

#include <string>

#include "genflag/action.hpp"
#include "genflag/flag_point.hpp"
#include "genflag/operator.hpp"

namespace genflag {

/// The bilinear pairings on the paired index orders. Sign convention:
/// (e_i, e_{-i}) = 1 for i > 0; (e_{-i}, e_i) is +1 in the orthogonal case
/// and -1 in the symplectic case; on AllInts additionally (e_0, e_0) = 1.
enum class FormKind { OrthogonalAllInts, OrthogonalSatoSplit, SymplecticSatoSplit };

std::string form_name(FormKind k);
FormKind form_from_name(const std::string& name);

struct FormSchema {
    FormKind kind = FormKind::OrthogonalSatoSplit;

    bool symplectic() const { return kind == FormKind::SymplecticSatoSplit; }
    IndexKind index_kind() const {
        return kind == FormKind::OrthogonalAllInts ? IndexKind::AllInts : IndexKind::SatoSplit;
    }
    Rational pairing(long i, long j) const;

    bool operator==(const FormSchema&) const = default;
};

/// The form restricted to a pairing-closed window, as an exact Gram matrix
/// over the flag-ordered window coordinates.
struct GramWindow {
    IndexInterval window;
    DenseMatrix gram;
};

/// Smallest pairing-closed window containing w.
IndexInterval pairing_closure(const IndexSchema& ord, const IndexInterval& w);

GramWindow make_gram(const FormSchema& form, const IndexInterval& window);

/// Every chain space isotropic or coisotropic, and the chain closed under
/// perpendicularity within the window model.
bool is_isotropic_flag(const FlagPoint& p, const FormSchema& form);

/// M^T G M = G on a pairing-closed absorbed window. Shifts never preserve
/// the pairing, so a nonzero tail is rejected.
bool preserves_form(const StructuredOperator& f, const FormSchema& form);

/// Antidiagonal-reflection criterion: the reflected window matrix equals
/// the inverse (orthogonal), or the inverse conjugated by the sign diagonal
/// of the pairing (symplectic).
bool reflection_condition(const StructuredOperator& f, const FormSchema& form);

} // namespace genflag
