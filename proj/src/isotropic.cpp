#include "genflag/isotropic.hpp"

#include <algorithm>

#include "genflag/linalg.hpp"

namespace genflag {

std::string form_name(FormKind k) {
    switch (k) {
        case FormKind::OrthogonalAllInts: return "orthogonal_all_ints";
        case FormKind::OrthogonalSatoSplit: return "orthogonal_sato_split";
        case FormKind::SymplecticSatoSplit: return "symplectic_sato_split";
    }
    throw invariant_error("unknown form kind");
}

FormKind form_from_name(const std::string& name) {
    if (name == "orthogonal_all_ints") return FormKind::OrthogonalAllInts;
    if (name == "orthogonal_sato_split") return FormKind::OrthogonalSatoSplit;
    if (name == "symplectic_sato_split") return FormKind::SymplecticSatoSplit;
    throw bad_input("unknown form kind: " + name);
}

Rational FormSchema::pairing(long i, long j) const {
    if (j != -i) return 0;
    if (kind == FormKind::OrthogonalAllInts) return 1; // includes (e_0, e_0) = 1
    if (i == 0) return 0;
    if (i > 0) return 1;
    return symplectic() ? Rational(-1) : Rational(1);
}

IndexInterval pairing_closure(const IndexSchema& ord, const IndexInterval& w) {
    long m = std::max({w.hi, -w.lo, 1L});
    return normalize_interval(ord, -m, m);
}

namespace {

void check_form_matches(const FormSchema& form, const FlagSchema& s) {
    require(!s.index_schema.reversed && s.index_schema.kind == form.index_kind() &&
                s.index_schema.paired(),
            "form kind does not match the schema's index order");
}

} // namespace

GramWindow make_gram(const FormSchema& form, const IndexInterval& window) {
    IndexSchema ord{form.index_kind(), false};
    IndexInterval w = pairing_closure(ord, window);
    auto idx = w.indices(ord);
    DenseMatrix g(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) g.at(r, c) = form.pairing(idx[r], idx[c]);
    return GramWindow{w, std::move(g)};
}

namespace {

// { v : v^T G b = 0 for all rows b of s }.
Subspace perp_in_window(const Subspace& s, const DenseMatrix& gram) {
    if (s.dim() == 0) return Subspace::full(s.ambient_dim());
    return Subspace::span(s.ambient_dim(), kernel(s.basis() * gram));
}

} // namespace

bool is_isotropic_flag(const FlagPoint& p, const FormSchema& form) {
    check_form_matches(form, p.schema);
    const IndexSchema& ord = p.schema.index_schema;

    // Pairing-closed window with every finite cut in reach.
    IndexInterval w = p.window;
    if (p.schema.family == CutFamily::FiniteCuts)
        for (long c : p.schema.cuts) w = w.unite(IndexInterval{c, c}.extend(ord, 1));
    w = pairing_closure(ord, w);
    FlagPoint pa = enlarge_window(p, w);
    GramWindow gw = make_gram(form, w);
    auto idx = w.indices(ord);

    MirrorMap form_mirror{ord, 0}; // perp of lower(c) is spanned by {e_j : j < -c}
    for (const auto& t : window_traces(p.schema, w)) {
        Subspace c = chain_at_prefix(pa, t.prefix);
        Subspace perp = perp_in_window(c, gw.gram);
        bool iso = perp.contains(c);
        bool coiso = c.contains(perp);
        if (!iso && !coiso) return false;

        CutId partner = form_mirror.mirror_cut(t.cut);
        if (p.schema.family == CutFamily::FiniteCuts &&
            std::find(p.schema.cuts.begin(), p.schema.cuts.end(), partner.after) ==
                p.schema.cuts.end())
            return false;
        long lp = lower_size_in_window(p.schema, partner, idx);
        if (chain_at_prefix(pa, lp) != perp) return false;
    }
    return true;
}

namespace {

// Absorbed window matrix over a pairing-closed window, plus its Gram.
std::pair<DenseMatrix, GramWindow> closed_window_matrix(const StructuredOperator& f,
                                                        const FormSchema& form) {
    check_form_matches(form, f.schema);
    require(f.tail_shift == 0, "a nonzero tail cannot preserve the pairing");
    const IndexSchema& ord = f.schema.index_schema;
    IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
    w = pairing_closure(ord, w);
    return {absorb(f, w).matrix, make_gram(form, w)};
}

} // namespace

bool preserves_form(const StructuredOperator& f, const FormSchema& form) {
    auto [m, gw] = closed_window_matrix(f, form);
    return m.transpose() * gw.gram * m == gw.gram;
}

bool reflection_condition(const StructuredOperator& f, const FormSchema& form) {
    auto [m, gw] = closed_window_matrix(f, form);
    std::size_t n = m.rows();
    auto inv = invert(m);
    ensure(inv.has_value(), "operator matrix is singular");

    DenseMatrix reflected(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) reflected.at(r, c) = m.at(n - 1 - c, n - 1 - r);

    if (!form.symplectic()) return reflected == *inv;

    // The symplectic "-" resolves to conjugation by the sign diagonal of the
    // pairing: entries of the inverse flip sign exactly on the off blocks.
    auto idx = gw.window.indices(IndexSchema{form.index_kind(), false});
    DenseMatrix adjusted = *inv;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if ((idx[r] < 0) != (idx[c] < 0)) adjusted.at(r, c) = -adjusted.at(r, c);
    return reflected == adjusted;
}

} // namespace genflag
