#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genflag/isotropic.hpp"
#include "genflag/scenario.hpp"
#include "genflag/verify.hpp"

using namespace genflag;

namespace {

FlagPoint sato_line(const DenseMatrix& gens) {
    const FlagSchema& s = get_scenario("sato").schema;
    FlagPoint p{s, {-1, 1}, {{1, Subspace::span(2, gens)}}};
    validate_point(p);
    return p;
}

} // namespace

TEST_CASE("pairing conventions") {
    FormSchema orth{FormKind::OrthogonalSatoSplit};
    CHECK(orth.pairing(1, -1) == 1);
    CHECK(orth.pairing(-1, 1) == 1);
    CHECK(orth.pairing(1, 2) == 0);
    FormSchema symp{FormKind::SymplecticSatoSplit};
    CHECK(symp.pairing(1, -1) == 1);
    CHECK(symp.pairing(-1, 1) == -1);
    FormSchema all{FormKind::OrthogonalAllInts};
    CHECK(all.pairing(0, 0) == 1);
    CHECK(all.pairing(2, -2) == 1);

    GramWindow gw = make_gram(orth, {-2, 2});
    CHECK(gw.gram == DenseMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    GramWindow sw = make_gram(symp, {-1, 1});
    CHECK(sw.gram == DenseMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("isotropic flags") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FormSchema orth{FormKind::OrthogonalSatoSplit};
    FormSchema symp{FormKind::SymplecticSatoSplit};

    CHECK(is_isotropic_flag(reference_point(sato, {-2, 2}), orth));
    CHECK(is_isotropic_flag(reference_point(sato, {-2, 2}), symp));

    // span{e_{-1} + e_1}: (v, v) = 2 under the symmetric form, 0 under the
    // alternating one.
    CHECK(!is_isotropic_flag(sato_line(DenseMatrix{{1, 1}}), orth));
    CHECK(is_isotropic_flag(sato_line(DenseMatrix{{1, 1}}), symp));

    const FlagSchema& ex2_3 = get_scenario("ex2_3").schema;
    CHECK(is_isotropic_flag(reference_point(ex2_3, {-2, 2}), FormSchema{FormKind::OrthogonalAllInts}));

    CHECK_THROWS_AS(is_isotropic_flag(reference_point(ex2_3, {-2, 2}), orth), bad_input);
}

TEST_CASE("isotropic flags on a perpendicular-closed two-cut schema") {
    // Cuts {-2, 1}: the annihilator of each flag space is the other one.
    FlagSchema s = finite_cuts_schema(IndexKind::SatoSplit, {-2, 1});
    FormSchema orth{FormKind::OrthogonalSatoSplit};
    CHECK(is_isotropic_flag(reference_point(s, {-2, 2}), orth));

    // Cuts {-2, 2} are not closed under perpendicularity.
    FlagSchema open_s = finite_cuts_schema(IndexKind::SatoSplit, {-2, 2});
    CHECK(!is_isotropic_flag(reference_point(open_s, {-2, 2}), orth));

    // A form-preserving image of the reference stays isotropic.
    auto rng = trial_rng(7, 2, 0);
    StructuredOperator g = random_form_preserving(orth, s, rng, 3);
    FlagPoint moved = act_direct(g, reference_point(s, g.window->extend(s.index_schema, 1)));
    CHECK(is_isotropic_flag(moved, orth));
}

TEST_CASE("preserves_form fixed cases") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FormSchema orth{FormKind::OrthogonalSatoSplit};

    CHECK(preserves_form(identity_op(sato), orth));
    StructuredOperator swap =
        make_operator(sato, {-1, 1}, 0, DenseMatrix{{0, 1}, {1, 0}});
    CHECK(preserves_form(swap, orth));
    StructuredOperator stretch =
        make_operator(sato, {-1, 1}, 0, DenseMatrix{{2, 0}, {0, 1}});
    CHECK(!preserves_form(stretch, orth));
    CHECK_THROWS_AS(preserves_form(shift_op(sato, 1), orth), bad_input);
}

TEST_CASE("reflection_condition fixed cases") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FormSchema orth{FormKind::OrthogonalSatoSplit};

    CHECK(reflection_condition(identity_op(sato), orth));
    StructuredOperator swap =
        make_operator(sato, {-1, 1}, 0, DenseMatrix{{0, 1}, {1, 0}});
    CHECK(reflection_condition(swap, orth));
    StructuredOperator upper =
        make_operator(sato, {-1, 1}, 0, DenseMatrix{{1, 1}, {0, 1}});
    CHECK(!reflection_condition(upper, orth));
    CHECK(!preserves_form(upper, orth));

    // Symplectic: every unit-determinant window matrix on one dual pair.
    FormSchema symp{FormKind::SymplecticSatoSplit};
    StructuredOperator sl2 = make_operator(sato, {-1, 1}, 0, DenseMatrix{{2, 1}, {1, 1}});
    CHECK(preserves_form(sl2, symp));
    CHECK(reflection_condition(sl2, symp));
    StructuredOperator gl2 = make_operator(sato, {-1, 1}, 0, DenseMatrix{{2, 1}, {1, 2}});
    CHECK(!preserves_form(gl2, symp));
    CHECK(!reflection_condition(gl2, symp));
}

TEST_CASE("isotropic property suite") {
    SuiteReport rep = run_suite("isotropic-equivalence", 31, 60);
    for (const auto& r : rep.results) {
        INFO(r.property, " ", r.counterexample.dump());
        CHECK(r.pass);
    }
}
