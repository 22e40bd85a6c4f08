#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genflag/operator.hpp"
#include "genflag/scenario.hpp"
#include "genflag/verify.hpp"

using namespace genflag;

namespace {

std::size_t nonzeros(const DenseMatrix& m) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) ++n;
    return n;
}

StructuredOperator sato_swap() {
    // e_{-1} <-> e_1, identity elsewhere.
    return make_operator(get_scenario("sato").schema, {-1, 1}, 0, DenseMatrix{{0, 1}, {1, 0}});
}

} // namespace

TEST_CASE("identity and shift basics") {
    const FlagSchema& sato = get_scenario("sato").schema;
    StructuredOperator id = identity_op(sato);
    StructuredOperator sh = shift_op(sato, 1);

    CHECK(op_equal(shift_op(sato, 0), id));
    CHECK(apply_to_vector(sh, SparseVec{{-1, 1}}) == SparseVec{{1, 1}});
    CHECK(apply_to_vector(id, SparseVec{{-1, 1}, {3, rat(1, 2)}}) ==
          SparseVec{{-1, 1}, {3, rat(1, 2)}});
    CHECK(op_equal(compose(sh, shift_op(sato, -1)), id));
    CHECK(op_equal(compose(sh, sh), shift_op(sato, 2)));
    CHECK(op_equal(invert_op(sh), shift_op(sato, -1)));
    CHECK(op_equal(invert_op(sato_swap()), sato_swap()));
    CHECK_THROWS_AS(shift_op(get_scenario("ex2_2").schema, 1), bad_input);
}

TEST_CASE("absorb writes the tail as shifted unit columns") {
    const FlagSchema& sato = get_scenario("sato").schema;
    StructuredOperator a = absorb(identity_op(sato), {-2, 2});
    CHECK(a.matrix == DenseMatrix::identity(4));

    StructuredOperator sh = absorb(shift_op(sato, 1), {-2, 2});
    REQUIRE(sh.window == IndexInterval{-2, 2});
    CHECK(output_window(sh) == IndexInterval{-1, 3});
    // Input list (-2,-1,1,2) maps to output list (-1,1,2,3) position by
    // position, so the absorbed matrix is the identity pattern.
    CHECK(sh.matrix == DenseMatrix::identity(4));

    CHECK(op_equal(absorb(sh, {-3, 3}), shift_op(sato, 1)));
    CHECK(absorb(absorb(identity_op(sato), {-1, 1}), {-2, 2}).matrix ==
          absorb(identity_op(sato), {-2, 2}).matrix);
}

TEST_CASE("compose against apply_to_vector") {
    const FlagSchema& sato = get_scenario("sato").schema;
    StructuredOperator f = make_operator(sato, {-1, 1}, 1, DenseMatrix{{1, 1}, {0, 1}});
    StructuredOperator g = sato_swap();
    StructuredOperator fg = compose(f, g);
    for (long i : {-3L, -2L, -1L, 1L, 2L}) {
        SparseVec e{{i, 1}};
        CHECK(apply_to_vector(fg, e) == apply_to_vector(f, apply_to_vector(g, e)));
    }
    CHECK(op_equal(compose(f, invert_op(f)), identity_op(sato)));
    CHECK(op_equal(compose(identity_op(sato), g), g));
}

TEST_CASE("bar operator") {
    const FlagSchema& sato = get_scenario("sato").schema;
    CHECK(op_equal(bar_op(identity_op(sato)), identity_op(sato)));
    // The dual of the shift moves dual coordinates backwards.
    CHECK(apply_to_vector(bar_op(shift_op(sato, 1)), SparseVec{{1, 1}}) == SparseVec{{-1, 1}});
    StructuredOperator f = make_operator(sato, {-1, 1}, 0, DenseMatrix{{2, 1}, {1, 1}});
    CHECK(op_equal(bar_op(bar_op(f)), f));
    CHECK(op_equal(bar_op(invert_op(f)), invert_op(bar_op(f))));
}

TEST_CASE("splitting at the sato cut") {
    const FlagSchema& sato = get_scenario("sato").schema;
    CutId cut{-1};

    CutSplitting id_split = splitting_at_cut(identity_op(sato), cut);
    CHECK(id_split.c.is_zero());

    CutSplitting sh_split = splitting_at_cut(shift_op(sato, 1), cut);
    CHECK(rank(sh_split.c) == 1);
    CHECK(nonzeros(sh_split.c) == 1);

    CutSplitting swap_split = splitting_at_cut(sato_swap(), cut);
    CHECK(rank(swap_split.c) == 1);
    CHECK(nonzeros(swap_split.c) == 1);
    CHECK(nonzeros(swap_split.b) == 1);
}

TEST_CASE("degree at the sato cut") {
    const FlagSchema& sato = get_scenario("sato").schema;
    CutId cut{-1};
    CHECK(degree_at_cut(identity_op(sato), cut) == 0);
    for (long k = -5; k <= 5; ++k) CHECK(degree_at_cut(shift_op(sato, k), cut) == k);
    CHECK(degree_at_cut(sato_swap(), cut) == 0);

    DegreeReport rep = degree_report(shift_op(sato, 1));
    REQUIRE(rep.per_cut.size() == 1);
    CHECK(rep.per_cut[0].second == 1);
    CHECK(rep.uniform_tail_degree == 1);
}

TEST_CASE("membership predicates") {
    const FlagSchema& sato = get_scenario("sato").schema;
    const FlagSchema& ex2_3 = get_scenario("ex2_3").schema;

    CHECK(is_eventually_identity(identity_op(sato)));
    CHECK(!is_eventually_identity(shift_op(sato, 1)));
    CHECK(is_eventually_identity(sato_swap()));

    CHECK(is_w_aligned(sato_swap()));
    CHECK(is_w_aligned(shift_op(sato, 1)));     // one cut, one finite crossing
    CHECK(!is_w_aligned(shift_op(ex2_3, 1)));   // crossings at every far cut
    CHECK(!is_eligible(shift_op(sato, 1)));
    CHECK(is_eligible(sato_swap()));

    StructuredOperator upper = make_operator(sato, {-1, 1}, 0, DenseMatrix{{1, 1}, {0, 1}});
    CHECK(is_eligible(upper));
}

TEST_CASE("scalar multiples") {
    const FlagSchema& sato = get_scenario("sato").schema;
    StructuredOperator f = make_operator(sato, {-1, 1}, 0, DenseMatrix{{2, 1}, {1, 1}});
    StructuredOperator g = make_operator(sato, {-1, 1}, 0, DenseMatrix{{4, 2}, {2, 2}});
    CHECK(!is_scalar_multiple(f, g)); // the identity tail does not scale
    CHECK(is_scalar_multiple(f, f));
    CHECK(!is_scalar_multiple(f, sato_swap()));
}

TEST_CASE("make_operator validation") {
    const FlagSchema& sato = get_scenario("sato").schema;
    CHECK_THROWS_AS(make_operator(sato, {-1, 1}, 0, DenseMatrix{{1, 1}, {1, 1}}), bad_input);
    CHECK_THROWS_AS(make_operator(sato, {-1, 1}, 0, DenseMatrix{{1, 0}}), bad_input);
    CHECK_THROWS_AS(make_operator(get_scenario("ex2_5").schema, {-2, 2}, 1,
                                  DenseMatrix::identity(4)),
                    bad_input);
}

TEST_CASE("operator property suites") {
    for (const char* suite :
         {"degree-additivity", "operator-representation", "eligibility-closure", "crossing-ranks"}) {
        SuiteReport rep = run_suite(suite, 7, 60);
        for (const auto& r : rep.results) {
            INFO(rep.suite, "/", r.property, " ", r.counterexample.dump());
            CHECK(r.pass);
        }
    }
}
