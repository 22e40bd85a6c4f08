#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genflag/action.hpp"
#include "genflag/scenario.hpp"
#include "genflag/verify.hpp"

using namespace genflag;

namespace {

StructuredOperator sato_swap() {
    return make_operator(get_scenario("sato").schema, {-1, 1}, 0, DenseMatrix{{0, 1}, {1, 0}});
}

} // namespace

TEST_CASE("identity acts trivially") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    CHECK(point_equal(act(identity_op(sato), ref), ref));
    CHECK(point_equal(act_direct(identity_op(sato), ref), ref));
}

TEST_CASE("shift moves the reference to the next component") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    FlagPoint moved = act(shift_op(sato, 1), ref);
    validate_point(moved);
    auto pos = relative_position(moved);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0].second == 1);
    CHECK(!is_commensurable(moved, ref));

    // The image chain is the next coordinate prefix: spans of e_i, i <= 1.
    auto idx = moved.window.indices(sato.index_schema);
    long prefix = moved.chain[0].first;
    std::vector<std::size_t> axes;
    for (long i = 0; i <= prefix; ++i) axes.push_back(static_cast<std::size_t>(i));
    CHECK(moved.chain[0].second == Subspace::coordinate(idx.size(), axes));

    FlagPoint back = act(shift_op(sato, -1), moved);
    CHECK(point_equal(back, ref));
    CHECK(relative_position(act(shift_op(sato, -1), ref))[0].second == -1);
}

TEST_CASE("swap replaces e_{-1} by e_1 in the reference flag") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    FlagPoint expected{sato, {-2, 2}, {{2, Subspace::span(4, DenseMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}})}}};

    FlagPoint moved = act(sato_swap(), ref);
    CHECK(point_equal(moved, expected));
    CHECK(is_commensurable(moved, ref));
    CHECK(relative_position(moved)[0].second == 0);
    CHECK(point_equal(act_direct(sato_swap(), ref), expected));
}

TEST_CASE("stabilizer membership") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    StructuredOperator upper = make_operator(sato, {-1, 1}, 0, DenseMatrix{{1, 1}, {0, 1}});
    CHECK(in_stabilizer(identity_op(sato), ref));
    CHECK(in_stabilizer(upper, ref));
    CHECK(point_equal(act_direct(upper, ref), ref));
    CHECK(!in_stabilizer(sato_swap(), ref));
    CHECK(!in_stabilizer(shift_op(sato, 1), ref));
}

TEST_CASE("action on the every-position schemas") {
    const FlagSchema& ex2_3 = get_scenario("ex2_3").schema;
    FlagPoint ref = reference_point(ex2_3, {-1, 1});
    StructuredOperator f = make_operator(ex2_3, {-1, 0}, 0, DenseMatrix{{1, 2}, {0, 1}});
    CHECK(point_equal(act(f, ref), ref));

    StructuredOperator g = make_operator(ex2_3, {-1, 0}, 0, DenseMatrix{{0, 1}, {1, 0}});
    FlagPoint moved = act(g, ref);
    CHECK(is_commensurable(moved, ref));
    CHECK(!point_equal(moved, ref));
    CHECK(point_equal(moved, act_direct(g, ref)));
}

TEST_CASE("duality on a two-cut split schema with a shifted mirror") {
    // Cuts {-2, 2}: the order-reversing bijection is i -> succ(-i).
    FlagSchema s = finite_cuts_schema(IndexKind::SatoSplit, {-2, 2});
    auto m = find_mirror(s);
    REQUIRE(m.has_value());
    CHECK(m->offset == 1);
    CHECK(m->apply(3) == -2);
    CHECK(m->mirror_cut(CutId{2}) == CutId{-2});
    CHECK(m->mirror_cut(CutId{-2}) == CutId{2});

    FlagPoint ref = reference_point(s, {-3, 3});
    FlagPoint dual = duality_map(ref);
    validate_point(dual);
    CHECK(point_equal(duality_map(dual), ref));

    for (std::uint64_t t = 0; t < 25; ++t) {
        auto rng = trial_rng(99, 1, static_cast<long>(t));
        FlagPoint p = random_point(s, rng, 6);
        FlagPoint back = duality_map(duality_map(p));
        CHECK(point_equal(back, p));
    }
}

TEST_CASE("duality fixes the sato reference and rejects ex2_2") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    CHECK(point_equal(duality_map(ref), ref));

    FlagPoint moved = duality_map(act(sato_swap(), ref));
    CHECK(point_equal(duality_map(moved), act(sato_swap(), ref)));

    const FlagSchema& ex2_2 = get_scenario("ex2_2").schema;
    CHECK_THROWS_AS(duality_map(reference_point(ex2_2, {1, 3})), bad_input);
}

TEST_CASE("action property suites") {
    for (const char* suite :
         {"action-well-defined", "oracle-equivalence", "component-shift", "duality",
          "stabilizer-degree", "example-2-scenarios"}) {
        SuiteReport rep = run_suite(suite, 13, 40);
        for (const auto& r : rep.results) {
            INFO(rep.suite, "/", r.property, " ", r.counterexample.dump());
            CHECK(r.pass);
        }
    }
}
