#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genflag/flag_point.hpp"
#include "genflag/scenario.hpp"
#include "genflag/verify.hpp"

using namespace genflag;

namespace {

FlagPoint sato_point(IndexInterval window, const DenseMatrix& gens) {
    const FlagSchema& s = get_scenario("sato").schema;
    FlagPoint p{s, window, {}};
    std::size_t n = window.size(s.index_schema);
    auto traces = window_traces(s, window);
    REQUIRE(traces.size() == 1);
    p.chain.emplace_back(traces[0].prefix, Subspace::span(n, gens));
    validate_point(p);
    return p;
}

} // namespace

TEST_CASE("reference point chains are coordinate prefixes") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    REQUIRE(ref.chain.size() == 1);
    CHECK(ref.chain[0].first == 2);
    CHECK(ref.chain[0].second == Subspace::coordinate(4, {0, 1}));

    const FlagSchema& ex2_3 = get_scenario("ex2_3").schema;
    FlagPoint ref3 = reference_point(ex2_3, {-1, 1}); // indices -1, 0, 1
    REQUIRE(ref3.chain.size() == 2);
    CHECK(ref3.chain[0].second == Subspace::coordinate(3, {0}));
    CHECK(ref3.chain[1].second == Subspace::coordinate(3, {0, 1}));

    CHECK(reference_point(sato, {1, 3}).chain.empty());
}

TEST_CASE("enlarge_window") {
    const FlagSchema& sato = get_scenario("sato").schema;
    SUBCASE("reference enlarges to reference") {
        FlagPoint small = reference_point(sato, {-1, 1});
        CHECK(enlarge_window(small, {-2, 2}) == reference_point(sato, {-2, 2}));
    }
    SUBCASE("new lower indices are adjoined") {
        // Window {-1,1}, chain span{e_1}: the flag that drops e_{-1} for e_1.
        FlagPoint p = sato_point({-1, 1}, DenseMatrix{{0, 1}});
        FlagPoint q = enlarge_window(p, {-2, 2});
        REQUIRE(q.chain.size() == 1);
        CHECK(q.chain[0].second == Subspace::span(4, DenseMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}}));
    }
    SUBCASE("enlarging twice equals enlarging once") {
        FlagPoint p = sato_point({-1, 1}, DenseMatrix{{0, 1}});
        CHECK(enlarge_window(enlarge_window(p, {-2, 2}), {-3, 3}) == enlarge_window(p, {-3, 3}));
    }
}

TEST_CASE("commensurability") {
    const FlagSchema& sato = get_scenario("sato").schema;
    FlagPoint ref = reference_point(sato, {-2, 2});
    CHECK(is_commensurable(ref, ref));

    // Drop e_{-1}, adjoin e_1: still commensurable.
    FlagPoint swapped = sato_point({-2, 2}, DenseMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(is_commensurable(ref, swapped));
    CHECK(!point_equal(ref, swapped));

    // W plus e_1: one dimension up at the cut, offset 1.
    FlagPoint up = sato_point({-2, 2}, DenseMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    CHECK(!is_commensurable(ref, up));
    CHECK(relative_position(up)[0].second == 1);
    CHECK(relative_position(ref)[0].second == 0);
}

TEST_CASE("validation rejects broken chains") {
    const FlagSchema& ex2_3 = get_scenario("ex2_3").schema;
    FlagPoint p = reference_point(ex2_3, {-1, 1});
    SUBCASE("missing trace") {
        p.chain.pop_back();
        CHECK_THROWS_AS(validate_point(p), bad_input);
    }
    SUBCASE("not nested") {
        p.chain[0].second = Subspace::coordinate(3, {2});
        CHECK_THROWS_AS(validate_point(p), bad_input);
    }
}

TEST_CASE("commensurability property suite") {
    SuiteReport rep = run_suite("commensurability", 23, 80);
    for (const auto& r : rep.results) {
        INFO(r.property, " ", r.counterexample.dump());
        CHECK(r.pass);
    }
}
