#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genflag/linalg.hpp"
#include "genflag/subspace.hpp"
#include "genflag/verify.hpp"

using namespace genflag;

TEST_CASE("rref fixed cases") {
    CHECK(rref(DenseMatrix{{2, 4}, {1, 2}}) == DenseMatrix{{1, 2}, {0, 0}});
    CHECK(rref(DenseMatrix::identity(3)) == DenseMatrix::identity(3));
    CHECK(rref(DenseMatrix{{0, 1}, {1, 0}}) == DenseMatrix::identity(2));
}

TEST_CASE("rank fixed cases") {
    CHECK(rank(DenseMatrix(3, 3)) == 0);
    CHECK(rank(DenseMatrix::identity(4)) == 4);
    CHECK(rank(DenseMatrix{{1, 2}, {2, 4}, {3, 6}}) == 1);
}

TEST_CASE("invert fixed cases") {
    CHECK(*invert(DenseMatrix::identity(5)) == DenseMatrix::identity(5));
    CHECK(*invert(DenseMatrix{{0, 1}, {1, 0}}) == DenseMatrix{{0, 1}, {1, 0}});
    CHECK(*invert(DenseMatrix{{1, 1}, {0, 1}}) == DenseMatrix{{1, -1}, {0, 1}});
    CHECK(!invert(DenseMatrix{{1, 2}, {2, 4}}).has_value());
    CHECK(!invert(DenseMatrix(2, 3)).has_value());
}

TEST_CASE("annihilator fixed cases") {
    Subspace line = Subspace::coordinate(3, {0});
    CHECK(line.annihilator() == Subspace::coordinate(3, {1, 2}));
    CHECK(Subspace::full(4).annihilator() == Subspace(4));
    Subspace diag = Subspace::span(2, DenseMatrix{{1, 1}});
    CHECK(diag.annihilator() == Subspace::span(2, DenseMatrix{{1, -1}}));
    CHECK(diag.annihilator().annihilator() == diag);
}

TEST_CASE("intersect fixed cases") {
    Subspace a = Subspace::coordinate(3, {0, 1});
    Subspace b = Subspace::coordinate(3, {1, 2});
    CHECK(a.intersect(a) == a);
    CHECK(Subspace::coordinate(2, {0}).intersect(Subspace::coordinate(2, {1})) == Subspace(2));
    CHECK(a.intersect(b) == Subspace::coordinate(3, {1}));
    CHECK_THROWS_AS(a.intersect(Subspace::full(2)), bad_input);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-4/2") == rat(-2));
    CHECK(to_string(rat(2, 4)) == "1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), bad_input);
    CHECK_THROWS_AS(parse_rational("x"), bad_input);
}

TEST_CASE("linear-core property suite") {
    SuiteReport rep = run_suite("linear-core", 11, 120);
    for (const auto& r : rep.results) {
        INFO(r.property, " ", r.counterexample.dump());
        CHECK(r.pass);
    }
}
