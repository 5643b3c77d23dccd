#include "doctest.h"

#include "sa/feasibility.hpp"
#include "sa/signature.hpp"

using namespace sa;

TEST_CASE("Riemann-Hurwitz genus") {
    CHECK(rh_genus(40, Signature(0, {2, 4, 10})) == Rational(4));
    CHECK(rh_genus(10, Signature(0, {2, 2, 5, 5})) == Rational(4));
    CHECK(rh_genus(1, Signature(2, {})) == Rational(2));
    CHECK(rh_genus(7, Signature(0, {7, 7, 7})) == Rational(3));
    // non-integral results are data, not failures
    CHECK(rh_genus(6, Signature(0, {2, 2, 2})) == Rational(-1, 2));
}

TEST_CASE("rh_genus monotone in periods and genus") {
    Signature base(0, {2, 4, 10});
    Rational g0 = rh_genus(40, base);
    CHECK(rh_genus(40, Signature(0, {2, 4, 11})) > g0);
    CHECK(rh_genus(40, Signature(0, {3, 4, 10})) > g0);
    CHECK(rh_genus(40, Signature(1, {2, 4, 10})) > g0);
}

TEST_CASE("Teichmueller dimension") {
    CHECK(teich_dim(Signature(0, {2, 2, 2, 5})) == 1);
    CHECK(teich_dim(Signature(0, {3, 5, 15})) == 0);
    CHECK(teich_dim(Signature(2, {})) == 3);
    CHECK_THROWS_AS(teich_dim(Signature(0, {2, 2})), std::invalid_argument);
}

TEST_CASE("signature text form") {
    CHECK(Signature(0, {2, 4, 10}).str() == "(0;2,4,10)");
    CHECK(Signature::parse("(0;2,4,10)") == Signature(0, {2, 4, 10}));
    CHECK(Signature::parse("(2;)") == Signature(2, {}));
    CHECK(Signature::parse(" (0; 10, 4, 2) ") == Signature(0, {2, 4, 10}));  // sorts
    CHECK_THROWS_AS(Signature::parse("0;2,4"), std::invalid_argument);
    CHECK_THROWS_AS(Signature(0, {1, 2}), std::invalid_argument);
}

TEST_CASE("admissible signatures") {
    auto d5 = build_group("D5");
    auto sigs = admissible_signatures(*d5, 4);
    Signature want(0, {2, 2, 5, 5});
    CHECK(std::find(sigs.begin(), sigs.end(), want) != sigs.end());
    CHECK(std::find(sigs.begin(), sigs.end(), Signature(0, {2, 2, 2, 5})) == sigs.end());
    CHECK(std::is_sorted(sigs.begin(), sigs.end()));
    CHECK(std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end());
    for (const auto& s : sigs) CHECK(rh_genus(10, s) == Rational(4));

    // at q = 5 the arithmetic screen admits (0;5,5,5) as well, but only
    // (0;3,5,15) is realised by a generating vector
    auto c15 = build_group("C15");
    auto sigs15 = admissible_signatures(*c15, 4);
    std::vector<Signature> triangles;
    for (const auto& s : sigs15)
        if (s.gamma == 0 && s.s() == 3) triangles.push_back(s);
    CHECK(triangles == std::vector<Signature>{Signature(0, {3, 5, 15}), Signature(0, {5, 5, 5})});
    CHECK(enumerate_vectors(c15, Signature(0, {5, 5, 5})).empty());
    CHECK(!enumerate_vectors(c15, Signature(0, {3, 5, 15})).empty());

    auto c5 = build_group("C5");
    auto sigs5 = admissible_signatures(*c5, 4);
    CHECK(std::find(sigs5.begin(), sigs5.end(), Signature(0, {5, 5, 5, 5})) != sigs5.end());
}

TEST_CASE("lambda feasibility at q = 7") {
    auto report = lambda_feasibility(7);
    CHECK(report.realizable_lambdas() == std::vector<int>{1, 2, 3, 4, 8});
    CHECK(report.by_lambda.at(5).empty());
    CHECK(report.by_lambda.at(6).empty());
    CHECK(report.by_lambda.at(7).empty());

    const auto& l8 = report.by_lambda.at(8);
    REQUIRE(l8.size() == 1);
    CHECK(l8[0].group->spec_tag() == "AM:q=7");
    CHECK(l8[0].sigma == Signature(0, {2, 4, 14}));

    const auto& l3 = report.by_lambda.at(3);
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].sigma == Signature(0, {3, 7, 21}));

    CHECK_THROWS_AS(lambda_feasibility(6), std::invalid_argument);
    CHECK_THROWS_AS(lambda_feasibility(5), std::invalid_argument);
}
