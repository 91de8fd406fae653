#include "cy3rings/geometry.hpp"
#include "cy3rings/orbifold.hpp"
#include "cy3rings/pfaffian.hpp"
#include "cy3rings/recognize.hpp"
#include "cy3rings/web.hpp"
#include "doctest.h"

using namespace cy3;

namespace {
const WeightedPlane P2{{1, 1, 1}};
const WeightedPlane P113{{1, 1, 3}};
}  // namespace

TEST_CASE("weighted Bezout counts") {
    CHECK(weighted_bezout(2, 2, P2).value == Rat(4));
    CHECK(weighted_bezout(3, 3, P113).value == Rat(3));
    CHECK(weighted_bezout(3, 5, P113).value == Rat(5));
    CHECK(weighted_bezout(1, 1, P2).value == Rat(1));
    BezoutCount frac = weighted_bezout(1, 1, WeightedPlane{{1, 1, 2}});
    CHECK(frac.value == Rat(1, 2));
    CHECK_FALSE(frac.integral);
}

TEST_CASE("determinantal series and lengths") {
    DeterminantalData locus13{{0, 0}, {5, 3, 3}, P113};
    RationalSeries s = determinantal_series(locus13);
    IntPolynomial expected;
    expected.add_term(0, 1);
    expected.add_term(6, -1);
    expected.add_term(8, -2);
    expected.add_term(11, 2);
    CHECK(s.numerator == expected);
    CHECK(determinantal_length(locus13) == 13);

    CHECK(determinantal_length({{0, 0}, {2, 2, 2}, P2}) == 12);
    CHECK(determinantal_length({{0, 0}, {3, 3, 3}, P2}) == 27);
}

TEST_CASE("determinantal series: both display forms agree") {
    // the rank-drop series rewrites over a single (1-t) factor
    RationalSeries a = determinantal_series({{0, 0}, {5, 3, 3}, P113});
    IntPolynomial n;
    n.add_term(0, 1);
    n.add_term(1, 1);
    n.add_term(2, 1);
    for (int e = 3; e <= 7; ++e) n.add_term(e, 2);
    RationalSeries b{n, WeightVector({1})};
    CHECK(equals(a, b));
}

TEST_CASE("determinantal length error paths") {
    CHECK_THROWS_AS(determinantal_length({{0, 0}, {2, 2, 2}, WeightedPlane{{1, 1, 5}}}),
                    domain_error);  // 12/5 not integral
    CHECK_THROWS_AS(determinantal_length({{0, 0}, {0, 0, 0}, P2}), domain_error);
}

TEST_CASE("dual oracle: Bezout unions match determinantal lengths") {
    // 12 nodes per plane
    NodeReport model = standard_choice_nodes(
        {{"E", P2, {{2, 2}, {2, 2}, {2, 2}}}}, 0);
    CHECK(model.total == determinantal_length({{0, 0}, {2, 2, 2}, P2}));
    // 13 on P(1,1,3): 3 + 5 + 5
    NodeReport locus = standard_choice_nodes(
        {{"E", P113, {{3, 3}, {3, 5}, {5, 3}}}}, 0);
    CHECK(locus.total == determinantal_length({{0, 0}, {5, 3, 3}, P113}));
    // 27 on the plane: three cubic pairs
    NodeReport d27 = standard_choice_nodes(
        {{"D", P2, {{3, 3}, {3, 3}, {3, 3}}}}, 0);
    CHECK(d27.total == determinantal_length({{0, 0}, {3, 3, 3}, P2}));
}

TEST_CASE("standard-choice node reports") {
    // disjoint model: 12 + 12
    NodeReport disjoint = standard_choice_nodes(
        {{"D", P2, {{2, 2}, {2, 2}, {2, 2}}}, {"E", P2, {{2, 2}, {2, 2}, {2, 2}}}}, 0);
    CHECK(disjoint.total == 24);
    // intersecting model: one node shared
    NodeReport meeting = standard_choice_nodes(
        {{"D", P2, {{2, 2}, {2, 2}, {2, 2}}}, {"E", P2, {{2, 2}, {2, 2}, {2, 2}}}}, 1);
    CHECK(meeting.total == 23);
    // serial-unprojection configuration: 27 on D, 13 on E, 3 shared
    NodeReport tom = standard_choice_nodes(
        {{"D", P2, {{3, 3}, {3, 3}, {3, 3}}}, {"E", P113, {{3, 3}, {3, 5}, {5, 3}}}}, 3);
    CHECK(tom.per_divisor[0].second == 27);
    CHECK(tom.per_divisor[1].second == 13);
    CHECK(tom.total == 37);
    // non-integral count rejected
    CHECK_THROWS_AS(
        standard_choice_nodes({{"D", WeightedPlane{{1, 1, 2}}, {{1, 1}}}}, 0), domain_error);
}

TEST_CASE("unprojection term") {
    RationalSeries t3 = unproject_term(P2, 3);
    CHECK(t3.numerator == IntPolynomial::monomial(3, 1));
    CHECK(t3.denominator == WeightVector({1, 1, 1, 3}));
    RationalSeries t5 = unproject_term(P113, 5);
    CHECK(t5.denominator == WeightVector({1, 1, 3, 5}));
    RationalSeries t1 = unproject_term(P2, 1);  // degenerate but legal
    CHECK(t1.denominator == WeightVector({1, 1, 1, 1}));
    CHECK(expand(t1, 3).coefficients() == std::vector<Int>{0, 1, 4, 10});
}

TEST_CASE("complete-intersection series") {
    RationalSeries z33 = ci_series(WeightVector::repeated(1, 6), {3, 3});
    IntPolynomial n;
    n.add_term(0, 1);
    n.add_term(3, -2);
    n.add_term(6, 1);
    CHECK(z33.numerator == n);
    RationalSeries z66 = ci_series(WeightVector({1, 1, 1, 3, 3, 3}), {6, 6});
    CHECK(equals(z66, RationalSeries{IntPolynomial::one_minus_tk(6) *
                                         IntPolynomial::one_minus_tk(6),
                                     WeightVector({1, 1, 1, 3, 3, 3})}));
    // X_{6,8} in P(1^3,3^2,5) equals the assembled series
    RationalSeries x68 = ci_series(WeightVector({1, 1, 1, 3, 3, 5}), {6, 8});
    CHECK(equals(x68, assemble({3, 6}, standard_basket(2, 1))));
}

TEST_CASE("dual-route Hilbert series identities") {
    RationalSeries z33 = ci_series(WeightVector::repeated(1, 6), {3, 3});
    RationalSeries up3 = unproject_term(P2, 3);
    RationalSeries up5 = unproject_term(P113, 5);

    // one unprojection gives the Pfaffian model, numerator on the nose
    RationalSeries y = add(z33, up3);
    CHECK(y.denominator == WeightVector({1, 1, 1, 1, 1, 1, 3}));
    CHECK(y.numerator == pfaffian_numerator({4, 4, 4, 3, 3}, 9));

    // two unprojections give the codim-4 model
    RationalSeries x = add(y, up3);
    CHECK(equals(x, assemble({6, 21}, standard_basket(2, 0))));

    // the (6,6) route with a 1/5-type unprojection
    RationalSeries z66 = ci_series(WeightVector({1, 1, 1, 3, 3, 3}), {6, 6});
    CHECK(equals(add(z66, up5), RationalSeries{pfaffian_numerator({8, 8, 6, 6, 6}, 17),
                                               WeightVector({1, 1, 1, 3, 3, 3, 5})}));

    // triple route to the worked example
    RationalSeries triple = add(add(z66, up3), up5);
    CHECK(equals(triple, assemble({3, 6}, standard_basket(4, 1))));
}

TEST_CASE("Euler characteristic steps") {
    CHECK(chi_conifold(-144, 24) == -96);
    CHECK(chi_conifold(-144, 23) == -98);
    CHECK(chi_conifold(7, 0) == 7);
    CHECK(chi_crepant_third(-96) == -94);
    CHECK(chi_contract_plane(-96) == -98);
}

TEST_CASE("conifold ledgers and their differences") {
    // two parallel ledgers differing only in node count
    ConifoldLedger jer(Int(-200));
    jer.resolve_nodes(12).contract_plane();
    ConifoldLedger tom(Int(-200));
    tom.resolve_nodes(11).contract_plane();
    CHECK(jer.chi() - tom.chi() == 2);
    CHECK(jer.steps().size() == 2);
    CHECK(jer.steps()[0].chi_after == -176);

    // antisymmetry: shared-node difference s shifts the final value by 2s
    for (int s : {0, 1, 3}) {
        ConifoldLedger a(Int(-144)), b(Int(-144));
        a.resolve_nodes(24);
        b.resolve_nodes(24 - s);
        CHECK(a.chi() - b.chi() == 2 * s);
    }
}

TEST_CASE("web graph over the candidate table") {
    std::vector<SearchRow> all = search({3, 3}, {6, 6}, {0, 6}, {0, 3});
    // the table's node set: candidates up to codimension 4
    std::vector<SearchRow> rows;
    for (const SearchRow& r : all)
        if (r.status == "ok" && r.candidate->codim_estimate <= 4) rows.push_back(r);
    std::map<std::pair<int, int>, int> families{
        {{6, 0}, 2}, {{4, 1}, 2}, {{2, 2}, 3}, {{0, 3}, 2}};
    WebGraph g = build_web(rows, families);
    CHECK(g.nodes.size() == 15);
    CHECK(g.connected);
    int labelled = 0;
    for (const auto& node : g.nodes) {
        if (!node.families) continue;
        ++labelled;
        CHECK(node.codim == 4);
    }
    CHECK(labelled == 4);
    // spot-check the two edge rules
    bool has_13_edge = false, has_15_edge = false;
    for (const auto& e : g.edges) {
        if (e.from == std::make_pair(2, 0) && e.to == std::make_pair(1, 0) &&
            e.label == "project 1/3")
            has_13_edge = true;
        if (e.from == std::make_pair(0, 1) && e.to == std::make_pair(1, 0) &&
            e.label == "project 1/5")
            has_15_edge = true;
        CHECK((e.label == "project 1/3" ? e.to.first == e.from.first - 1
                                        : e.to.second == e.from.second - 1));
    }
    CHECK(has_13_edge);
    CHECK(has_15_edge);
}

TEST_CASE("web graph: single node is trivially connected") {
    SearchRow row = search_one(3, 6, 5, 0);
    REQUIRE(row.status == "ok");
    WebGraph g = build_web({row}, {});
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
    CHECK(g.connected);
    CHECK(to_dot(g).find("digraph web") == 0);
}
