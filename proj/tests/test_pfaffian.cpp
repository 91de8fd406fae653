#include <random>

#include "cy3rings/geometry.hpp"
#include "cy3rings/pfaffian.hpp"
#include "doctest.h"

using namespace cy3;

namespace {

IntPolynomial poly(std::initializer_list<std::pair<int, int>> terms) {
    IntPolynomial p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

// P^5 coordinates plus the degree-3 unprojection variable
RingPtr model_ring() {
    return std::make_shared<Ring>(std::vector<GradedVariable>{
        {"x", 1}, {"y", 1}, {"z", 1}, {"u", 1}, {"v", 1}, {"w", 1}, {"s", 3}});
}

SparsePoly var(const RingPtr& r, const char* name) {
    return SparsePoly::variable(r, r->index_of(name));
}

struct ModelMatrix {
    RingPtr ring;
    SkewMatrix5 matrix;
    SparsePoly A, B, C, D, E, F, x, y, z, s;
};

// the disjoint-planes unprojection matrix (z, y, A, D; x, B, E; C, F; s)
// with A..F quadrics in (u,v,w)
ModelMatrix make_model() {
    RingPtr r = model_ring();
    SparsePoly x = var(r, "x"), y = var(r, "y"), z = var(r, "z");
    SparsePoly u = var(r, "u"), v = var(r, "v"), w = var(r, "w"), s = var(r, "s");
    SparsePoly A = u * u + v * w, B = u * v, C = w * w, D = v * v - u * w, E = u * w,
               F = v * w + u * u;
    SkewMatrix5 m(r, {z, y, A, D, x, B, E, C, F, s});
    return ModelMatrix{r, m, A, B, C, D, E, F, x, y, z, s};
}

// brute 4x4 Pfaffian: m12 m34 - m13 m24 + m14 m23
SparsePoly pf4_oracle(const SkewMatrix5& m, int j, int k, int l, int mm) {
    return m.entry(j, k) * m.entry(l, mm) - m.entry(j, l) * m.entry(k, mm) +
           m.entry(j, mm) * m.entry(k, l);
}

}  // namespace

TEST_CASE("solve_entry_weights: the model degree matrix") {
    SkewDegreeMatrix5 d({1, 1, 2, 2}, {1, 2, 2}, {2, 2}, 3);
    EntryWeightSolution sol = solve_entry_weights(d);
    CHECK(sol.q == std::array<Rat, 5>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(3, 2), Rat(3, 2)});
    CHECK(sol.pfaffian_degrees == std::array<int, 5>{4, 4, 4, 3, 3});
    CHECK(sol.k == 9);
}

TEST_CASE("solve_entry_weights: the codimension-3 family matrix") {
    SkewDegreeMatrix5 d({1, 3, 3, 3}, {3, 3, 3}, {5, 5}, 5);
    EntryWeightSolution sol = solve_entry_weights(d);
    CHECK(sol.q == std::array<Rat, 5>{Rat(1, 2), Rat(1, 2), Rat(5, 2), Rat(5, 2), Rat(5, 2)});
    CHECK(sol.pfaffian_degrees == std::array<int, 5>{8, 8, 6, 6, 6});
    CHECK(sol.k == 17);
}

TEST_CASE("solve_entry_weights: constant and inconsistent matrices") {
    SkewDegreeMatrix5 all2({2, 2, 2, 2}, {2, 2, 2}, {2, 2}, 2);
    EntryWeightSolution sol = solve_entry_weights(all2);
    CHECK(sol.q == std::array<Rat, 5>{1, 1, 1, 1, 1});
    CHECK(sol.pfaffian_degrees == std::array<int, 5>{4, 4, 4, 4, 4});
    CHECK(sol.k == 10);

    SkewDegreeMatrix5 bad({1, 1, 2, 2}, {1, 2, 2}, {2, 2}, 9);
    CHECK_THROWS_WITH_AS(solve_entry_weights(bad),
                         "inconsistent degree matrix; violated entries: (4,5)", domain_error);
}

TEST_CASE("pfaffian numerator formula with dual-route checks") {
    IntPolynomial n9 = pfaffian_numerator({4, 4, 4, 3, 3}, 9);
    CHECK(n9 == poly({{0, 1}, {3, -2}, {4, -3}, {5, 3}, {6, 2}, {9, -1}}));
    // equals the unprojection route from the (3,3) complete intersection
    RationalSeries route = add(ci_series(WeightVector::repeated(1, 6), {3, 3}),
                               unproject_term(WeightedPlane{{1, 1, 1}}, 3));
    CHECK(equals(RationalSeries{n9, WeightVector({1, 1, 1, 1, 1, 1, 3})}, route));

    IntPolynomial n17 = pfaffian_numerator({8, 8, 6, 6, 6}, 17);
    CHECK(n17 == poly({{0, 1}, {6, -3}, {8, -2}, {9, 2}, {11, 3}, {17, -1}}));
    RationalSeries route17 = add(ci_series(WeightVector({1, 1, 1, 3, 3, 3}), {6, 6}),
                                 unproject_term(WeightedPlane{{1, 1, 3}}, 5));
    CHECK(equals(RationalSeries{n17, WeightVector({1, 1, 1, 3, 3, 3, 5})}, route17));

    // degenerate overlap all at k/2 combines to 1 - t^2
    CHECK(pfaffian_numerator({1, 1, 1, 1, 1}, 2) == poly({{0, 1}, {2, -1}}));
    CHECK_THROWS_AS(pfaffian_numerator({4, 4, 4, 3, 9}, 9), domain_error);
}

TEST_CASE("maximal pfaffians: the unprojection relations") {
    ModelMatrix mm = make_model();
    auto pf = mm.matrix.maximal_pfaffians();
    // the two Pfaffians involving s, matching the unprojection calculus
    CHECK(pf[0] == mm.s * mm.x - mm.B * mm.F + mm.C * mm.E);
    CHECK(pf[2] == mm.s * mm.z - mm.A * mm.E + mm.B * mm.D);
    // and the third s-relation, up to the sign of y
    CHECK(pf[1] == mm.s * mm.y - mm.A * mm.F + mm.C * mm.D);
    // the remaining two recover the defining equations of Z up to entry signs
    CHECK(pf[4] == mm.A * mm.x - mm.B * mm.y + mm.C * mm.z);
    CHECK(pf[3] == mm.D * mm.x - mm.E * mm.y + mm.F * mm.z);
}

TEST_CASE("maximal pfaffians: degrees match the degree calculus") {
    ModelMatrix mm = make_model();
    SkewDegreeMatrix5 d({1, 1, 2, 2}, {1, 2, 2}, {2, 2}, 3);
    mm.matrix.check_degrees(d);
    EntryWeightSolution sol = solve_entry_weights(d);
    auto pf = mm.matrix.maximal_pfaffians();
    for (int i = 0; i < 5; ++i)
        CHECK(pf[static_cast<size_t>(i)].homogeneous_degree() ==
              sol.pfaffian_degrees[static_cast<size_t>(i)]);
}

TEST_CASE("maximal pfaffians: zero matrix") {
    RingPtr r = model_ring();
    SparsePoly z = SparsePoly::zero(r);
    SkewMatrix5 m(r, {z, z, z, z, z, z, z, z, z, z});
    for (const auto& p : m.maximal_pfaffians()) CHECK(p.is_zero());
}

TEST_CASE("maximal pfaffians agree with the brute 4x4 oracle on random matrices") {
    RingPtr r = model_ring();
    std::mt19937 rng(424243u);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> pick(0, 6);
    auto random_entry = [&]() {
        SparsePoly p = SparsePoly::constant(r, coeff(rng));
        for (int i = 0; i < 2; ++i) {
            SparsePoly mono = SparsePoly::constant(r, coeff(rng));
            mono = mono * SparsePoly::variable(r, pick(rng));
            if (rng() % 2) mono = mono * SparsePoly::variable(r, pick(rng));
            p = p + mono;
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::array<SparsePoly, 10> upper{
            random_entry(), random_entry(), random_entry(), random_entry(), random_entry(),
            random_entry(), random_entry(), random_entry(), random_entry(), random_entry()};
        SkewMatrix5 m(r, upper);
        auto pf = m.maximal_pfaffians();
        CHECK(pf[0] == pf4_oracle(m, 2, 3, 4, 5));
        CHECK(pf[1] == pf4_oracle(m, 1, 3, 4, 5));
        CHECK(pf[2] == pf4_oracle(m, 1, 2, 4, 5));
        CHECK(pf[3] == pf4_oracle(m, 1, 2, 3, 5));
        CHECK(pf[4] == pf4_oracle(m, 1, 2, 3, 4));
        // defining syzygies: sum_a (-1)^a m_ba Pf_a = 0 for every row b
        for (int b = 1; b <= 5; ++b) {
            SparsePoly acc = SparsePoly::zero(r);
            for (int a = 1; a <= 5; ++a) {
                SparsePoly term = m.entry(b, a) * pf[static_cast<size_t>(a - 1)];
                acc = (a % 2 == 0) ? acc + term : acc - term;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("format predicates on the disjoint-planes matrix") {
    ModelMatrix mm = make_model();
    SparsePoly u = var(mm.ring, "u"), v = var(mm.ring, "v"), w = var(mm.ring, "w");
    TriangularIdeal ideal = TriangularIdeal::from_generators({u, v, w, mm.s});
    CHECK(is_jerry(mm.matrix, ideal, 4, 5));
    for (int i = 1; i <= 5; ++i) CHECK_FALSE(is_tom(mm.matrix, ideal, i));
    CHECK_FALSE(is_jerry(mm.matrix, ideal, 1, 2));
}

TEST_CASE("format predicates on the serial-unprojection matrices") {
    // P(1,1,1,3,3,3,5) with coordinates x,y,z,t,u,v and unprojection variable w
    auto ring = std::make_shared<Ring>(std::vector<GradedVariable>{
        {"x", 1}, {"y", 1}, {"z", 1}, {"t", 3}, {"u", 3}, {"v", 3}, {"w", 5}});
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), z = var(ring, "z");
    SparsePoly t = var(ring, "t"), u = var(ring, "u"), v = var(ring, "v"), w = var(ring, "w");
    TriangularIdeal id_d = TriangularIdeal::from_generators({t, u, v, w});

    SUBCASE("Tom_1 matrix (alpha, beta, C, F; eps, -B, -E; A, D; w)") {
        SparsePoly alpha = x, beta = y * z * (y - z) + u, eps = t;
        SparsePoly B = u, E = v, A = t * y * y, D = v * z * z;
        SparsePoly C = y * y * z, F = z * z * z + u;
        SkewMatrix5 m(ring, {alpha, beta, C, F, eps, -B, -E, A, D, w});
        SkewDegreeMatrix5 degs({1, 3, 3, 3}, {3, 3, 3}, {5, 5}, 5);
        m.check_degrees(degs);
        CHECK(is_tom(m, id_d, 1));
        CHECK_FALSE(is_tom(m, id_d, 2));
        CHECK_FALSE(is_jerry(m, id_d, 4, 5));  // C, F are outside the ideal
        // Pfaffian degrees match the degree calculus for this matrix too
        EntryWeightSolution sol = solve_entry_weights(degs);
        auto pfs = m.maximal_pfaffians();
        for (int i = 0; i < 5; ++i) {
            const SparsePoly& p = pfs[static_cast<size_t>(i)];
            if (!p.is_zero())
                CHECK(p.homogeneous_degree() == sol.pfaffian_degrees[static_cast<size_t>(i)]);
        }
    }

    SUBCASE("Jer_45 matrix (x, u+p3, C, F; t+q3, -B, -E; A, D; w)") {
        SparsePoly p3 = y * y * y - z * z * z, q3 = y * z * z;
        SparsePoly B = t, E = u, A = t * y * y, D = u * z * z, C = u, F = v;
        SkewMatrix5 m(ring, {x, u + p3, C, F, t + q3, -B, -E, A, D, w});
        SkewDegreeMatrix5 degs({1, 3, 3, 3}, {3, 3, 3}, {5, 5}, 5);
        m.check_degrees(degs);
        CHECK(is_jerry(m, id_d, 4, 5));
        CHECK_FALSE(is_tom(m, id_d, 1));  // t + q3 is not in (t,u,v,w)
    }
}

TEST_CASE("tom holds trivially on the zero matrix") {
    RingPtr r = model_ring();
    SparsePoly z = SparsePoly::zero(r);
    SkewMatrix5 m(r, {z, z, z, z, z, z, z, z, z, z});
    TriangularIdeal ideal = TriangularIdeal::from_generators({var(r, "u")});
    for (int i = 1; i <= 5; ++i) CHECK(is_tom(m, ideal, i));
    CHECK(is_jerry(m, ideal, 4, 5));
}

TEST_CASE("random Jerry instances satisfy the predicate") {
    RingPtr r = model_ring();
    SparsePoly u = var(r, "u"), v = var(r, "v"), w = var(r, "w");
    TriangularIdeal ideal = TriangularIdeal::from_generators({u, v, w});
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pick(0, 6);
    auto random_poly = [&]() {
        SparsePoly p = SparsePoly::constant(r, coeff(rng));
        SparsePoly mono = SparsePoly::variable(r, pick(rng)) * coeff(rng);
        return p + mono;
    };
    auto in_ideal = [&]() { return u * random_poly() + v * random_poly() + w * random_poly(); };
    for (int trial = 0; trial < 25; ++trial) {
        // rows/columns 4 and 5 from the ideal, the rest arbitrary
        SkewMatrix5 m(r, {random_poly(), random_poly(), in_ideal(), in_ideal(), random_poly(),
                          in_ideal(), in_ideal(), in_ideal(), in_ideal(), in_ideal()});
        CHECK(is_jerry(m, ideal, 4, 5));
    }
}

TEST_CASE("degree feasibility advisory") {
    // entries of degree < the minimum generator degree can never lie in the ideal
    SkewDegreeMatrix5 d({1, 1, 2, 2}, {1, 2, 2}, {2, 2}, 3);
    auto tom1 = tom_infeasible_entries(d, 2, 1);
    CHECK(tom1 == std::vector<std::pair<int, int>>{{2, 3}});  // degree-1 entry x
    auto jer45 = jerry_infeasible_entries(d, 2, 4, 5);
    CHECK(jer45.empty());
    auto jer12 = jerry_infeasible_entries(d, 2, 1, 2);
    CHECK(jer12 == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}
