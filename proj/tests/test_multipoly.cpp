#include <random>

#include "cy3rings/matrix_doc.hpp"
#include "cy3rings/multipoly.hpp"
#include "doctest.h"

using namespace cy3;

namespace {

RingPtr p5_ring() {
    return std::make_shared<Ring>(std::vector<GradedVariable>{
        {"x", 1}, {"y", 1}, {"z", 1}, {"u", 1}, {"v", 1}, {"w", 1}, {"t", 1}});
}

SparsePoly var(const RingPtr& r, const char* name) {
    return SparsePoly::variable(r, r->index_of(name));
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic and homogeneity") {
    auto ring = std::make_shared<Ring>(
        std::vector<GradedVariable>{{"x", 1}, {"y", 1}, {"u", 3}});
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), u = var(ring, "u");
    SparsePoly p = x * x * y + u;  // degrees 3 and 3
    CHECK(p.homogeneous_degree() == 3);
    SparsePoly q = p - u;
    CHECK(q == x * x * y);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK_FALSE((x + u).is_homogeneous());
    CHECK(p.str() == "u + x^2*y");
}

TEST_CASE("substitution expands fully") {
    auto ring = p5_ring();
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), z = var(ring, "z");
    SparsePoly p = x * x + x * y + z;
    SparsePoly g = y + z;
    SparsePoly got = p.substituted(ring->index_of("x"), g);
    SparsePoly expect = (y + z) * (y + z) + (y + z) * y + z;
    CHECK(got == expect);
    CHECK_FALSE(got.depends_on(ring->index_of("x")));
}

TEST_CASE("triangular ideal: orientation and reduction") {
    auto ring = p5_ring();
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), z = var(ring, "z");
    SparsePoly u = var(ring, "u"), t = var(ring, "t");
    // I_E = (x, yz(y-z) + u, t)
    SparsePoly beta = y * z * (y - z) + u;
    TriangularIdeal ideal = TriangularIdeal::from_generators({x, beta, t});

    CHECK(ideal.reduce(u) == -(y * z * (y - z)));
    CHECK(ideal.contains(beta));
    CHECK(ideal.reduce(SparsePoly::constant(ring, 1)) == SparsePoly::constant(ring, 1));
    CHECK_FALSE(ideal.contains(y));
}

TEST_CASE("triangular ideal: randomized membership oracle") {
    auto ring = p5_ring();
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), z = var(ring, "z");
    SparsePoly u = var(ring, "u"), t = var(ring, "t");
    TriangularIdeal ideal = TriangularIdeal::from_generators({x, y * z * (y - z) + u, t});

    std::mt19937 rng(977u);
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_poly = [&]() {
        SparsePoly p = SparsePoly::constant(ring, coeff(rng));
        for (int i = 0; i < 4; ++i) {
            SparsePoly mono = SparsePoly::constant(ring, coeff(rng));
            for (int j = 0, d = pick(rng) % 3; j <= d; ++j)
                mono = mono * SparsePoly::variable(ring, pick(rng));
            p = p + mono;
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        SparsePoly q = random_poly(), r = random_poly();
        CHECK(ideal.contains(x * q + t * r));
    }
}

TEST_CASE("triangular ideal: shifted generators like (x, u + p3, t + q3)") {
    auto ring = p5_ring();
    SparsePoly x = var(ring, "x"), y = var(ring, "y"), z = var(ring, "z");
    SparsePoly u = var(ring, "u"), t = var(ring, "t");
    SparsePoly p3 = y * y * y + z * z * z;
    SparsePoly q3 = y * z * z;
    TriangularIdeal ideal = TriangularIdeal::from_generators({x, u + p3, t + q3});
    CHECK(ideal.contains(u + p3));
    CHECK(ideal.contains(t + q3));
    CHECK(ideal.reduce(u) == -p3);
    CHECK_FALSE(ideal.contains(u));
}

TEST_CASE("triangular ideal rejects unorientable generators") {
    auto ring = p5_ring();
    SparsePoly y = var(ring, "y"), z = var(ring, "z");
    CHECK_THROWS_AS(TriangularIdeal::from_generators({y * z}), domain_error);
    // x appears in both generators as the only candidate
    SparsePoly x = var(ring, "x");
    CHECK_THROWS_AS(TriangularIdeal::from_generators({x + y * y, x + z * z}), domain_error);
}

TEST_CASE("expression parser") {
    auto ring = std::make_shared<Ring>(
        std::vector<GradedVariable>{{"x", 1}, {"y", 1}, {"s", 3}});
    std::map<std::string, SparsePoly> named;
    SparsePoly x = SparsePoly::variable(ring, 0), y = SparsePoly::variable(ring, 1);
    CHECK(parse_poly_expr("x^2 + 2*x*y + y^2", ring, named) == (x + y) * (x + y));
    CHECK(parse_poly_expr("(x - y)^3", ring, named) == (x - y) * (x - y) * (x - y));
    CHECK(parse_poly_expr("-x + x", ring, named).is_zero());
    CHECK(parse_poly_expr("3", ring, named) == SparsePoly::constant(ring, 3));
    CHECK_THROWS_AS(parse_poly_expr("x +", ring, named), parse_error);
    CHECK_THROWS_AS(parse_poly_expr("q", ring, named), parse_error);
}

TEST_CASE("matrix document parsing") {
    const char* doc_text = R"(
# the disjoint-planes matrix
var x 1
var y 1
var z 1
var u 2
var v 2
var w 2
var s 3
poly A = u^2 + v*w
poly B = u*v
poly C = w^2
poly D = v^2 - u*w
poly E = u*w
poly F = v*w + u^2
matrix = [z, y, A, D; x, B, E; C, F; s]
ideal = u, v, w, s
)";
    MatrixDocument doc = parse_matrix_document(doc_text);
    REQUIRE(doc.matrix.has_value());
    REQUIRE(doc.ideal.has_value());
    CHECK(doc.ring->size() == 7);
    CHECK(doc.matrix->upper_entry(1, 2).str() == "z");
    CHECK(doc.matrix->upper_entry(4, 5).str() == "s");
    CHECK(doc.ideal->contains(doc.named.at("A")));
    CHECK_FALSE(doc.ideal->contains(var(doc.ring, "x")));
    // degree check: entries are homogeneous for the weight assignment above
    SkewDegreeMatrix5 degs({1, 1, 4, 4}, {1, 4, 4}, {4, 4}, 3);
    doc.matrix->check_degrees(degs);
}

TEST_CASE("matrix document errors") {
    CHECK_THROWS_AS(parse_matrix_document("var x 1\nmatrix = [x]"), parse_error);
    CHECK_THROWS_AS(parse_matrix_document("nonsense"), parse_error);
    CHECK_THROWS_AS(parse_matrix_document("var x 1\nvar x 2"), parse_error);
    CHECK_THROWS_AS(parse_matrix_document("var x 1\npoly x = 3"), parse_error);
}
