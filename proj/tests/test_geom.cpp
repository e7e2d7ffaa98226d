#include <catch2/catch_amalgamated.hpp>

#include "hek/geom.hpp"

using namespace hek;

namespace {

PPoint<RadElem> unit(int j) {
    PPoint<RadElem> p;
    p.x[static_cast<std::size_t>(j)] = RadElem(Rat(1));
    return p;
}

PPoint<RadElem> rational_point(std::array<long, 6> c) {
    PPoint<RadElem> p;
    for (std::size_t j = 0; j < 6; ++j) p.x[j] = RadElem(c[j]);
    return p;
}

}  // namespace

TEST_CASE("mixed_index enumerates the 15 pairs without collision") {
    std::array<bool, 15> seen{};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const int k = GenQuadric::mixed_index(i, j);
            REQUIRE(k >= 0);
            REQUIRE(k < 15);
            CHECK_FALSE(seen[static_cast<std::size_t>(k)]);
            seen[static_cast<std::size_t>(k)] = true;
        }
    CHECK(GenQuadric::mixed_index(0, 1) == 0);
    CHECK(GenQuadric::mixed_index(0, 5) == 4);
    CHECK(GenQuadric::mixed_index(1, 2) == 5);
    CHECK(GenQuadric::mixed_index(4, 5) == 14);
}

TEST_CASE("quadric evaluation") {
    DiagQuadric q;
    q.d = {1, -1, 0, 0, 0, 0};
    PPoint<Rat> p;
    p.x = {3, 2, 1, 0, 0, 0};
    CHECK(quad_eval(q, p) == 5);

    GenQuadric g;
    g.d = {1, 0, 0, 0, 0, 0};
    g.m[static_cast<std::size_t>(GenQuadric::mixed_index(1, 2))] = 7;
    CHECK(quad_eval(g, p) == 9 + 7 * 2);
}

TEST_CASE("make_line rejects degenerate spans") {
    CHECK_THROWS_AS(make_line(unit(0), unit(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_line(rational_point({2, 4, 0, 0, 0, 0}),
                              rational_point({1, 2, 0, 0, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_line(rational_point({0, 0, 0, 0, 0, 0}), unit(1)),
                    std::invalid_argument);
    CHECK_NOTHROW(make_line(unit(0), unit(1)));
}

TEST_CASE("restriction of a quadric to a line") {
    // x_0^2 - x_1^2 on the parametrization (1-t, t, 0..): 1 - 2t
    DiagQuadric q;
    q.d = {1, -1, 0, 0, 0, 0};
    const auto line = make_line(unit(0), unit(1));
    const RadPoly r = quad_on_line(q, line);
    CHECK(r.degree() == 1);
    CHECK(r.coeff(0) == RadElem(Rat(1)));
    CHECK(r.coeff(1) == RadElem(Rat(-2)));
    CHECK(r.eval(Rat(1, 2)).is_zero());
}

TEST_CASE("zero restriction is invariant under reparametrization") {
    DiagQuadric q;
    q.d = {1, -1, 1, -1, 0, 0};
    const auto p1 = rational_point({1, 1, 0, 0, 0, 0});
    const auto p2 = rational_point({0, 0, 1, 1, 0, 0});
    CHECK(quad_on_line(q, make_line(p1, p2)).is_zero());

    // same line, different spanning points
    const auto s1 = rational_point({2, 2, 3, 3, 0, 0});
    const auto s2 = rational_point({1, 1, -1, -1, 0, 0});
    CHECK(quad_on_line(q, make_line(s1, s2)).is_zero());

    // a nearby line misses the quadric
    const auto off = rational_point({0, 0, 1, 2, 0, 0});
    CHECK_FALSE(quad_on_line(q, make_line(p1, off)).is_zero());
}

TEST_CASE("restriction composes with affine reparametrization") {
    DiagQuadric q;
    q.d = {3, -1, 2, 0, 5, 0};
    const auto p0 = rational_point({1, 2, 0, 1, 0, 0});
    const auto q0 = rational_point({0, 1, 3, 0, 1, 0});
    const auto base = make_line(p0, q0);

    // t -> alpha t + beta corresponds to spanning points p + beta d, alpha d
    const Rat alpha(3), beta(-2);
    PPoint<RadElem> p2, q2;
    for (std::size_t k = 0; k < 6; ++k) {
        const RadElem d = q0.x[k] - p0.x[k];
        p2.x[k] = p0.x[k] + beta * d;
        q2.x[k] = p2.x[k] + alpha * d;
    }
    const auto moved = make_line(p2, q2);

    const RadPoly r0 = quad_on_line(q, base);
    const RadPoly r2 = quad_on_line(q, moved);
    for (long t : {0L, 1L, 7L}) CHECK(r2.eval(Rat(t)) == r0.eval(alpha * Rat(t) + beta));
}

TEST_CASE("incidence of lines in P^5") {
    const auto l01 = make_line(unit(0), unit(1));
    const auto l02 = make_line(unit(0), unit(2));
    const auto l23 = make_line(unit(2), unit(3));
    const auto l45 = make_line(unit(4), unit(5));

    CHECK(lines_meet(l01, l02));       // share e_0
    CHECK_FALSE(lines_meet(l01, l23));
    CHECK_FALSE(lines_meet(l01, l45));
    CHECK(lines_meet(l01, l01));

    // meeting without a shared spanning point
    const auto m1 = make_line(rational_point({1, 1, 0, 0, 0, 0}),
                              rational_point({0, 0, 1, 0, 0, 0}));
    const auto m2 = make_line(rational_point({1, 1, 2, 0, 0, 0}),
                              rational_point({0, 0, 0, 1, 0, 0}));
    CHECK(lines_meet(m1, m2));
}

TEST_CASE("projective equality of lines") {
    const auto l = make_line(unit(0), unit(1));
    const auto same = make_line(rational_point({1, 1, 0, 0, 0, 0}),
                                rational_point({1, -1, 0, 0, 0, 0}));
    const auto other = make_line(unit(0), unit(2));
    CHECK(lines_equal(l, same));
    CHECK_FALSE(lines_equal(l, other));
}

TEST_CASE("numeric incidence agrees with exact on rational lines") {
    const std::array<CNum, 6> roots{};  // rational points ignore the roots
    const auto l01 = make_line(unit(0), unit(1));
    const auto l02 = make_line(unit(0), unit(2));
    const auto l23 = make_line(unit(2), unit(3));
    CHECK(lines_meet(embed_line(l01, roots), embed_line(l02, roots), 1e-9));
    CHECK_FALSE(lines_meet(embed_line(l01, roots), embed_line(l23, roots), 1e-9));
}
