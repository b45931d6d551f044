#include <doctest.h>

#include "apc/family_cubic.hpp"
#include "apc/multipoly.hpp"
#include "apc/poly.hpp"

using namespace apc;

TEST_SUITE_BEGIN("family_cubic");

TEST_CASE("quadric values and surface membership") {
    std::array<BigInt, 4> good{43, 617, -1187, -1847};
    QuadricValues v = quadric_values(good);
    CHECK(v.e1 == -324720);
    CHECK(v.e2 == -974160);
    CHECK(v.e3 == 324720);
    CHECK(on_quadric_surface(good));
    CHECK(on_quadric_surface({1, 1, 1, 1}));
    CHECK_FALSE(on_quadric_surface({1, 2, 3, 4}));
}

TEST_CASE("the sixteen sign tuples are exactly the singular points") {
    MultiPoly p = MultiPoly::variable("p"), q = MultiPoly::variable("q");
    MultiPoly r = MultiPoly::variable("r"), s = MultiPoly::variable("s");
    MultiPoly e1 = p * p - 3 * q * q + 3 * r * r - s * s;
    MultiPoly e2 = 11 * p * p - 18 * q * q + 9 * r * r - 2 * s * s;
    MultiPoly e3 = 2 * p * p - 5 * q * q + 4 * r * r - s * s;
    MultiPoly Q = e1 * e2 - 3 * e3 * e3;
    auto sing = surface_singular_points();
    REQUIRE(sing.size() == 16);
    for (const auto& pt : sing) {
        std::map<std::string, Rat> at{{"p", Rat(pt[0])}, {"q", Rat(pt[1])},
                                      {"r", Rat(pt[2])}, {"s", Rat(pt[3])}};
        CHECK(Q.eval(at) == 0);
        for (const char* var : {"p", "q", "r", "s"})
            CHECK(Q.derivative(var).eval(at) == 0);
    }
    // a smooth surface point for contrast
    std::map<std::string, Rat> at{{"p", Rat(43)}, {"q", Rat(617)}, {"r", Rat(-1187)},
                                  {"s", Rat(-1847)}};
    CHECK(Q.eval(at) == 0);
    CHECK(Q.derivative("p").eval(at) != 0);
}

TEST_CASE("progression cubic interpolates the squares") {
    std::array<Rat, 4> q{Rat(43), Rat(617), Rat(-1187), Rat(-1847)};
    CubicCurve<Rat> f = progression_cubic(q);
    CHECK(f.a == 54120);
    CHECK(f.b == 162360);
    CHECK(f.c == 162360);
    CHECK(f.d == 1849);
    for (int i = 0; i < 4; ++i) CHECK(f.rhs(Rat(i)) == q[i] * q[i]);

    std::array<Rat, 4> generic{Rat(3), Rat(5), Rat(7), Rat(11)};
    CubicCurve<Rat> g = progression_cubic(generic);
    for (int i = 0; i < 4; ++i) CHECK(g.rhs(Rat(i)) == generic[i] * generic[i]);
}

TEST_CASE("canonical quadruple scaling") {
    std::array<Rat, 4> raw{make_rat(301, 225), make_rat(4319, 225), make_rat(-8309, 225),
                           make_rat(-12929, 225)};
    std::array<BigInt, 4> expect{43, 617, -1187, -1847};
    CHECK(canonical_quadruple(raw) == expect);

    std::array<Rat, 4> flip{make_rat(-3, 7), Rat(0), make_rat(6, 7), Rat(9)};
    std::array<BigInt, 4> expect2{1, 0, -2, -21};
    CHECK(canonical_quadruple(flip) == expect2);

    std::array<Rat, 4> zero{Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(canonical_quadruple(zero), std::invalid_argument);
}

TEST_CASE("pencil parameters at t = 1") {
    auto P = PencilParams<Rat>::from(Rat(1));
    CHECK(P.A == -48867651);
    CHECK(P.B == 115230640770L);
    CHECK(P.px == -3513);
    CHECK(P.py == 493506);
    CHECK(P.t1x == 2814);
    CHECK(P.t2x == 5145);
    CHECK(P.t3x == -7959);
    CHECK(P.c == make_rat(7931, 3));
    CHECK(P.d == 261072);
    ShortWCurve<Rat> fiber = P.curve();
    CHECK(fiber.contains(P.section()));
    CHECK(fiber.contains(P.torsion1()));
    CHECK(fiber.contains(ECPoint<Rat>(P.t2x, Rat(0))));
    CHECK(fiber.contains(ECPoint<Rat>(P.t3x, Rat(0))));
    auto quartic = P.quartic();
    CHECK(quartic.c == std::array<Rat, 5>{Rat(361), Rat(2812), Rat(-7648), Rat(3848),
                                          Rat(676)});
    CHECK(quartic.contains({Rat(0), Rat(19)}));
}

TEST_CASE("correspondence between fiber curve and quartic at t = 1") {
    auto P = PencilParams<Rat>::from(Rat(1));
    ShortWCurve<Rat> fiber = P.curve();

    ECPoint<Rat> sum = fiber.add(P.section(), P.torsion1());
    CHECK(sum == ECPoint<Rat>(Rat(6783), Rat(309582)));

    // the section corresponds to the marked quartic point
    auto marked = pencil_to_quartic(P, P.section());
    REQUIRE(marked.has_value());
    CHECK(marked->v == 0);
    CHECK(marked->s == 19);
    CHECK(pencil_from_quartic(P, {Rat(0), Rat(19)}) == P.section());

    ECPoint<Rat> good(Rat(6783), Rat(-309582));
    auto qp = pencil_to_quartic(P, good);
    REQUIRE(qp.has_value());
    CHECK(qp->v == make_rat(22, 15));
    CHECK(qp->s == make_rat(-12929, 225));
    CHECK(P.quartic().contains(*qp));
    CHECK(pencil_from_quartic(P, *qp) == good);

    // the mirror branch collapses onto a singular quadruple
    auto bad = pencil_to_quartic(P, sum);
    REQUIRE(bad.has_value());
    CHECK(bad->v == 1);
    auto coords = P.conic_coords(bad->v);
    auto quad = canonical_quadruple({coords[0], coords[1], coords[2], bad->s});
    CHECK(quadric_values(quad).e1 == 0);

    CHECK_FALSE(pencil_to_quartic(P, ECPoint<Rat>::inf()).has_value());
    auto t1_image = pencil_to_quartic(P, P.torsion1());
    REQUIRE(t1_image.has_value());
    CHECK(P.quartic().contains(*t1_image));
}

TEST_CASE("ap4 pipeline at t = 1") {
    AP4Result r = ap4_pipeline(Rat(1));
    CHECK(r.retried_negation);
    CHECK(r.quadruple == std::array<BigInt, 4>{43, 617, -1187, -1847});
    CHECK(r.k == Rat(parse_bigint("-111610206808689600")));
    CHECK(r.curve.A == 0);
    CHECK(r.curve.B == r.k);
    CHECK(r.x_start == 487080);
    CHECK(r.x_step == 487080);
    std::array<long, 4> ys{62833320, 901585080, -1734491880, -2698910280};
    for (int i = 0; i < 4; ++i) {
        CHECK(r.points[i].x == Rat(487080) * Rat(i + 1));
        CHECK(r.points[i].y == Rat(BigInt(ys[i])));
        CHECK(r.curve.contains(r.points[i]));
    }
}

TEST_CASE("ap4 pipeline at t = 2 cross-checks the closed form") {
    AP4Result r = ap4_pipeline(Rat(2));
    CHECK(on_quadric_surface(r.quadruple));
    CHECK(r.quadruple == std::array<BigInt, 4>{89, -329, 551, 791});
    for (int i = 1; i < 4; ++i) CHECK(r.points[i].x - r.points[i - 1].x == r.x_step);
    // canonical quadruple at t = 2 is the closed-form one divided by 7
    CHECK(r.k * pow_int(BigInt(7), 6) == k_poly().eval(Rat(2)));
}

TEST_CASE("ap4 pipeline from the bare section retries the mirror branch") {
    auto P = PencilParams<Rat>::from(Rat(1));
    AP4Result r = ap4_from_point(Rat(1), P.section());
    CHECK(r.retried_negation);
    CHECK(on_quadric_surface(r.quadruple));
    CHECK(r.k != 0);
    for (const auto& pt : r.points) CHECK(r.curve.contains(pt));
    CHECK_THROWS_AS(ap4_from_point(Rat(1), ECPoint<Rat>(Rat(1), Rat(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(ap4_from_point(Rat(1), ECPoint<Rat>::inf()), std::domain_error);
}

TEST_CASE("symbolic pipeline reproduces the closed-form quadruple") {
    SymbolicAP4 s = ap4_pipeline_symbolic();
    CHECK(s.retried_negation);
    auto qp = quadruple_polys();
    UniPoly gamma({Rat(1), Rat(3), Rat(3)});
    UniPoly den = UniPoly({Rat(3), Rat(2)}).pow(2) * Rat(9);
    CHECK(s.quadruple[0] == RatFunc(-(gamma * qp[0]), den));
    CHECK(s.quadruple[1] == RatFunc(gamma * qp[1], den));
    CHECK(s.quadruple[2] == RatFunc(-(gamma * qp[2]), den));
    CHECK(s.quadruple[3] == RatFunc(-(gamma * qp[3]), den));
}

TEST_CASE("pencil identity bundle") { CHECK(verify_pencil_identities()); }

TEST_CASE("closed forms in t") {
    CHECK(pencil_scale_poly().eval(Rat(1)) == 487080);
    CHECK(pencil_scale_poly().eval(make_rat(-3, 2)) == 0);
    CHECK(k_poly().eval(Rat(1)) == Rat(parse_bigint("-111610206808689600")));

    std::vector<Rat> oct1{Rat(-791),   Rat(12804),  Rat(12828), Rat(-17388), Rat(-34884),
                          Rat(-21384), Rat(-4428),  Rat(648),   Rat(324)};
    std::vector<Rat> oct2{Rat(397009), Rat(1332624), Rat(1985988), Rat(1704132),
                          Rat(912816), Rat(309096),  Rat(63612),   Rat(7128),
                          Rat(324)};
    CHECK(octic(1).coeffs() == oct1);
    CHECK(octic(2).coeffs() == oct2);
    CHECK(octic(1).eval(Rat(1)) == -52271);
    CHECK(octic(1).eval(Rat(2)) == -1422911);
    CHECK(octic(2).eval(Rat(1)) == 6712729);
    CHECK_THROWS_AS(octic(3), std::invalid_argument);
}

TEST_CASE("parameters with degenerate fibers") {
    std::vector<Rat> zeros = k_zero_parameters();
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == make_rat(-3, 2));
}

TEST_CASE("octic square search at small height") {
    SquareSearchReport rep = octic_square_search(20);
    CHECK(rep.checked > 0);
    REQUIRE(rep.hits.size() == 2);
    for (const SquareHit& h : rep.hits) {
        CHECK(h.t == make_rat(-3, 2));
        CHECK(h.value == 33124);
        CHECK(h.k_zero);
    }
    CHECK(rep.hits[0].which == 1);
    CHECK(rep.hits[1].which == 2);
}

TEST_SUITE_END();
