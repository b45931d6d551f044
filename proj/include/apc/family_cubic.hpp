#pragma once

#include <array>
#include <optional>
#include <vector>

#include "apc/curve.hpp"
#include "apc/ratfunc.hpp"
#include "apc/transforms.hpp"

// Quadruples (p,q,r,s) whose squares sit at four consecutive integer
// arguments of one cubic polynomial. Mapping that cubic to Weierstrass form
// turns the four points into an x-arithmetic progression on y^2 = x^3 + k.

namespace apc {

// the two quadric combinations cutting out the admissible quadruples, and a
// third one tied to them by e1 * e2 = 3 * e3^2 on the surface
struct QuadricValues {
    BigInt e1, e2, e3;
};

QuadricValues quadric_values(const std::array<BigInt, 4>& q);
bool on_quadric_surface(const std::array<BigInt, 4>& q);
std::vector<std::array<BigInt, 4>> surface_singular_points();  // all 16 sign tuples

// the cubic f with f(i) = q[i]^2 for i = 0,1,2,3
template <ExactField F>
CubicCurve<F> progression_cubic(const std::array<F, 4>& q) {
    F p2 = q[0] * q[0], q2 = q[1] * q[1], r2 = q[2] * q[2], s2 = q[3] * q[3];
    F e1 = p2 - F(3) * q2 + F(3) * r2 - s2;
    F e2 = F(11) * p2 - F(18) * q2 + F(9) * r2 - F(2) * s2;
    F e3 = F(2) * p2 - F(5) * q2 + F(4) * r2 - s2;
    return CubicCurve<F>{(F(0) - e1) / F(6), e3 / F(2), (F(0) - e2) / F(6), p2};
}

// coprime integer vector, first nonzero entry positive
std::array<BigInt, 4> canonical_quadruple(const std::array<Rat, 4>& q);

// One fiber of the parametrized family. The six conic constants are the
// quadratic polynomials that govern the two conics carved out of the quadric
// surface along the parametrized plane sections; c, d are the constants of
// the correspondence between the fiber curve and the conic-pair quartic.
template <ExactField F>
struct PencilParams {
    F t;
    F alpha, beta, gamma, delta13, eps19, sigma3;
    F c, d;
    F A, B;            // fiber curve Y^2 = X^3 + A X + B
    F px, py;          // distinguished non-torsion section
    F t1x, t2x, t3x;   // full rational 2-torsion

    static PencilParams from(const F& t) {
        PencilParams P;
        P.t = t;
        P.alpha = F(3) * t * t + F(9) * t + F(7);
        P.beta = F(3) * t * t + F(6) * t + F(4);
        P.gamma = F(3) * t * t + F(3) * t + F(1);
        P.delta13 = F(3) * t * t + F(12) * t + F(13);
        P.eps19 = F(3) * t * t + F(15) * t + F(19);
        P.sigma3 = t * t + F(3) * t + F(3);
        P.c = (((F(99) * t + F(756)) * t + F(2253)) * t + F(3114)) * t + F(1709);
        P.c = P.c / F(3);
        P.d = F(36) * P.sigma3 * P.delta13 * P.eps19;
        F u = t * t + F(3) * t;
        F w1 = (F(9) * u + F(60)) * u + F(85);
        F w2 = (F(45) * u + F(192)) * u + F(227);
        F w3 = (F(63) * u + F(312)) * u + F(397);
        P.A = F(-27) * ((((F(1053) * u + F(10152)) * u + F(37530)) * u + F(62616)) * u +
                        F(39673));
        P.B = F(54) * w1 * w2 * w3;
        P.t1x = F(6) * w1;
        P.t2x = F(3) * w2;
        P.t3x = F(-3) * w3;
        P.px = F(-3) * ((((F(9) * t + F(108)) * t + F(357)) * t + F(468)) * t + F(229));
        P.py = F(54) * P.alpha * P.beta * P.eps19;
        return P;
    }

    ShortWCurve<F> curve() const { return ShortWCurve<F>(A, B); }
    ECPoint<F> section() const { return ECPoint<F>(px, py); }
    ECPoint<F> torsion1() const { return ECPoint<F>(t1x, F(0)); }

    // s^2 = 4 beta^2 v^4 + 8 beta eps19 v^3 - 4 m(t) v^2 + 4 alpha eps19 v
    //     + alpha^2, marked at (0, alpha)
    QuarticModel<F> quartic() const {
        F m = (((F(36) * t + F(243)) * t + F(618)) * t + F(702)) * t + F(313);
        return QuarticModel<F>{{alpha * alpha, F(4) * alpha * eps19, F(-4) * m,
                                F(8) * beta * eps19, F(4) * beta * beta}};
    }

    // conic coordinates traced by the line with slope parameter v
    std::array<F, 3> conic_coords(const F& v) const {
        F v2 = v * v;
        return {F(0) - alpha + F(4) * beta * v - F(2) * beta * v2,
                alpha - F(2) * alpha * v + F(2) * beta * v2, alpha - F(2) * beta * v2};
    }
};

// curve -> quartic; undefined at infinity and on the line X = 9c
template <ExactField F>
std::optional<QuarticPoint<F>> pencil_to_quartic(const PencilParams<F>& P,
                                                 const ECPoint<F>& W) {
    if (W.infinity) return std::nullopt;
    F shifted = W.x - F(9) * P.c;
    if (shifted == F(0)) return std::nullopt;
    F yterm = F(2) * W.y - F(27) * P.d;
    F v = (yterm - F(6) * P.eps19 * shifted) / (F(12) * P.beta * shifted);
    F s = (F(0) - yterm * yterm + F(4) * (F(2) * W.x + F(9) * P.c) * shifted * shifted) /
          (F(72) * P.beta * shifted * shifted);
    return QuarticPoint<F>{v, s};
}

// quartic -> curve (defined everywhere on the affine quartic)
template <ExactField F>
ECPoint<F> pencil_from_quartic(const PencilParams<F>& P, const QuarticPoint<F>& p) {
    F lin = F(2) * P.beta * p.v + P.eps19;
    F X = F(9) * P.beta * p.s + F(9) * (lin * lin - P.c) / F(2);
    F W = X - F(9) * P.c;
    F Y = (F(27) * P.d + (F(12) * P.beta * p.v + F(6) * P.eps19) * W) / F(2);
    return ECPoint<F>(X, Y);
}

// full fiber computation at a rational parameter
struct AP4Result {
    Rat t;
    bool retried_negation = false;
    std::array<BigInt, 4> quadruple;  // canonical
    Rat k;
    ShortWCurve<Rat> curve{Rat(0), Rat(1)};  // y^2 = x^3 + k
    Rat x_start, x_step;
    std::array<ECPoint<Rat>, 4> points;
};

// Runs the section through the correspondence and assembles the progression.
// The branch W = section + torsion1 can land on a degenerate quadruple (a
// singular point of the quadric surface); the mirror branch -W is then used
// and retried_negation records it. Throws domain_error if both branches
// degenerate (k = 0 fibers).
AP4Result ap4_pipeline(const Rat& t);
AP4Result ap4_from_point(const Rat& t, const ECPoint<Rat>& W);

// the same pipeline over the rational function field
struct SymbolicAP4 {
    std::array<RatFunc, 4> quadruple;  // exact rational functions of t
    bool retried_negation = false;
};
SymbolicAP4 ap4_pipeline_symbolic();

// closed forms in t
UniPoly pencil_scale_poly();                // 108(2t+3)(3t^2+9t+10)(6t^2+18t+17)
std::array<UniPoly, 4> quadruple_polys();   // quartic entries of the section's quadruple
UniPoly k_poly();                           // k(t) = 9 p^2 pq0^2 - t^3 p^3, degree 18
UniPoly octic(int which);                   // which = 1, 2: the square-marking octics
std::vector<Rat> k_zero_parameters();       // rational t with k(t) = 0

struct SquareHit {
    Rat t;
    int which;      // octic index
    BigInt value;   // the square octic value (cleared by b^8)
    bool k_zero;    // hit explained by a degenerate fiber
};
struct SquareSearchReport {
    long checked = 0;
    std::vector<SquareHit> hits;
};
// scan t = a/b with gcd(a,b) = 1, 1 <= b, max(|a|,|b|) <= height_bound
SquareSearchReport octic_square_search(long height_bound);

// machine checks of every identity the pipeline relies on
bool verify_pencil_identities();

}  // namespace apc
