#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "apc/curve.hpp"
#include "apc/ratfunc.hpp"

namespace apc {

// y^2 = a x^3 + b x^2 + c x + d with a != 0
template <ExactField F>
struct CubicCurve {
    F a, b, c, d;

    F rhs(const F& x) const { return ((a * x + b) * x + c) * x + d; }
    bool contains(const F& x, const F& y) const { return y * y == rhs(x); }
};

// Weierstrass form of a cubic under (X, Y) = (9a x + 3b, 27a y):
//   Y^2 = X^3 + 27(3ac - b^2) X + 27(27a^2 d - 9abc + 2b^3)
template <ExactField F>
struct CubicWeierstrass {
    ShortWCurve<F> curve;
    F a, b;

    ECPoint<F> map(const F& x, const F& y) const {
        return ECPoint<F>(F(9) * a * x + F(3) * b, F(27) * a * y);
    }
    std::pair<F, F> unmap(const ECPoint<F>& p) const {
        if (p.infinity) throw std::invalid_argument("CubicWeierstrass::unmap at infinity");
        return {(p.x - F(3) * b) / (F(9) * a), p.y / (F(27) * a)};
    }
};

template <ExactField F>
CubicWeierstrass<F> cubic_to_weierstrass(const CubicCurve<F>& c) {
    if (c.a == F(0)) throw std::invalid_argument("cubic_to_weierstrass: zero leading coefficient");
    F A = F(27) * (F(3) * c.a * c.c - c.b * c.b);
    F B = F(27) * (F(27) * c.a * c.a * c.d - F(9) * c.a * c.b * c.c + F(2) * c.b * c.b * c.b);
    return {ShortWCurve<F>(A, B), c.a, c.b};
}

// y^2 + a y = b x^3 + c x^2 + d x + e with b != 0
template <ExactField F>
struct LongCubic {
    F a, b, c, d, e;

    bool contains(const F& x, const F& y) const {
        return y * y + a * y == ((b * x + c) * x + d) * x + e;
    }
};

// Weierstrass form of a long cubic under (X, Y) = (12(c + 3bx), 108b(a + 2y)):
//   Y^2 = X^3 - 432(c^2 - 3bd) X + 432(27a^2 b^2 + 8c^3 - 36bcd + 108b^2 e)
template <ExactField F>
struct LongCubicWeierstrass {
    ShortWCurve<F> curve;
    F a, b, c;

    ECPoint<F> map(const F& x, const F& y) const {
        return ECPoint<F>(F(12) * (c + F(3) * b * x), F(108) * b * (a + F(2) * y));
    }
    std::pair<F, F> unmap(const ECPoint<F>& p) const {
        if (p.infinity) throw std::invalid_argument("LongCubicWeierstrass::unmap at infinity");
        F x = (p.x - F(12) * c) / (F(36) * b);
        F y = (p.y / (F(108) * b) - a) / F(2);
        return {x, y};
    }
};

template <ExactField F>
LongCubicWeierstrass<F> long_cubic_to_weierstrass(const LongCubic<F>& c) {
    if (c.b == F(0))
        throw std::invalid_argument("long_cubic_to_weierstrass: zero leading coefficient");
    F A = F(-432) * (c.c * c.c - F(3) * c.b * c.d);
    F B = F(432) * (F(27) * c.a * c.a * c.b * c.b + F(8) * c.c * c.c * c.c -
                    F(36) * c.b * c.c * c.d + F(108) * c.b * c.b * c.e);
    return {ShortWCurve<F>(A, B), c.a, c.b, c.c};
}

template <ExactField F>
struct QuarticPoint {
    F v, s;
};

// s^2 = c4 v^4 + c3 v^3 + c2 v^2 + c1 v + c0, coefficients lowest-first
template <ExactField F>
struct QuarticModel {
    std::array<F, 5> c;

    F rhs(const F& v) const {
        return (((c[4] * v + c[3]) * v + c[2]) * v + c[1]) * v + c[0];
    }
    bool contains(const QuarticPoint<F>& p) const { return p.s * p.s == rhs(p.v); }
};

// Birational correspondence between a quartic model and a Weierstrass curve.
// Either direction returns nullopt on its exceptional locus (or off-curve
// input).
template <ExactField F>
struct BirMapPair {
    QuarticModel<F> quartic;
    ShortWCurve<F> curve;
    std::function<std::optional<ECPoint<F>>(const QuarticPoint<F>&)> to_curve;
    std::function<std::optional<QuarticPoint<F>>(const ECPoint<F>&)> from_curve;
    std::string to_curve_desc, from_curve_desc;
};

// Reduction of a marked quartic s^2 = a4 v^4 + a3 v^3 + a2 v^2 + a1 v + q^2
// with the marked point (0, q), q != 0. Writing T = q + (a1/2q) v and
// w = (s - T)/v^2, the pair (v, s) satisfies the v-quadratic
//   (w^2 - a4) v^2 + (a1 w / q - a3) v + (2qw - a2 + a1^2/4q^2) = 0,
// whose discriminant gives z^2 = -8q w^3 + 4 a2 w^2 + (8q a4 - 2 a1 a3/q) w
// + (a3^2 - 4 a2 a4 + a1^2 a4 / q^2) with z = 2(w^2 - a4) v + a1 w/q - a3;
// the cubic is then scaled and depressed to short Weierstrass form. The
// marked point lands at w0 = (4 a2 q^2 - a1^2)/(8 q^3), z0 = a1 w0/q - a3,
// and (0, -q) corresponds to the point at infinity.
template <ExactField F>
BirMapPair<F> generic_quartic_reduce(const QuarticModel<F>& quartic, const F& q) {
    if (q == F(0)) throw std::invalid_argument("generic_quartic_reduce: marked s must be nonzero");
    if (!(quartic.c[0] == q * q))
        throw std::invalid_argument("generic_quartic_reduce: constant term is not q^2");
    const F a1 = quartic.c[1], a2 = quartic.c[2], a3 = quartic.c[3], a4 = quartic.c[4];

    const F c3 = F(-8) * q;
    const F c2 = F(4) * a2;
    const F c1 = F(8) * q * a4 - F(2) * a1 * a3 / q;
    const F c0 = a3 * a3 - F(4) * a2 * a4 + a1 * a1 * a4 / (q * q);
    const F shift = c2 / F(3);

    F A = c1 * c3 - c2 * c2 / F(3);
    F B = F(2) * c2 * c2 * c2 / F(27) - c1 * c2 * c3 / F(3) + c0 * c3 * c3;

    BirMapPair<F> out{quartic, ShortWCurve<F>(A, B), nullptr, nullptr,
                      "w = (s - q - a1 v/2q)/v^2, X = -8q w + 4a2/3, "
                      "Y = -8q (2(w^2 - a4) v + a1 w/q - a3)",
                      "w = (X - 4a2/3)/(-8q), v = (Y/(-8q) + a3 - a1 w/q)/(2(w^2 - a4)), "
                      "s = q + a1 v/2q + w v^2"};

    QuarticModel<F> qm = quartic;
    out.to_curve = [=](const QuarticPoint<F>& p) -> std::optional<ECPoint<F>> {
        if (!qm.contains(p)) return std::nullopt;
        F w;
        if (p.v == F(0)) {
            if (p.s == F(0) - q) return ECPoint<F>::inf();
            w = (F(4) * a2 * q * q - a1 * a1) / (F(8) * q * q * q);
        } else {
            F T = q + a1 * p.v / (F(2) * q);
            w = (p.s - T) / (p.v * p.v);
        }
        F z = F(2) * (w * w - a4) * p.v + a1 * w / q - a3;
        return ECPoint<F>(c3 * w + shift, c3 * z);
    };
    ShortWCurve<F> curve = out.curve;
    out.from_curve = [=](const ECPoint<F>& p) -> std::optional<QuarticPoint<F>> {
        if (p.infinity) return QuarticPoint<F>{F(0), F(0) - q};
        if (!curve.contains(p)) return std::nullopt;
        F w = (p.x - shift) / c3;
        F z = p.y / c3;
        if (w * w == a4) return std::nullopt;
        F v = (z + a3 - a1 * w / q) / (F(2) * (w * w - a4));
        F s = q + a1 * v / (F(2) * q) + w * v * v;
        return QuarticPoint<F>{v, s};
    };
    return out;
}

// 1728 * 4A^3 / (4A^3 + 27B^2)
template <ExactField F>
F j_invariant(const ShortWCurve<F>& c) {
    F num = F(4) * c.A * c.A * c.A;
    return F(1728) * num / (num + F(27) * c.B * c.B);
}

// Machine checks of the hand-derived formulas above, as polynomial identities
// with all parameters symbolic.
bool verify_cubic_map_identity();
bool verify_long_cubic_map_identity();
bool verify_quartic_reduction_identity();

}  // namespace apc
