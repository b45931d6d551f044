#include "apc/transforms.hpp"

#include "apc/multipoly.hpp"

namespace apc {

bool verify_cubic_map_identity() {
    MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b");
    MultiPoly c = MultiPoly::variable("c"), d = MultiPoly::variable("d");
    MultiPoly x = MultiPoly::variable("x");

    MultiPoly X = 9 * (a * x) + 3 * b;
    // Y^2 = (27a)^2 y^2 = 729 a^2 (a x^3 + b x^2 + c x + d)
    MultiPoly Y2 = 729 * (a * a) * (a * x.pow(3) + b * x.pow(2) + c * x + d);
    MultiPoly A = 27 * (3 * (a * c) - b * b);
    MultiPoly B = 27 * (27 * (a * a * d) - 9 * (a * b * c) + 2 * b.pow(3));
    return (Y2 - (X.pow(3) + A * X + B)).is_zero();
}

bool verify_long_cubic_map_identity() {
    MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b");
    MultiPoly c = MultiPoly::variable("c"), d = MultiPoly::variable("d");
    MultiPoly e = MultiPoly::variable("e"), x = MultiPoly::variable("x");

    MultiPoly g = b * x.pow(3) + c * x.pow(2) + d * x + e;
    MultiPoly X = 12 * (c + 3 * (b * x));
    // Y = 108 b (a + 2y) and (a + 2y)^2 = 4g + a^2 on the curve
    MultiPoly Y2 = 11664 * (b * b) * (4 * g + a * a);
    MultiPoly A = -432 * (c * c - 3 * (b * d));
    MultiPoly B = 432 * (27 * (a * a * b * b) + 8 * c.pow(3) - 36 * (b * c * d) +
                         108 * (b * b * e));
    return (Y2 - (X.pow(3) + A * X + B)).is_zero();
}

bool verify_quartic_reduction_identity() {
    MultiPoly a1 = MultiPoly::variable("a1"), a2 = MultiPoly::variable("a2");
    MultiPoly a3 = MultiPoly::variable("a3"), a4 = MultiPoly::variable("a4");
    MultiPoly q = MultiPoly::variable("q"), v = MultiPoly::variable("v");
    MultiPoly s = MultiPoly::variable("s");

    MultiPoly f = a4 * v.pow(4) + a3 * v.pow(3) + a2 * v.pow(2) + a1 * v + q * q;

    // Part 1: with G = 2q s - 2q^2 - a1 v (= 2q(s - T), so w = G/(2q v^2)),
    // the v-quadratic times 4 q^2 v^4 must vanish modulo s^2 = f(v):
    //   G^2 v^2 - 4q^2 a4 v^6 + 2 a1 v^3 G - 4 a3 q^2 v^5
    //   + 4 q^2 v^2 G - 4 a2 q^2 v^4 + a1^2 v^4  ==  4 q^2 v^2 (s^2 - f(v))
    MultiPoly G = 2 * (q * s) - 2 * (q * q) - a1 * v;
    MultiPoly lhs = G * G * v.pow(2) - 4 * (q * q * a4) * v.pow(6) +
                    2 * (a1 * G) * v.pow(3) - 4 * (a3 * q * q) * v.pow(5) +
                    4 * (q * q) * v.pow(2) * G - 4 * (a2 * q * q) * v.pow(4) +
                    a1.pow(2) * v.pow(4);
    if (!lhs.reduce_square("s", f).is_zero()) return false;

    // Part 2: the discriminant identity defining z. For the quadratic
    // P2 v^2 + P1 v + P0 with P2 = w^2 - a4, P1 = a1 w/q - a3,
    // P0 = 2qw - a2 + a1^2/4q^2 (cleared by 4q^2 where needed):
    //   (2 P2 v + P1)^2 = P1^2 - 4 P2 P0 + 4 P2 (P2 v^2 + P1 v + P0).
    MultiPoly w = MultiPoly::variable("w");
    // cleared forms: p1c = 4q^2 P1 / (4q^2) ... work with 2q-cleared pieces:
    // P1 * q = a1 w - a3 q, P0 * 4q^2 = 8q^3 w - 4 a2 q^2 + a1^2
    MultiPoly P2 = w * w - a4;
    MultiPoly P1q = a1 * w - a3 * q;           // q * P1
    MultiPoly P0q = 8 * (q.pow(3) * w) - 4 * (a2 * q * q) + a1 * a1;  // 4q^2 * P0
    // multiply the identity by 4 q^2:
    MultiPoly left = (2 * (P2 * v) * q + P1q).pow(2) * 4;
    MultiPoly right = 4 * P1q.pow(2) - 4 * (P2 * P0q) +
                      P2 * (4 * (P2 * (v * v)) * 4 * (q * q) + 4 * (P1q * v) * 4 * q +
                            4 * P0q) ;
    if (!(left - right).is_zero()) return false;

    // Part 3: the depression X = u + c2/3 of t^2 = u^3 + c2 u^2 + c1 c3 u
    // + c0 c3^2 yields A = c1 c3 - c2^2/3, B = 2 c2^3/27 - c1 c2 c3/3
    // + c0 c3^2 (cleared by 27).
    MultiPoly c0 = MultiPoly::variable("c0"), c1 = MultiPoly::variable("c1");
    MultiPoly c2 = MultiPoly::variable("c2"), c3 = MultiPoly::variable("c3");
    MultiPoly u = MultiPoly::variable("u");
    MultiPoly X3 = 3 * u + c2;  // 3X
    MultiPoly A27 = 9 * (c1 * c3) - 3 * (c2 * c2);            // 9A
    MultiPoly B27 = 2 * c2.pow(3) - 9 * (c1 * c2 * c3) + 27 * (c0 * c3 * c3);  // 27B
    MultiPoly cubic27 = 27 * (u.pow(3) + c2 * u.pow(2) + c1 * c3 * u + c0 * (c3 * c3));
    return (X3.pow(3) + A27 * X3 + B27 - cubic27).is_zero();
}

}  // namespace apc
