#include "apc/family_cubic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "apc/factor.hpp"
#include "apc/multipoly.hpp"
#include "apc/poly.hpp"

namespace apc {

namespace {

BigInt sq(const BigInt& x) { return x * x; }

std::vector<BigInt> divisors_of(const BigInt& n) {
    Factorization f = factor_integer(abs(n));
    if (!f.complete()) throw std::runtime_error("divisors_of: incomplete factorization");
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : f.primes) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// rational root theorem on a nonzero polynomial
std::vector<Rat> rational_roots(const UniPoly& f) {
    UniPoly g = primitive_part(f);
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low <= static_cast<std::size_t>(g.degree()) && g.coeff(low) == 0) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        std::vector<Rat> shifted(g.coeffs().begin() + low, g.coeffs().end());
        g = UniPoly(shifted);
    }
    if (g.degree() < 1) return roots;
    BigInt c0 = to_bigint(g.coeff(0));
    BigInt cl = to_bigint(g.coeff(g.degree()));
    for (const BigInt& a : divisors_of(c0))
        for (const BigInt& b : divisors_of(cl)) {
            if (gcd(a, b) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * a, b);
                if (g.eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UniPoly upoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rat> c;
    for (long v : coeffs_low_first) c.push_back(Rat(v));
    return UniPoly(c);
}

// t^3 (p/9) - pq0^2, the non-obvious factor of k
UniPoly k_cofactor() {
    UniPoly t = UniPoly::var();
    return t.pow(3) * (pencil_scale_poly() * Rat(1, 9)) - quadruple_polys()[0].pow(2);
}

struct MPParams {
    MultiPoly t, alpha, beta, gamma, delta13, eps19, sigma3, c, d;
    MultiPoly quartic_c[5];
};

MPParams mp_params() {
    MPParams P;
    MultiPoly t = MultiPoly::variable("t");
    P.t = t;
    P.alpha = 3 * t * t + 9 * t + 7;
    P.beta = 3 * t * t + 6 * t + 4;
    P.gamma = 3 * t * t + 3 * t + 1;
    P.delta13 = 3 * t * t + 12 * t + 13;
    P.eps19 = 3 * t * t + 15 * t + 19;
    P.sigma3 = t * t + 3 * t + 3;
    P.c = ((((99 * t + 756) * t + 2253) * t + 3114) * t + 1709) * Rat(1, 3);
    P.d = 36 * P.sigma3 * P.delta13 * P.eps19;
    MultiPoly m = (((36 * t + 243) * t + 618) * t + 702) * t + 313;
    P.quartic_c[0] = P.alpha * P.alpha;
    P.quartic_c[1] = 4 * P.alpha * P.eps19;
    P.quartic_c[2] = -4 * m;
    P.quartic_c[3] = 8 * P.beta * P.eps19;
    P.quartic_c[4] = 4 * P.beta * P.beta;
    return P;
}

// fiber curve coefficients as polynomials in the variable of `u`
void mp_curve(const MultiPoly& u, MultiPoly& A, MultiPoly& B, MultiPoly w[3]) {
    w[0] = (9 * u + 60) * u + 85;
    w[1] = (45 * u + 192) * u + 227;
    w[2] = (63 * u + 312) * u + 397;
    A = -27 * ((((1053 * u + 10152) * u + 37530) * u + 62616) * u + 39673);
    B = 54 * w[0] * w[1] * w[2];
}

}  // namespace

QuadricValues quadric_values(const std::array<BigInt, 4>& q) {
    BigInt p2 = sq(q[0]), q2 = sq(q[1]), r2 = sq(q[2]), s2 = sq(q[3]);
    return {p2 - 3 * q2 + 3 * r2 - s2, 11 * p2 - 18 * q2 + 9 * r2 - 2 * s2,
            2 * p2 - 5 * q2 + 4 * r2 - s2};
}

bool on_quadric_surface(const std::array<BigInt, 4>& q) {
    QuadricValues v = quadric_values(q);
    return v.e1 * v.e2 == 3 * v.e3 * v.e3;
}

std::vector<std::array<BigInt, 4>> surface_singular_points() {
    std::vector<std::array<BigInt, 4>> pts;
    for (int mask = 0; mask < 16; ++mask)
        pts.push_back({mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1,
                       mask & 8 ? -1 : 1});
    return pts;
}

std::array<BigInt, 4> canonical_quadruple(const std::array<Rat, 4>& q) {
    BigInt scale = 1;
    for (const Rat& x : q) scale = lcm(scale, den(x));
    std::array<BigInt, 4> out;
    BigInt content = 0;
    for (int i = 0; i < 4; ++i) {
        out[i] = to_bigint(Rat(q[i] * Rat(scale)));
        content = gcd(content, out[i]);
    }
    if (content == 0) throw std::invalid_argument("canonical_quadruple: zero quadruple");
    int lead = 0;
    while (out[lead] == 0) ++lead;
    if (out[lead] < 0) content = -content;
    for (auto& x : out) x /= content;
    return out;
}

AP4Result ap4_from_point(const Rat& t, const ECPoint<Rat>& W) {
    PencilParams<Rat> P = PencilParams<Rat>::from(t);
    ShortWCurve<Rat> fiber = P.curve();
    if (!W.infinity && !fiber.contains(W))
        throw std::invalid_argument("ap4_from_point: point not on the fiber curve");
    bool retried = false;
    for (const ECPoint<Rat>& cand : {W, fiber.neg(W)}) {
        auto qp = pencil_to_quartic(P, cand);
        if (!qp) {
            retried = true;
            continue;
        }
        auto coords = P.conic_coords(qp->v);
        std::array<BigInt, 4> quad =
            canonical_quadruple({coords[0], coords[1], coords[2], qp->s});
        if (!on_quadric_surface(quad))
            throw std::logic_error("ap4_from_point: quadruple left the surface");
        if (quadric_values(quad).e1 == 0) {
            retried = true;
            continue;  // singular point of the surface, no cubic
        }
        std::array<Rat, 4> qr{Rat(quad[0]), Rat(quad[1]), Rat(quad[2]), Rat(quad[3])};
        CubicCurve<Rat> cubic = progression_cubic(qr);
        CubicWeierstrass<Rat> cw = cubic_to_weierstrass(cubic);
        if (cw.curve.A != 0)
            throw std::logic_error("ap4_from_point: nonzero quadratic twist term");
        AP4Result res;
        res.t = t;
        res.retried_negation = retried;
        res.quadruple = quad;
        res.k = cw.curve.B;
        res.curve = cw.curve;
        res.x_start = Rat(3) * cubic.b;
        res.x_step = Rat(9) * cubic.a;
        for (int i = 0; i < 4; ++i) {
            res.points[i] = cw.map(Rat(i), qr[i]);
            if (!res.curve.contains(res.points[i]))
                throw std::logic_error("ap4_from_point: progression point off curve");
        }
        return res;
    }
    throw std::domain_error("ap4_from_point: degenerate fiber at t = " + to_string(t));
}

AP4Result ap4_pipeline(const Rat& t) {
    PencilParams<Rat> P = PencilParams<Rat>::from(t);
    ShortWCurve<Rat> fiber = P.curve();
    return ap4_from_point(t, fiber.add(P.section(), P.torsion1()));
}

SymbolicAP4 ap4_pipeline_symbolic() {
    using F = RatFunc;
    PencilParams<F> P = PencilParams<F>::from(F::var());
    ShortWCurve<F> fiber = P.curve();
    ECPoint<F> W = fiber.add(P.section(), P.torsion1());
    SymbolicAP4 out;
    for (const ECPoint<F>& cand : {W, fiber.neg(W)}) {
        auto qp = pencil_to_quartic(P, cand);
        if (!qp) {
            out.retried_negation = true;
            continue;
        }
        auto coords = P.conic_coords(qp->v);
        std::array<F, 4> quad{coords[0], coords[1], coords[2], qp->s};
        F e1 = quad[0] * quad[0] - F(3) * quad[1] * quad[1] + F(3) * quad[2] * quad[2] -
               quad[3] * quad[3];
        if (e1.is_zero()) {
            out.retried_negation = true;
            continue;  // this branch collapses onto a singular point
        }
        out.quadruple = quad;
        return out;
    }
    throw std::logic_error("ap4_pipeline_symbolic: both branches degenerate");
}

UniPoly pencil_scale_poly() {
    return upoly({3, 2}) * upoly({10, 9, 3}) * upoly({17, 18, 6}) * Rat(108);
}

std::array<UniPoly, 4> quadruple_polys() {
    return {upoly({-73, -72, 30, 54, 18}), upoly({107, 210, 192, 90, 18}),
            upoly({233, 456, 354, 126, 18}), upoly({413, 738, 516, 162, 18})};
}

UniPoly k_poly() {
    UniPoly p = pencil_scale_poly();
    UniPoly t = UniPoly::var();
    return p.pow(2) * quadruple_polys()[0].pow(2) * Rat(9) - t.pow(3) * p.pow(3);
}

UniPoly octic(int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("octic: index must be 1 or 2");
    UniPoly base = quadruple_polys()[0].pow(2);
    UniPoly p9 = pencil_scale_poly() * Rat(1, 9);
    if (which == 1) return base - upoly({1, -3, 3}) * p9;
    return base + upoly({64, 48, 12}) * p9;
}

std::vector<Rat> k_zero_parameters() {
    std::vector<Rat> out{Rat(-3) / Rat(2)};
    for (const UniPoly& f : {upoly({10, 9, 3}), upoly({17, 18, 6}), k_cofactor()})
        for (const Rat& r : rational_roots(f)) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SquareSearchReport octic_square_search(long height_bound) {
    if (height_bound < 1) throw std::invalid_argument("octic_square_search: bound < 1");
    std::array<std::vector<BigInt>, 2> cleared;
    for (int which : {1, 2}) {
        std::vector<BigInt> c(9, BigInt(0));
        UniPoly f = octic(which);
        for (std::size_t i = 0; i <= 8; ++i) c[i] = to_bigint(f.coeff(i));
        cleared[which - 1] = c;
    }
    std::vector<Rat> zeros = k_zero_parameters();
    SquareSearchReport report;
    for (long b = 1; b <= height_bound; ++b) {
        for (long a = -height_bound; a <= height_bound; ++a) {
            if (gcd(BigInt(a), BigInt(b)) != 1) continue;
            ++report.checked;
            BigInt apow = 1;
            std::array<BigInt, 9> am, bm;
            for (int i = 0; i <= 8; ++i, apow *= a) am[i] = apow;
            BigInt bpow = 1;
            for (int i = 0; i <= 8; ++i, bpow *= b) bm[i] = bpow;
            for (int which : {1, 2}) {
                BigInt val = 0;
                for (int i = 0; i <= 8; ++i) val += cleared[which - 1][i] * am[i] * bm[8 - i];
                if (val < 0 || !is_perfect_square(val)) continue;
                Rat t = make_rat(a, b);
                bool kz = std::binary_search(zeros.begin(), zeros.end(), t);
                report.hits.push_back({t, which, val, kz});
            }
        }
    }
    return report;
}

bool verify_pencil_identities() {
    MPParams P = mp_params();
    MultiPoly t = P.t;

    // 2-torsion of the fiber curve: elementary symmetric functions
    {
        MultiPoly u = MultiPoly::variable("u"), A, B, w[3];
        mp_curve(u, A, B, w);
        MultiPoly x1 = 6 * w[0], x2 = 3 * w[1], x3 = -3 * w[2];
        if (!(x1 + x2 + x3).is_zero()) return false;
        if (!(x1 * x2 + x1 * x3 + x2 * x3 - A).is_zero()) return false;
        if (!(x1 * x2 * x3 + B).is_zero()) return false;
    }

    MultiPoly A, B, w[3];
    mp_curve(t * t + 3 * t, A, B, w);

    // the section lies on the fiber curve
    {
        MultiPoly px = -3 * ((((9 * t + 108) * t + 357) * t + 468) * t + 229);
        MultiPoly py = 54 * P.alpha * P.beta * P.eps19;
        if (!(py * py - px * px * px - A * px - B).is_zero()) return false;
    }

    MultiPoly v = MultiPoly::variable("v");
    MultiPoly cp = -P.alpha + 4 * P.beta * v - 2 * P.beta * v * v;
    MultiPoly cq = P.alpha - 2 * P.alpha * v + 2 * P.beta * v * v;
    MultiPoly cr = P.alpha - 2 * P.beta * v * v;
    MultiPoly quartic_rhs =
        (((P.quartic_c[4] * v + P.quartic_c[3]) * v + P.quartic_c[2]) * v + P.quartic_c[1]) *
            v +
        P.quartic_c[0];

    // the traced line satisfies the first conic
    if (!(-P.alpha * cp * cp + 2 * P.beta * cq * cq - P.gamma * cr * cr).is_zero())
        return false;
    // and the quartic ordinate closes the second conic over the same line
    if (!(-2 * P.delta13 * cp * cp + 9 * P.sigma3 * cq * cq - P.gamma * quartic_rhs)
             .is_zero())
        return false;

    // curve -> quartic lands on the quartic (modulo the curve equation)
    {
        MultiPoly X = MultiPoly::variable("X"), Y = MultiPoly::variable("Y");
        MultiPoly curve_rhs = X * X * X + A * X + B;
        MultiPoly S = X - 9 * P.c;
        MultiPoly yterm = 2 * Y - 27 * P.d;
        MultiPoly Nv = yterm - 6 * P.eps19 * S;
        MultiPoly Dv = 12 * P.beta * S;
        MultiPoly Ns = -yterm * yterm + 4 * (2 * X + 9 * P.c) * S * S;
        MultiPoly Ds = 72 * P.beta * S * S;
        MultiPoly rhs_cleared;
        MultiPoly Dv_pow = MultiPoly(1);
        for (int i = 4; i >= 0; --i) {
            rhs_cleared += P.quartic_c[static_cast<std::size_t>(i)] * Nv.pow(i) * Dv_pow;
            Dv_pow *= Dv;
        }
        MultiPoly lhs = Ns * Ns * Dv.pow(4) - Ds * Ds * rhs_cleared;
        if (!lhs.reduce_square("Y", curve_rhs).is_zero()) return false;
    }

    // quartic -> curve lands on the curve (modulo the quartic equation)
    {
        MultiPoly s = MultiPoly::variable("s");
        MultiPoly L = 2 * P.beta * v + P.eps19;
        MultiPoly X = 9 * P.beta * s + (L * L - P.c) * Rat(9, 2);
        MultiPoly W = X - 9 * P.c;
        MultiPoly Y = (27 * P.d + (12 * P.beta * v + 6 * P.eps19) * W) * Rat(1, 2);
        MultiPoly lhs = Y * Y - X * X * X - A * X - B;
        if (!lhs.reduce_square("s", quartic_rhs).is_zero()) return false;
    }

    // closed forms: the k polynomial factors through both octics
    {
        UniPoly tp = UniPoly::var();
        UniPoly p = pencil_scale_poly();
        UniPoly k = k_poly();
        UniPoly three_p_sq = (p * Rat(3)).pow(2);
        if ((p * upoly({-1, 1})).pow(3) + k != three_p_sq * octic(1)) return false;
        if ((p * upoly({4, 1})).pow(3) + k != three_p_sq * octic(2)) return false;
        if (k != p.pow(2) * quadruple_polys()[0].pow(2) * Rat(9) - tp.pow(3) * p.pow(3))
            return false;
    }

    // the closed-form quadruple generates the pure-cube fiber equation
    {
        using F = RatFunc;
        auto qp = quadruple_polys();
        std::array<F, 4> entries{F(qp[0]), F(qp[1]), F(qp[2]), F(qp[3])};
        CubicCurve<F> cubic = progression_cubic(entries);
        F p9 = F(pencil_scale_poly() * Rat(1, 9));
        F tv = F::var();
        if (!(cubic.a == p9 && cubic.b == F(3) * tv * p9 &&
              cubic.c == F(3) * tv * tv * p9 && cubic.d == entries[0] * entries[0]))
            return false;
        CubicWeierstrass<F> cw = cubic_to_weierstrass(cubic);
        if (!cw.curve.A.is_zero()) return false;
        if (!(cw.curve.B == F(k_poly()))) return false;
    }

    return true;
}

}  // namespace apc
