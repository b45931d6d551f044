#include "apc/heights.hpp"

#include <algorithm>
#include <cmath>

#include "apc/factor.hpp"

namespace apc {

namespace {

constexpr unsigned kSeriesTerms = 81;  // 4^-81 ~ 2^-162 tail weight

// x-coordinate duplication as a pair of degree-4 forms: x(2P) = F(a,b)/G(a,b)
// for x = a/b.
struct DupForms {
    BigInt A, B;

    BigInt F(const BigInt& a, const BigInt& b) const {
        BigInt a2 = a * a, b2 = b * b;
        return a2 * a2 - 2 * A * a2 * b2 - 8 * B * a * b * b2 + A * A * b2 * b2;
    }
    BigInt G(const BigInt& a, const BigInt& b) const {
        return 4 * b * (a * a * a + A * a * b * b + B * b * b * b);
    }
    UniPoly Fx() const {  // F(x, 1)
        return UniPoly(std::vector<Rat>{Rat(A * A), Rat(-8 * B), Rat(-2 * A), Rat(0), Rat(1)});
    }
    UniPoly Gx() const {  // G(x, 1)
        return UniPoly(std::vector<Rat>{Rat(4 * B), Rat(4 * A), Rat(0), Rat(4)});
    }
    UniPoly Fy() const {  // F(1, y)
        return UniPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(-2 * A), Rat(-8 * B), Rat(A * A)});
    }
    UniPoly Gy() const {  // G(1, y)
        return UniPoly(std::vector<Rat>{Rat(0), Rat(4), Rat(0), Rat(4 * A), Rat(4 * B)});
    }
};

Rat l1_norm(const UniPoly& p) {
    Rat s(0);
    for (const Rat& c : p.coeffs()) s += abs(c);
    return s;
}

// log(|u|_1 + |v|_1) for the Bezout pair u f + v g = 1; on the chart |x| <= 1
// this bounds max(|f(x)|, |g(x)|) >= 1/(|u|_1 + |v|_1), so the return value
// bounds |log max| from below in magnitude
double chart_log_ceiling(const UniPoly& f, const UniPoly& g) {
    auto e = poly_ext_gcd(f, g);
    if (e.g.degree() != 0)
        throw std::logic_error("duplication forms share a root on a nonsingular curve");
    Rat s = l1_norm(e.u) + l1_norm(e.v);
    return std::log(BigFloat::from(s, 64).to_double());
}

// v_p of a nonzero residue, capped by the working precision
unsigned long capped_valuation(const BigInt& r, const BigInt& p, unsigned long cap) {
    if (r == 0) return cap;
    unsigned long v = valuation(r, p);
    return std::min(v, cap);
}

// sum over j>=1 of 4^-j v_p(gcd) along the p-adic duplication dynamics,
// returned as an exact rational multiple of log p
Rat nonarch_series(const DupForms& d, const BigInt& a0, const BigInt& b0, const BigInt& p,
                   unsigned long vR) {
    unsigned long prec = kSeriesTerms * vR + 64;
    BigInt mod = pow_int(p, prec);
    BigInt a = ((a0 % mod) + mod) % mod;
    BigInt b = ((b0 % mod) + mod) % mod;

    Rat total(0);
    Rat weight(1);
    const Rat quarter = make_rat(1, 4);
    for (unsigned j = 1; j <= kSeriesTerms; ++j) {
        weight *= quarter;
        BigInt f = d.F(a, b) % mod, g = d.G(a, b) % mod;
        unsigned long vf = capped_valuation(f, p, prec);
        unsigned long vg = capped_valuation(g, p, prec);
        unsigned long delta = std::min(vf, vg);
        if (delta >= prec)
            throw std::logic_error("heights: p-adic working precision exhausted");
        if (delta > 0) {
            BigInt pd = pow_int(p, delta);
            f /= pd;
            g /= pd;
            prec -= delta;
            mod /= pd;
            f %= mod;
            g %= mod;
            total += weight * Rat(static_cast<long>(delta));
        }
        a = f;
        b = g;
    }
    return total;
}

}  // namespace

CanonicalHeight canonical_height(const ShortWCurve<Rat>& curve, const ECPoint<Rat>& point,
                                 mpfr_prec_t prec) {
    // the series needs integer curve coefficients; the height is invariant
    // under the (d^2, d^3) rescaling
    ShortWCurve<Rat> c = curve;
    ECPoint<Rat> p = point;
    if (!is_integer(c.A) || !is_integer(c.B)) {
        IntegralModel m = integral_model(c);
        p = m.map_point(p);
        c = m.curve;
    }

    CanonicalHeight out;
    out.precision_bits = prec;
    mpfr_prec_t wp = prec + 64;

    auto exact_zero = [&]() {
        out.value_big = BigFloat(wp);
        out.value_small = BigFloat(wp);
        out.exact_zero = true;
        out.error_bound = 0.0;
        return out;
    };

    // torsion points have height exactly zero; over Q the order is at most 12
    // (Mazur), so an exact sweep of small multiples settles it
    ECPoint<Rat> q = p;
    for (int m = 1; m <= 12; ++m) {
        if (q.infinity) return exact_zero();
        if (q.y == 0) return exact_zero();  // q is 2-torsion, so p is torsion
        q = c.add(q, p);
    }

    DupForms d{to_bigint(c.A), to_bigint(c.B)};

    // prime support of the gcd dynamics = primes of Res(F(x,1), G(x,1))
    Rat res = resultant(d.Fx(), d.Gx());
    BigInt R = abs(num(res));
    Factorization fact = factor_integer(R);
    if (!fact.complete())
        throw budget_error("heights: duplication resultant has unfactored cofactor " +
                           to_string(*fact.cofactor));

    const BigInt a0 = num(p.x), b0 = den(p.x);

    // archimedean part: renormalized real dynamics
    BigFloat lam(wp);
    BigInt m0 = std::max(abs(a0), abs(b0));
    lam = BigFloat::from(m0, wp).log();
    BigFloat fa = BigFloat::from(a0, wp) / BigFloat::from(m0, wp);
    BigFloat fb = BigFloat::from(b0, wp) / BigFloat::from(m0, wp);
    BigFloat A = BigFloat::from(d.A, wp), B = BigFloat::from(d.B, wp);
    BigFloat two = BigFloat::from(2.0, wp), four = BigFloat::from(4.0, wp), eight = BigFloat::from(8.0, wp);
    for (unsigned j = 1; j <= kSeriesTerms; ++j) {
        BigFloat a2 = fa * fa, b2 = fb * fb;
        BigFloat F = a2 * a2 - two * A * a2 * b2 - eight * B * fa * fb * b2 + A * A * b2 * b2;
        BigFloat G = four * fb * (fa * fa * fa + A * fa * b2 + B * fb * b2);
        BigFloat m = BigFloat::max(F.abs(), G.abs());
        lam += m.log().mul_2si(-2 * static_cast<long>(j));
        fa = F / m;
        fb = G / m;
    }

    // subtract the non-archimedean corrections
    double nonarch_tail = 0.0;
    for (const auto& [prime, e] : fact.primes) {
        unsigned long vR = valuation(R, prime);
        Rat series = nonarch_series(d, a0, b0, prime, vR);
        BigFloat logp = BigFloat::from(prime, wp).log();
        lam -= BigFloat::from(series, wp) * logp;
        nonarch_tail += static_cast<double>(vR) * logp.to_double() *
                        std::ldexp(4.0 / 3.0, -2 * static_cast<int>(kSeriesTerms));
    }

    // archimedean tail: bound |log m_j| on the renormalized compact set. The
    // iterate lives in one of the two charts, so the worse chart bound applies.
    Rat up = l1_norm(d.Fx()) + l1_norm(d.Gx()) + Rat(1);
    double log_up = std::log(BigFloat::from(up, 64).to_double());
    double log_lo =
        std::max(chart_log_ceiling(d.Fx(), d.Gx()), chart_log_ceiling(d.Fy(), d.Gy()));
    double arch_bound = std::max(std::fabs(log_lo), std::fabs(log_up));
    double arch_tail = std::ldexp(arch_bound * 4.0 / 3.0, -2 * static_cast<int>(kSeriesTerms));

    out.value_big = lam;
    out.value_small = lam.mul_2si(-1);
    out.error_bound = arch_tail + nonarch_tail + std::ldexp(1.0, -64);
    return out;
}

BigFloat naive_height_limit_term(const ShortWCurve<Rat>& curve, const ECPoint<Rat>& point,
                                 unsigned doublings, mpfr_prec_t prec) {
    ShortWCurve<Rat> c = curve;
    ECPoint<Rat> p = point;
    if (!is_integer(c.A) || !is_integer(c.B)) {
        IntegralModel m = integral_model(c);
        p = m.map_point(p);
        c = m.curve;
    }
    for (unsigned i = 0; i < doublings; ++i) p = c.dbl(p);
    if (p.infinity) return BigFloat(prec);
    BigInt m = std::max(abs(num(p.x)), abs(den(p.x)));
    return BigFloat::from(m, prec).log().mul_2si(-2 * static_cast<long>(doublings));
}

namespace {

// exact determinant of the dyadic snapshots of the entries
Rat exact_det(const std::vector<std::vector<Rat>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> a = m;
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

double factorial(unsigned n) {
    double f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

HeightMatrix height_pairing_matrix(const ShortWCurve<Rat>& c,
                                   const std::vector<ECPoint<Rat>>& pts, mpfr_prec_t prec) {
    std::size_t n = pts.size();
    HeightMatrix out;
    out.precision_bits = prec;
    mpfr_prec_t wp = prec + 64;

    std::vector<CanonicalHeight> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = canonical_height(c, pts[i], prec);

    double e_h = 0;
    for (auto& x : h) e_h = std::max(e_h, x.error_bound);

    out.entries_big.assign(n, std::vector<BigFloat>(n, BigFloat(wp)));
    double e_entry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.entries_big[i][i] = h[i].value_big;
        e_entry = std::max(e_entry, h[i].error_bound);
        for (std::size_t j = i + 1; j < n; ++j) {
            CanonicalHeight hs = canonical_height(c, c.add(pts[i], pts[j]), prec);
            BigFloat v = (hs.value_big - h[i].value_big - h[j].value_big).mul_2si(-1);
            out.entries_big[i][j] = v;
            out.entries_big[j][i] = v;
            e_entry = std::max(e_entry, (hs.error_bound + 2 * e_h) / 2.0);
        }
    }
    out.entry_error = e_entry;

    std::vector<std::vector<Rat>> snap(n, std::vector<Rat>(n));
    double mmax = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            snap[i][j] = out.entries_big[i][j].to_rat_exact();
            mmax = std::max(mmax, std::fabs(out.entries_big[i][j].to_double()));
        }
    Rat det = exact_det(snap);
    out.det_big = BigFloat::from(det, wp);
    out.det_small = out.det_big.mul_2si(-static_cast<long>(n));
    out.det_error = n * factorial(static_cast<unsigned>(n)) *
                    std::pow(mmax + e_entry, static_cast<double>(n - 1)) * e_entry;
    return out;
}

IndependenceResult certify_independent(const ShortWCurve<Rat>& c,
                                       const std::vector<ECPoint<Rat>>& pts, mpfr_prec_t prec) {
    HeightMatrix m = height_pairing_matrix(c, pts, prec);
    double det = m.det_big.to_double();
    IndependenceVerdict v = det > m.det_error ? IndependenceVerdict::independent
                                              : IndependenceVerdict::indeterminate;
    return {v, std::move(m)};
}

}  // namespace apc
