#include "apc/curve.hpp"

#include <algorithm>
#include <map>

#include "apc/factor.hpp"

namespace apc {

namespace {

BigInt cubic_eval(const BigInt& z, const BigInt& P, const BigInt& Q) {
    return z * z * z + P * z + Q;
}

// one monotone interval [lo, hi]: returns the integer root if the sign
// changes (or an endpoint vanishes)
void bisect_root(BigInt lo, BigInt hi, const BigInt& P, const BigInt& Q,
                 std::vector<BigInt>& out) {
    if (lo > hi) return;
    BigInt flo = cubic_eval(lo, P, Q), fhi = cubic_eval(hi, P, Q);
    if (flo == 0) out.push_back(lo);
    if (fhi == 0 && hi != lo) out.push_back(hi);
    if (flo == 0 || fhi == 0) return;
    if ((flo < 0) == (fhi < 0)) return;
    bool rising = flo < 0;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        BigInt fm = cubic_eval(mid, P, Q);
        if (fm == 0) {
            out.push_back(mid);
            return;
        }
        if ((fm < 0) == rising) lo = mid;
        else hi = mid;
    }
}

}  // namespace

std::vector<BigInt> integer_roots_monic_cubic(const BigInt& P, const BigInt& Q) {
    std::vector<BigInt> roots;
    BigInt M = 1 + std::max(abs(P), abs(Q));  // Cauchy bound for monic cubics
    if (P >= 0) {
        bisect_root(-M, M, P, Q, roots);
    } else {
        // critical points at +-sqrt(-P/3); pad by 2 and test the pads directly
        BigInt c0 = isqrt(BigInt(-P / 3));
        BigInt lo_pad = -(c0 + 2), hi_pad = c0 + 2;
        for (BigInt z = lo_pad; z <= lo_pad + 4; ++z)
            if (cubic_eval(z, P, Q) == 0) roots.push_back(z);
        for (BigInt z = hi_pad - 4; z <= hi_pad; ++z)
            if (cubic_eval(z, P, Q) == 0) roots.push_back(z);
        bisect_root(-M, lo_pad, P, Q, roots);           // rising tail
        bisect_root(lo_pad + 4, hi_pad - 4, P, Q, roots);  // falling middle
        bisect_root(hi_pad, M, P, Q, roots);            // rising tail
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rat> two_torsion_x(const ShortWCurve<Rat>& c) {
    BigInt L = lcm(den(c.A), den(c.B));
    // z = Lx turns x^3 + Ax + B into the monic integer cubic z^3 + AL^2 z + BL^3
    BigInt P = to_bigint(c.A * Rat(L * L));
    BigInt Q = to_bigint(c.B * Rat(L * L * L));
    std::vector<Rat> xs;
    for (const BigInt& z : integer_roots_monic_cubic(P, Q)) xs.push_back(make_rat(z, L));
    std::sort(xs.begin(), xs.end());
    return xs;
}

IntegralModel integral_model(const ShortWCurve<Rat>& c) {
    BigInt dA = den(c.A), dB = den(c.B);
    BigInt d = 1;
    auto account = [&](const BigInt& block, unsigned eA, unsigned eB) {
        unsigned long need = std::max((eA + 3ul) / 4ul, (eB + 5ul) / 6ul);
        d *= pow_int(block, need);
    };
    // collect the prime support of both denominators; an unfactored cofactor
    // block is treated like a prime, which still clears (possibly non-minimally)
    Factorization fA = factor_integer(dA), fB = factor_integer(dB);
    std::map<BigInt, std::pair<unsigned, unsigned>> support;
    for (auto& [p, e] : fA.primes) support[p].first += e;
    for (auto& [p, e] : fB.primes) support[p].second += e;
    if (fA.cofactor) support[*fA.cofactor].first += 1;
    if (fB.cofactor) support[*fB.cofactor].second += 1;
    for (auto& [p, ee] : support) account(p, ee.first, ee.second);

    Rat d4(pow_int(d, 4)), d6(pow_int(d, 6));
    return IntegralModel{ShortWCurve<Rat>(c.A * d4, c.B * d6), d};
}

}  // namespace apc
