#include "apc/factor.hpp"

#include <algorithm>
#include <map>

namespace apc {

BigInt Factorization::recompose_magnitude() const {
    BigInt m = 1;
    for (const auto& [p, e] : primes) m *= pow_int(p, e);
    if (cofactor) m *= *cofactor;
    return m;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    if (a % n == 0) return false;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned long s = valuation(d, 2);
    d >>= s;

    static const BigInt kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit) {
        for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (miller_rabin_witness(n, BigInt(a), d, s)) return false;
        return true;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedau);
    for (int round = 0; round < 64; ++round) {
        BigInt a = rng.get_z_range(n - 3) + 2;
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho with gcd batching. Returns a proper
// factor or nullopt when the iteration budget is used up.
std::optional<BigInt> brent_rho(const BigInt& n, std::uint64_t& budget) {
    for (unsigned long c = 1; budget > 0; c += 2) {
        BigInt y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long lim = batch;
                if (r - k < lim) lim = mpz_get_ui(BigInt(r - k).get_mpz_t());
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = (q * diff) % n;
                }
                if (budget < lim) budget = 0; else budget -= lim;
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time to find the factor the batch skipped
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                BigInt diff = x - ys;
                if (diff < 0) diff = -diff;
                g = gcd(diff, n);
            }
        }
        if (g != n && g != 1) return g;
        // g == n: cycle degenerated for this c, try the next polynomial
    }
    return std::nullopt;
}

}  // namespace

Factorization factor_integer(const BigInt& n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero input");
    BigInt m = abs(n);

    std::map<BigInt, unsigned> found;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) found[p] += e;
    };

    strip(2);
    strip(3);
    for (unsigned long d = 5; d <= budget.trial_bound && BigInt(d) * d <= m; d += 6) {
        strip(BigInt(d));
        strip(BigInt(d + 2));
    }
    if (m > 1 && m <= BigInt(budget.trial_bound) * budget.trial_bound) {
        // below the square of the trial bound, whatever survives is prime
        found[m] += 1;
        m = 1;
    }

    std::uint64_t rho_left = budget.rho_iterations;
    std::vector<std::pair<BigInt, unsigned>> work;  // composite, multiplicity
    std::optional<BigInt> stuck;
    if (m > 1) work.push_back({m, 1});

    while (!work.empty()) {
        auto [c, mult] = work.back();
        work.pop_back();

        if (is_probable_prime(c)) {
            found[c] += mult;
            continue;
        }
        // peel perfect powers first: rho on p^k tends to find p^k itself
        bool reduced = false;
        for (unsigned long e = mpz_sizeinbase(c.get_mpz_t(), 2); e >= 2 && !reduced; --e) {
            if (auto r = perfect_root(c, e)) {
                work.push_back({*r, mult * static_cast<unsigned>(e)});
                reduced = true;
            }
        }
        if (reduced) continue;

        auto f = brent_rho(c, rho_left);
        if (!f) {
            stuck = stuck ? *stuck * pow_int(c, mult) : pow_int(c, mult);
            continue;
        }
        work.push_back({*f, mult});
        work.push_back({c / *f, mult});
    }

    Factorization out;
    for (auto& [p, e] : found) out.primes.push_back({p, e});
    out.cofactor = stuck;
    return out;
}

}  // namespace apc
