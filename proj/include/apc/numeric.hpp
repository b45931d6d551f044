#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace apc {

using BigInt = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; every rational built from parts must
// go through here (or call canonicalize itself).
inline Rat make_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long n, long d) { return make_rat(BigInt(n), BigInt(d)); }

inline BigInt num(const Rat& q) { return q.get_num(); }
inline BigInt den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline BigInt to_bigint(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_bigint: " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline BigInt parse_bigint(const std::string& s) {
    BigInt n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("parse_bigint: bad integer '" + s + "'");
    return n;
}

// Accepts "n" or "n/d".
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("pow_rat: zero to negative power");
        return pow_rat(Rat(1) / base, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;  // base canonical => powers canonical
}

// Exact e-th root of an integer if one exists. Even e demands x >= 0 and
// returns the nonnegative root; odd e follows the sign of x.
inline std::optional<BigInt> perfect_root(const BigInt& x, unsigned long e) {
    if (e == 0) throw std::invalid_argument("perfect_root: zeroth root");
    if (e == 1) return x;
    if (x < 0) {
        if (e % 2 == 0) return std::nullopt;
        auto r = perfect_root(-x, e);
        if (!r) return std::nullopt;
        return -*r;
    }
    BigInt r;
    int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), e);
    if (!exact) return std::nullopt;
    return r;
}

// Exact e-th root of a rational (numerator and denominator separately; valid
// because the input is canonical).
inline std::optional<Rat> perfect_power_root(const Rat& x, unsigned long e) {
    auto n = perfect_root(num(x), e);
    if (!n) return std::nullopt;
    auto d = perfect_root(den(x), e);
    if (!d) return std::nullopt;
    return make_rat(*n, *d);
}

inline bool is_perfect_square(const BigInt& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Multiplicity of p in n (n != 0, p >= 2).
inline unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation: zero argument");
    if (p < 2) throw std::invalid_argument("valuation: modulus must be >= 2");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

// p-adic valuation of a nonzero rational: v(num) - v(den).
inline long rat_valuation(const Rat& q, const BigInt& p) {
    if (q == 0) throw std::invalid_argument("rat_valuation: zero argument");
    long vn = static_cast<long>(valuation(num(q), p));
    long vd = static_cast<long>(valuation(den(q), p));
    return vn - vd;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

}  // namespace apc
