#pragma once

#include <vector>

#include "apc/field.hpp"
#include "apc/poly.hpp"

namespace apc {

template <ExactField F>
struct ECPoint {
    bool infinity = true;
    F x{0}, y{0};

    ECPoint() = default;
    ECPoint(F px, F py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static ECPoint inf() { return ECPoint(); }

    bool operator==(const ECPoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

// y^2 = x^3 + A x + B over an exact field. Construction rejects the singular
// case 4A^3 + 27B^2 = 0.
template <ExactField F>
class ShortWCurve {
  public:
    ShortWCurve(F a, F b) : A(std::move(a)), B(std::move(b)) {
        F disc = F(4) * A * A * A + F(27) * B * B;
        if (disc == F(0)) throw std::invalid_argument("ShortWCurve: singular (4A^3+27B^2 = 0)");
    }

    F A, B;

    // -16(4A^3 + 27B^2)
    F discriminant() const { return F(-16) * (F(4) * A * A * A + F(27) * B * B); }

    bool contains(const ECPoint<F>& p) const {
        if (p.infinity) return true;
        F lhs = p.y * p.y;
        F rhs = p.x * p.x * p.x + A * p.x + B;
        return lhs == rhs;
    }

    ECPoint<F> neg(const ECPoint<F>& p) const {
        if (p.infinity) return p;
        return ECPoint<F>(p.x, F(0) - p.y);
    }

    ECPoint<F> add(const ECPoint<F>& p, const ECPoint<F>& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        if (p.x == q.x) {
            if (p.y == F(0) - q.y) return ECPoint<F>::inf();  // includes y = 0
            return dbl(p);
        }
        F lam = (q.y - p.y) / (q.x - p.x);
        F x3 = lam * lam - p.x - q.x;
        F y3 = lam * (p.x - x3) - p.y;
        return ECPoint<F>(x3, y3);
    }

    ECPoint<F> dbl(const ECPoint<F>& p) const {
        if (p.infinity || p.y == F(0)) return ECPoint<F>::inf();
        F lam = (F(3) * p.x * p.x + A) / (F(2) * p.y);
        F x3 = lam * lam - p.x - p.x;
        F y3 = lam * (p.x - x3) - p.y;
        return ECPoint<F>(x3, y3);
    }

    ECPoint<F> sub(const ECPoint<F>& p, const ECPoint<F>& q) const { return add(p, neg(q)); }

    ECPoint<F> mul(const BigInt& m, const ECPoint<F>& p) const {
        BigInt n = m;
        ECPoint<F> base = p;
        if (n < 0) {
            n = -n;
            base = neg(base);
        }
        ECPoint<F> acc = ECPoint<F>::inf();
        for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
            acc = dbl(acc);
            if (mpz_tstbit(n.get_mpz_t(), bit)) acc = add(acc, base);
        }
        return acc;
    }
};

// Integer roots of the monic cubic z^3 + P z + Q by exact integer bisection on
// its monotone pieces (any rational root of a monic integer cubic is an
// integer).
std::vector<BigInt> integer_roots_monic_cubic(const BigInt& P, const BigInt& Q);

// x-coordinates of the rational 2-torsion (rational roots of x^3 + Ax + B),
// ascending.
std::vector<Rat> two_torsion_x(const ShortWCurve<Rat>& c);

inline bool is_integral(const ECPoint<Rat>& p) {
    return p.infinity || (is_integer(p.x) && is_integer(p.y));
}

// (x,y) -> (d^2 x, d^3 y) with the least d >= 1 making both curve
// coefficients integral.
struct IntegralModel {
    ShortWCurve<Rat> curve;
    BigInt scale;
    ECPoint<Rat> map_point(const ECPoint<Rat>& p) const {
        if (p.infinity) return p;
        Rat d2(scale * scale), d3(scale * scale * scale);
        return ECPoint<Rat>(p.x * d2, p.y * d3);
    }
};

IntegralModel integral_model(const ShortWCurve<Rat>& c);

}  // namespace apc
