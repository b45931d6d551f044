#pragma once

#include <optional>
#include <string>

#include "apc/poly.hpp"

namespace apc {

// Rational function in one variable over Q. Invariants: denominator monic and
// nonzero, gcd(num, den) = 1, zero is 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(long n) : num_(Rat(n)), den_(Rat(1)) {}
    RatFunc(const Rat& q) : num_(q), den_(Rat(1)) {}
    RatFunc(const UniPoly& n) : num_(n), den_(Rat(1)) {}
    RatFunc(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc var() { return RatFunc(UniPoly::var()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_reduced{}); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc pow(unsigned long e) const {
        RatFunc r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // nullopt at a pole
    std::optional<Rat> eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) return std::nullopt;
        return num_.eval(x) / d;
    }

    std::string to_string(const std::string& var = "t") const {
        if (den_ == UniPoly(Rat(1))) return poly_to_string(num_, var);
        return "(" + poly_to_string(num_, var) + ")/(" + poly_to_string(den_, var) + ")";
    }

  private:
    struct already_reduced {};
    RatFunc(UniPoly n, UniPoly d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    UniPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(Rat(1));
            return;
        }
        UniPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        Rat lead = den_.lead();
        if (!(lead == 1)) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }
};

inline RatFunc operator+(long a, const RatFunc& b) { return RatFunc(a) + b; }
inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }
inline RatFunc operator-(long a, const RatFunc& b) { return RatFunc(a) - b; }

}  // namespace apc
