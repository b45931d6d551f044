#pragma once

#include <mpfr.h>

#include <string>

#include "apc/numeric.hpp"

namespace apc {

// Thin RAII wrapper over mpfr_t, round-to-nearest everywhere. Binary
// operations widen to the larger operand precision.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const BigInt& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Rat& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(double d, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const { return bin(o, mpfr_add); }
    BigFloat operator-(const BigFloat& o) const { return bin(o, mpfr_sub); }
    BigFloat operator*(const BigFloat& o) const { return bin(o, mpfr_mul); }
    BigFloat operator/(const BigFloat& o) const { return bin(o, mpfr_div); }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // exact scaling by 2^e
    BigFloat mul_2si(long e) const {
        BigFloat r(precision());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    BigFloat log() const {
        BigFloat r(precision());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    static BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // exact dyadic value m * 2^e as a rational
    Rat to_rat_exact() const {
        if (is_zero()) return Rat(0);
        BigInt m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        if (e >= 0) return Rat(m * pow_int(BigInt(2), static_cast<unsigned long>(e)));
        return make_rat(m, pow_int(BigInt(2), static_cast<unsigned long>(-e)));
    }

    std::string str(int digits = 17) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;

    using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    BigFloat bin(const BigFloat& o, mpfr_bin_fn fn) const {
        BigFloat r(std::max(precision(), o.precision()));
        fn(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
};

}  // namespace apc
