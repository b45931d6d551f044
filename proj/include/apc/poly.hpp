#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apc/numeric.hpp"

namespace apc {

template <class F>
concept ExactField = requires(F a, F b) {
    { F(0) };
    { F(1) };
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
};

// Dense univariate polynomial over an exact field, coefficients lowest-first.
// The zero polynomial is the empty vector; otherwise the top coefficient is
// nonzero.
template <ExactField F>
class Poly {
  public:
    Poly() = default;
    Poly(const F& constant) {
        if (!(constant == F(0))) c_.push_back(constant);
    }
    Poly(long constant) : Poly(F(constant)) {}
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly var() { return Poly(std::vector<F>{F(0), F(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& lead() const {
        if (c_.empty()) throw std::invalid_argument("Poly::lead on zero polynomial");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (F& x : r.c_) x = F(0) - x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), F(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        r.trim();
        return r;
    }

    Poly operator*(const F& s) const {
        Poly r = *this;
        for (F& x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    Poly operator/(const F& s) const {
        if (s == F(0)) throw std::invalid_argument("Poly: division by zero scalar");
        Poly r = *this;
        for (F& x : r.c_) x = x / s;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // quotient and remainder; deg r < deg divisor
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::invalid_argument("Poly::divrem: zero divisor");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = r.degree() - b.degree();
            F scale = r.lead() / b.lead();
            std::vector<F> qc(shift + 1, F(0));
            qc[shift] = scale;
            Poly term(std::move(qc));
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    // exact division; throws if the remainder is nonzero
    Poly divide_exact(const Poly& b) const {
        auto [q, r] = divrem(*this, b);
        if (!r.is_zero()) throw std::invalid_argument("Poly::divide_exact: not divisible");
        return q;
    }

    F eval(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
        return acc;
    }

    Poly derivative() const {
        Poly r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * F(static_cast<long>(i)));
        r.trim();
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly r(F(1)), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Poly make_monic() const {
        if (is_zero()) return *this;
        return *this / lead();
    }

  private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
};

template <ExactField F>
Poly<F> operator*(const F& s, const Poly<F>& p) { return p * s; }

// Euclidean gcd, result monic (or zero).
template <ExactField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = Poly<F>::divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

// extended Euclid: u*a + v*b = g with g the monic gcd (zero if both inputs zero)
template <ExactField F>
struct ExtGcd {
    Poly<F> g, u, v;
};

template <ExactField F>
ExtGcd<F> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0(F(1)), u1, v0, v1(F(1));
    while (!r1.is_zero()) {
        auto [q, r2] = Poly<F>::divrem(r0, r1);
        Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    F lead = r0.lead();
    return {r0 / lead, u0 / lead, v0 / lead};
}

// Resultant via the Sylvester matrix with exact Gaussian elimination.
template <ExactField F>
F resultant(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return F(0);
    long m = a.degree(), n = b.degree();
    if (m == 0) {
        F r(1);
        for (long i = 0; i < n; ++i) r = r * a.lead();
        return r;
    }
    if (n == 0) {
        F r(1);
        for (long i = 0; i < m; ++i) r = r * b.lead();
        return r;
    }
    std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<F>> s(N, std::vector<F>(N, F(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);

    F det(1);
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && s[piv][col] == F(0)) ++piv;
        if (piv == N) return F(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = F(0) - det;
        }
        det = det * s[col][col];
        for (std::size_t row = col + 1; row < N; ++row) {
            if (s[row][col] == F(0)) continue;
            F factor = s[row][col] / s[col][col];
            for (std::size_t k = col; k < N; ++k) s[row][k] = s[row][k] - factor * s[col][k];
        }
    }
    return det;
}

using UniPoly = Poly<Rat>;

// gcd of all numerators over lcm of all denominators; zero polynomial -> 0
inline Rat content(const UniPoly& p) {
    if (p.is_zero()) return Rat(0);
    BigInt g = 0, l = 1;
    for (const Rat& c : p.coeffs()) {
        if (c == 0) continue;
        g = gcd(g, num(c));
        l = lcm(l, den(c));
    }
    return make_rat(g, l);
}

inline UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    UniPoly r = p / content(p);
    if (r.lead() < 0) r = -r;
    return r;
}

// monic product of the distinct irreducible factors
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UniPoly(Rat(1));
    UniPoly g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).make_monic();
}

// exact polynomial square root if one exists
inline std::optional<UniPoly> poly_sqrt(const UniPoly& f) {
    if (f.is_zero()) return UniPoly();
    if (f.degree() % 2 != 0) return std::nullopt;
    auto lead_root = perfect_power_root(f.lead(), 2);
    if (!lead_root) return std::nullopt;
    long h = f.degree() / 2;
    std::vector<Rat> g(static_cast<std::size_t>(h) + 1, Rat(0));
    g[h] = *lead_root;
    // solve top-down: coefficient of x^(h+k) in g^2 determines g[k]
    for (long k = h - 1; k >= 0; --k) {
        Rat acc(0);
        for (long i = k + 1; i < h + k - i; ++i) {
            // pairs (i, h+k-i) with both indices in range and i != h+k-i
            long j = h + k - i;
            if (i >= 0 && j <= h) acc += g[i] * g[j] * 2;
        }
        if ((h + k) % 2 == 0) {
            long mid = (h + k) / 2;
            if (mid != h && mid >= 0) acc += g[mid] * g[mid];
        }
        g[k] = (f.coeff(h + k) - acc) / (g[h] * 2);
    }
    UniPoly cand{std::vector<Rat>(g.begin(), g.end())};
    if (cand * cand == f) return cand;
    return std::nullopt;
}

inline std::string poly_to_string(const UniPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(i);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = abs(c);
        bool unit = (a == 1) && i != 0;
        if (!unit) s += a.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace apc
