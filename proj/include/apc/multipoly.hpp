#pragma once

#include <map>
#include <string>
#include <vector>

#include "apc/numeric.hpp"

namespace apc {

// Sparse multivariate polynomial over Q. Each instance carries its own sorted
// variable list; binary operations align the two lists first. Unused
// variables are dropped on normalization so equality is structural.
class MultiPoly {
  public:
    using Exponents = std::vector<unsigned>;

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c);
    MultiPoly(long c) : MultiPoly(Rat(c)) {}
    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant
    long total_degree() const;   // -1 for zero

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(unsigned long e) const;

    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    Rat eval(const std::map<std::string, Rat>& point) const;
    MultiPoly derivative(const std::string& var) const;

    // Rewrite var^(2m+r) -> rep^m * var^r. rep must not involve var. This is
    // reduction modulo the relation var^2 = rep.
    MultiPoly reduce_square(const std::string& var, const MultiPoly& rep) const;

    // Coefficients of var^0, var^1, ... as polynomials in the other variables.
    std::vector<MultiPoly> collect(const std::string& var) const;

    std::string to_string() const;

  private:
    std::vector<std::string> vars_;  // sorted
    TermMap terms_;

    void normalize();
    MultiPoly aligned_to(const std::vector<std::string>& new_vars) const;
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
    friend MultiPoly raw_multipoly(std::vector<std::string> vars, MultiPoly::TermMap terms);
};

MultiPoly raw_multipoly(std::vector<std::string> vars, MultiPoly::TermMap terms);

inline MultiPoly operator*(const Rat& s, const MultiPoly& p) { return p * s; }
inline MultiPoly operator+(long a, const MultiPoly& p) { return MultiPoly(a) + p; }
inline MultiPoly operator-(long a, const MultiPoly& p) { return MultiPoly(a) - p; }
inline MultiPoly operator*(long a, const MultiPoly& p) { return p * Rat(a); }
inline MultiPoly operator*(const MultiPoly& p, long a) { return p * Rat(a); }
inline MultiPoly operator+(const MultiPoly& p, long a) { return p + MultiPoly(a); }
inline MultiPoly operator-(const MultiPoly& p, long a) { return p - MultiPoly(a); }

}  // namespace apc
