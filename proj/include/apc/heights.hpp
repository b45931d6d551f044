#pragma once

#include <stdexcept>
#include <vector>

#include "apc/bigfloat.hpp"
#include "apc/curve.hpp"

namespace apc {

// Raised when a computation cannot finish within its arithmetic budget (for
// heights: the duplication resultant would not factor completely).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical height normalized as lim_N 4^-N log H(x(2^N P)) ("big"); the
// halved value is carried alongside. error_bound is a rigorous bound on
// |value_big - true|.
struct CanonicalHeight {
    BigFloat value_big;
    BigFloat value_small;
    double error_bound = 0.0;
    mpfr_prec_t precision_bits = 128;
    bool exact_zero = false;  // torsion / infinity short-circuit
};

CanonicalHeight canonical_height(const ShortWCurve<Rat>& c, const ECPoint<Rat>& p,
                                 mpfr_prec_t prec = 128);

// Direct truncation log H(x(2^N P)) / 4^N, the definition the series value is
// tested against.
BigFloat naive_height_limit_term(const ShortWCurve<Rat>& c, const ECPoint<Rat>& p,
                                 unsigned doublings, mpfr_prec_t prec = 128);

struct HeightMatrix {
    std::vector<std::vector<BigFloat>> entries_big;  // <Pi,Pj> in the big normalization
    BigFloat det_big;
    BigFloat det_small;      // = det_big / 2^n
    double entry_error = 0;  // max per-entry bound
    double det_error = 0;    // n * n! * (m+e)^(n-1) * e perturbation bound
    mpfr_prec_t precision_bits = 128;
};

HeightMatrix height_pairing_matrix(const ShortWCurve<Rat>& c,
                                   const std::vector<ECPoint<Rat>>& pts,
                                   mpfr_prec_t prec = 128);

enum class IndependenceVerdict { independent, indeterminate };

struct IndependenceResult {
    IndependenceVerdict verdict;
    HeightMatrix matrix;
};

IndependenceResult certify_independent(const ShortWCurve<Rat>& c,
                                       const std::vector<ECPoint<Rat>>& pts,
                                       mpfr_prec_t prec = 128);

}  // namespace apc
