#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "apc/numeric.hpp"

namespace apc {

struct FactorBudget {
    unsigned long trial_bound = 1'000'000;        // trial division up to here
    std::uint64_t rho_iterations = 100'000'000;   // total rho budget across all cofactors
};

// Factorization of |n|: product of prime^exp times the optional composite
// cofactor (present only when the budget ran out before a full split).
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;  // ascending, exponents >= 1
    std::optional<BigInt> cofactor;

    bool complete() const { return !cofactor.has_value(); }
    BigInt recompose_magnitude() const;
};

// Miller-Rabin. Deterministic base set {2,...,37} below 3317044064679887385961981,
// else 64 rounds drawn from a fixed-seed generator.
bool is_probable_prime(const BigInt& n);

// n must be nonzero; the sign is dropped. factor(1) is empty.
Factorization factor_integer(const BigInt& n, const FactorBudget& budget = {});

}  // namespace apc
