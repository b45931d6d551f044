#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apc/curve.hpp"
#include "apc/transforms.hpp"

// Arithmetic progressions of x-coordinates on y^2 = x^e + k for exponents
// e >= 4, built from squares prescribed at fixed arguments of a low-degree
// polynomial. Odd e = 2n+1: squares of (p,q,r,s) at x = -1,0,1,2 of
// a x^(2n+1) + b x^2 + c x + d land on y^2 = x^(2n+1) + d a^(2n) once
// b = c = 0. Even e = 2n: squares of (p,q,r) at x = 1,3,5 of
// x^(2n) + a x^2 + b x + c give six symmetric points once a = b = 0. Either
// vanishing condition cuts out a quartic with a marked rational point,
// reached from a helper elliptic curve through an explicit birational map.

namespace apc {

// y^2 = x^exponent + k
struct PowerCurve {
    unsigned exponent = 0;
    Rat k;

    bool contains(const Rat& x, const Rat& y) const {
        return y * y == pow_rat(x, static_cast<long>(exponent)) + k;
    }
};

// m * P + T_torsion on the helper curve (torsion 0 means no translation)
struct Recipe {
    unsigned multiple = 1;
    unsigned torsion = 0;  // 0 = none, 1..3 = two-torsion index

    unsigned group_ops() const { return (multiple - 1) + (torsion ? 1 : 0); }
    std::string to_string() const;
};

// (1,O), (1,T1), (1,T2), (1,T3), (2,O), (2,T1), ...
std::vector<Recipe> recipe_sequence(std::size_t count);

// a recipe landing on a square collection whose curve or progression
// collapses (k = 0 target or zero step)
struct DegenerateWitness : std::domain_error {
    using std::domain_error::domain_error;
};

struct PowerInstance {
    unsigned n = 0;
    unsigned exponent = 0;
    bool odd = true;
    Rat e;     // odd family: 2^(2n+1)
    Rat u, v;  // even family: 3^n and 5^n
    ShortWCurve<Rat> helper{Rat(0), Rat(1)};
    ECPoint<Rat> generator;
    std::array<ECPoint<Rat>, 3> torsion;
    QuarticModel<Rat> quartic{};
};

PowerInstance odd_instance(unsigned n);   // exponent 2n+1, n >= 2
PowerInstance even_instance(unsigned n);  // exponent 2n, n >= 2

ECPoint<Rat> apply_recipe(const PowerInstance& inst, const Recipe& r);

// helper curve -> quartic; nullopt at infinity and on the exceptional locus,
// throws on a point off the helper curve
std::optional<QuarticPoint<Rat>> power_to_quartic(const PowerInstance& inst,
                                                  const ECPoint<Rat>& p);
// quartic -> helper curve (defined everywhere on the quartic)
ECPoint<Rat> power_from_quartic(const PowerInstance& inst, const QuarticPoint<Rat>& q);

// conic parametrization behind the odd-family quadruples; satisfies
// p^2 - 2 q^2 + r^2 = 0 identically
std::array<Rat, 3> odd_parametrize(const Rat& u, const Rat& v);
// odd-family square quadruple (p, q, r, s) at a quartic point
std::array<Rat, 4> odd_quadruple(const QuarticPoint<Rat>& q);
// even-family square triple (p, q, r); throws DegenerateWitness at t = +-1
std::array<Rat, 3> even_triple(const PowerInstance& inst, const QuarticPoint<Rat>& q);
// the (p, q) entries of the even triple as closed forms in t
std::array<Rat, 2> even_parametrize(unsigned n, const Rat& t);

// interpolation through (-1, p^2), (0, q^2), (1, r^2), (2, s^2) by
// a x^(2n+1) + b x^2 + c x + d
struct OddCoeffs {
    Rat a, b, c, d;
};
OddCoeffs odd_coeffs(unsigned n, const std::array<Rat, 4>& q);

// interpolation through (1, p^2), (3, q^2), (5, r^2) by x^(2n) + a x^2 + b x + c
struct EvenCoeffs {
    Rat a, b, c;
};
EvenCoeffs even_coeffs(unsigned n, const std::array<Rat, 3>& q);

struct PowerAP {
    PowerCurve curve;
    Recipe recipe;
    std::vector<std::pair<Rat, Rat>> points;  // x in arithmetic progression
    BigInt scale{1};  // denominator-clearing factor (x -> scale^2 x odd, scale x even)

    Rat step() const;
    bool valid() const;  // membership plus a constant nonzero x-step
};

// distinct rational points the witness certifies, counting (x, y) and (x, -y)
std::size_t rational_point_count(const PowerAP& ap);

// witness from one quartic point, scaled to integral coordinates; throws
// DegenerateWitness when the progression collapses
PowerAP power_ap_from_quartic(const PowerInstance& inst, const QuarticPoint<Rat>& q);

struct WitnessSearch {
    std::optional<PowerAP> witness;
    int recipe_index = -1;  // 0-based position in recipe_sequence
    int tried = 0;
};

// first recipe in sequence order that yields a valid witness
WitnessSearch power_witness(const PowerInstance& inst, std::size_t max_recipes);

struct SmallestK {
    std::optional<PowerAP> best;  // least |k| among witness-producing recipes
    long tried = 0;
    long produced = 0;
};

// exhaustive over recipes with group_ops() <= op_budget
SmallestK power_smallest_k(const PowerInstance& inst, unsigned op_budget);

// k1/k2 an exact (2 exponent)-th power of a rational
bool twist_equivalent(const Rat& k1, const Rat& k2, unsigned exponent);

// witnesses from successive recipes, greedily keeping only those whose k
// values are pairwise inequivalent as twists
std::vector<PowerAP> inequivalent_batch(const PowerInstance& inst, std::size_t count);

// published generator coordinates for the helper curves, n = 2..8, verbatim
struct TableRow {
    unsigned n = 0;
    bool odd = true;
    Rat x, y;
};
const std::vector<TableRow>& generator_table();

struct RowCheck {
    TableRow row;
    bool on_curve = false;
    bool infinite_order = false;
    unsigned evidence_m = 0;  // first non-integral multiple when on curve
    bool pass = false;
};
RowCheck check_row(const TableRow& row);
std::vector<RowCheck> check_generator_table();

// single-token edits of the printed coordinates (digit dropped, digit
// appended, sign flipped) that land back on the helper curve
struct RepairCandidate {
    Rat x, y;
    std::string edit;
};
std::vector<RepairCandidate> repair_probe(const TableRow& row);

// certification of the helper-curve data, both parametrizations and both
// birational maps as polynomial identities, uniform in n through
// e = 2^(2n+1) (odd family) and u = 3^n, v = 5^n (even family)
bool verify_power_identities();

}  // namespace apc
