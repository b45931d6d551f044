#pragma once

#include "apc/curve.hpp"
#include "apc/heights.hpp"

namespace apc {

// Order certificate for a rational point: either torsion with its exact order
// or infinite order with reproducible evidence. Evidence hierarchy:
//   - evidence_m = m: mP is the first non-integral multiple on the integral
//     model (m = 1 means the point itself), which kills torsion by the
//     integrality theorem for torsion points;
//   - via_height: every multiple up to 12 stayed integral and nonzero, the
//     canonical height decided it.
enum class OrderVerdict { torsion, infinite };

struct OrderCertificate {
    OrderVerdict verdict;
    unsigned order = 0;       // set for torsion
    unsigned evidence_m = 0;  // set for infinite via integrality
    bool via_height = false;
    double height_value = 0.0;
    double height_error = 0.0;

    bool verify(const ShortWCurve<Rat>& c, const ECPoint<Rat>& p) const;
};

// Multiples are checked for m = 2..12 (after mapping to the least integral
// model); decision thresholds for the height fallback: > 1e-4 infinite,
// <= 1e-6 torsion-like (which Mazur's bound makes impossible here, so it is
// reported as a logic error).
OrderCertificate certify_order(const ShortWCurve<Rat>& c, const ECPoint<Rat>& p);

}  // namespace apc
