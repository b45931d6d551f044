#include "apc/certify.hpp"

namespace apc {

namespace {

struct Normalized {
    ShortWCurve<Rat> curve;
    ECPoint<Rat> point;
};

Normalized normalize(const ShortWCurve<Rat>& c, const ECPoint<Rat>& p) {
    if (is_integer(c.A) && is_integer(c.B)) return {c, p};
    IntegralModel m = integral_model(c);
    return {m.curve, m.map_point(p)};
}

}  // namespace

OrderCertificate certify_order(const ShortWCurve<Rat>& curve, const ECPoint<Rat>& point) {
    auto [c, p] = normalize(curve, point);
    if (!c.contains(p)) throw std::invalid_argument("certify_order: point not on curve");

    OrderCertificate cert{};
    if (p.infinity) {
        cert.verdict = OrderVerdict::torsion;
        cert.order = 1;
        return cert;
    }
    if (!is_integral(p)) {
        cert.verdict = OrderVerdict::infinite;
        cert.evidence_m = 1;
        return cert;
    }
    ECPoint<Rat> q = p;
    for (unsigned m = 2; m <= 12; ++m) {
        q = c.add(q, p);
        if (q.infinity) {
            cert.verdict = OrderVerdict::torsion;
            cert.order = m;
            return cert;
        }
        if (!is_integral(q)) {
            cert.verdict = OrderVerdict::infinite;
            cert.evidence_m = m;
            return cert;
        }
    }
    CanonicalHeight h = canonical_height(c, p);
    cert.via_height = true;
    cert.height_value = h.value_big.to_double();
    cert.height_error = h.error_bound;
    if (h.exact_zero || cert.height_value <= 1e-6)
        throw std::logic_error("certify_order: vanishing height with no small order");
    if (cert.height_value > 1e-4) {
        cert.verdict = OrderVerdict::infinite;
        return cert;
    }
    throw std::logic_error("certify_order: height in the undecided band");
}

bool OrderCertificate::verify(const ShortWCurve<Rat>& curve, const ECPoint<Rat>& point) const {
    auto [c, p] = normalize(curve, point);
    if (!c.contains(p)) return false;
    if (verdict == OrderVerdict::torsion)
        return order >= 1 && c.mul(BigInt(order), p).infinity;
    if (via_height) {
        CanonicalHeight h = canonical_height(c, p);
        return h.value_big.to_double() > 1e-4;
    }
    if (evidence_m == 1) return !is_integral(p);
    if (evidence_m < 2) return false;
    return !is_integral(c.mul(BigInt(evidence_m), p));
}

}  // namespace apc
