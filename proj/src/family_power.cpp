#include "apc/family_power.hpp"

#include <utility>

#include "apc/certify.hpp"
#include "apc/family_cubic.hpp"
#include "apc/multipoly.hpp"

namespace apc {

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace

std::string Recipe::to_string() const {
    std::string s = multiple == 1 ? "P" : std::to_string(multiple) + "P";
    if (torsion) s += "+T" + std::to_string(torsion);
    return s;
}

std::vector<Recipe> recipe_sequence(std::size_t count) {
    std::vector<Recipe> out;
    out.reserve(count);
    for (unsigned m = 1; out.size() < count; ++m)
        for (unsigned t = 0; t <= 3 && out.size() < count; ++t) out.push_back({m, t});
    return out;
}

PowerInstance odd_instance(unsigned n) {
    if (n < 2) throw std::invalid_argument("odd_instance: n must be at least 2");
    PowerInstance I;
    I.n = n;
    I.exponent = 2 * n + 1;
    I.odd = true;
    I.e = Rat(pow_int(BigInt(2), 2 * n + 1));
    const Rat& e = I.e;
    Rat A{-27 * (3 * e * e + 1)};
    Rat B{54 * (9 * e * e - 1)};
    I.helper = ShortWCurve<Rat>(A, B);
    I.generator = ECPoint<Rat>(Rat{-3 * (3 * e - 5)}, Rat{54 * (e - 1)});
    I.torsion = {ECPoint<Rat>(Rat(6), Rat(0)), ECPoint<Rat>(Rat{3 * (3 * e - 1)}, Rat(0)),
                 ECPoint<Rat>(Rat{-3 * (3 * e + 1)}, Rat(0))};
    I.quartic = QuarticModel<Rat>{{Rat(4), Rat{8 * (e - 1)}, Rat{8 - 12 * e}, Rat{4 * (e - 1)}, Rat(1)}};
    return I;
}

PowerInstance even_instance(unsigned n) {
    if (n < 2) throw std::invalid_argument("even_instance: n must be at least 2");
    PowerInstance I;
    I.n = n;
    I.exponent = 2 * n;
    I.odd = false;
    I.u = Rat(pow_int(BigInt(3), n));
    I.v = Rat(pow_int(BigInt(5), n));
    Rat u2{I.u * I.u}, v2{I.v * I.v};
    Rat A{-27 * (v2 * v2 - (u2 + 1) * v2 + u2 * u2 - u2 + 1)};
    Rat B{27 * (1 + u2 - 2 * v2) * (2 * u2 - v2 - 1) * (u2 + v2 - 2)};
    I.helper = ShortWCurve<Rat>(A, B);
    I.generator = ECPoint<Rat>(Rat{3 * (u2 + v2 + 1)}, Rat{-27 * I.u * I.v});
    I.torsion = {ECPoint<Rat>(Rat{3 * (1 + u2 - 2 * v2)}, Rat(0)),
                 ECPoint<Rat>(Rat{3 * (u2 + v2 - 2)}, Rat(0)),
                 ECPoint<Rat>(Rat{3 * (v2 - 2 * u2 + 1)}, Rat(0))};
    I.quartic =
        QuarticModel<Rat>{{v2, Rat{-4 * I.u}, Rat{-2 * (v2 - 2 * u2 - 2)}, Rat{-4 * I.u}, v2}};
    return I;
}

ECPoint<Rat> apply_recipe(const PowerInstance& inst, const Recipe& r) {
    ECPoint<Rat> p = inst.helper.mul(BigInt(r.multiple), inst.generator);
    if (r.torsion) {
        if (r.torsion > 3) throw std::invalid_argument("apply_recipe: torsion index out of range");
        p = inst.helper.add(p, inst.torsion[r.torsion - 1]);
    }
    return p;
}

std::optional<QuarticPoint<Rat>> power_to_quartic(const PowerInstance& inst,
                                                  const ECPoint<Rat>& p) {
    if (p.infinity) return std::nullopt;
    if (!inst.helper.contains(p))
        throw std::invalid_argument("power_to_quartic: point not on the helper curve");
    QuarticPoint<Rat> q;
    if (inst.odd) {
        const Rat& e = inst.e;
        Rat D{p.x - 3 * (3 * e * e - 1)};
        if (D == 0) return std::nullopt;
        Rat w{2 * p.y - 54 * e * (e * e - 1)};
        q.v = Rat{w / (6 * D) - (e - 1)};
        q.s = Rat{(2 * p.x + 3 * (3 * e * e - 1)) / 9 - (q.v + e - 1) * (q.v + e - 1)};
    } else {
        const Rat &u = inst.u, &v = inst.v;
        Rat u2{u * u}, v2{v * v};
        Rat D0{v2 * p.x - 3 * (3 * u2 - 2 * v2 + v2 * v2 - 2 * u2 * v2)};
        if (D0 == 0) return std::nullopt;
        q.v = Rat{(v2 * v * p.y - 27 * u * (u2 - v2) * (v2 - 1) + 3 * u * D0) / (3 * v2 * D0)};
        q.s = Rat{(2 * p.x - 6 * u2 + 18 * q.v * u + 3 * v2 - 6 - 9 * v2 * q.v * q.v) / (9 * v)};
    }
    if (!inst.quartic.contains(q))
        throw std::logic_error("power_to_quartic: image escaped the quartic");
    return q;
}

ECPoint<Rat> power_from_quartic(const PowerInstance& inst, const QuarticPoint<Rat>& q) {
    if (!inst.quartic.contains(q))
        throw std::invalid_argument("power_from_quartic: point not on the quartic");
    ECPoint<Rat> p;
    if (inst.odd) {
        const Rat& e = inst.e;
        const Rat &v = q.v, &s = q.s;
        p = ECPoint<Rat>(Rat{Rat(3, 2) * (3 * v * v + 6 * (e - 1) * v + 3 * s - 6 * e + 4)},
                         Rat{Rat(27, 2) * (v * v * v + 3 * (e - 1) * v * v + (4 - 6 * e) * v +
                                           (v + e - 1) * s + 2 * (e - 1))});
    } else {
        const Rat &u = inst.u, &v = inst.v;
        const Rat &t = q.v, &s = q.s;
        Rat u2{u * u}, v2{v * v};
        p = ECPoint<Rat>(
            Rat{Rat(3, 2) * (2 - 6 * t * u + 2 * u2 + 3 * s * v + (3 * t * t - 1) * v2)},
            Rat{Rat(-27, 2) * (s * u + ((3 * t * t + 1) * u - 2 * t * (u2 + 1)) * v - s * t * v2 -
                               (t * t * t - t) * v2 * v)});
    }
    if (!inst.helper.contains(p))
        throw std::logic_error("power_from_quartic: image escaped the helper curve");
    return p;
}

std::array<Rat, 3> odd_parametrize(const Rat& u, const Rat& v) {
    if (u == 0 && v == 0) throw std::invalid_argument("odd_parametrize: (0,0) excluded");
    return {Rat{2 * u * u - 4 * u * v + v * v}, Rat{2 * u * u - 2 * u * v + v * v},
            Rat{v * v - 2 * u * u}};
}

std::array<Rat, 4> odd_quadruple(const QuarticPoint<Rat>& q) {
    auto pqr = odd_parametrize(Rat(1), q.v);
    return {pqr[0], pqr[1], pqr[2], q.s};
}

std::array<Rat, 3> even_triple(const PowerInstance& inst, const QuarticPoint<Rat>& q) {
    const Rat &u = inst.u, &t = q.v;
    Rat D{t * t - 1};
    if (D == 0) throw DegenerateWitness("even_triple: parametrization pole at t = +-1");
    return {Rat{(t * t - 2 * u * t + 1) / D}, Rat{-(u * t * t - 2 * t + u) / D}, Rat{q.s / D}};
}

std::array<Rat, 2> even_parametrize(unsigned n, const Rat& t) {
    if (n < 2) throw std::invalid_argument("even_parametrize: n must be at least 2");
    Rat u(pow_int(BigInt(3), n));
    Rat D{t * t - 1};
    if (D == 0) throw DegenerateWitness("even_parametrize: pole at t = +-1");
    return {Rat{(t * t - 2 * u * t + 1) / D}, Rat{-(u * t * t - 2 * t + u) / D}};
}

OddCoeffs odd_coeffs(unsigned n, const std::array<Rat, 4>& q) {
    if (n < 2) throw std::invalid_argument("odd_coeffs: n must be at least 2");
    Rat p2{q[0] * q[0]}, q2{q[1] * q[1]}, r2{q[2] * q[2]}, s2{q[3] * q[3]};
    Rat e(pow_int(BigInt(2), 2 * n + 1));
    OddCoeffs c;
    c.a = Rat{(-p2 + 3 * q2 - 3 * r2 + s2) / (e - 2)};
    c.b = Rat{(p2 - 2 * q2 + r2) / 2};
    c.c = Rat{(r2 - p2) / 2 - c.a};
    c.d = q2;
    return c;
}

EvenCoeffs even_coeffs(unsigned n, const std::array<Rat, 3>& q) {
    if (n < 2) throw std::invalid_argument("even_coeffs: n must be at least 2");
    Rat p2{q[0] * q[0]}, q2{q[1] * q[1]}, r2{q[2] * q[2]};
    Rat u2(pow_int(BigInt(3), 2 * n));
    Rat v2(pow_int(BigInt(5), 2 * n));
    EvenCoeffs c;
    c.a = Rat{(p2 - 2 * q2 + r2 + 2 * u2 - v2 - 1) / 8};
    c.b = Rat{(q2 - u2 - p2 + 1) / 2 - 4 * c.a};
    c.c = Rat{p2 - 1 - c.a - c.b};
    return c;
}

Rat PowerAP::step() const {
    if (points.size() < 2) throw std::logic_error("PowerAP::step: too few points");
    return Rat{points[1].first - points[0].first};
}

bool PowerAP::valid() const {
    if (curve.exponent < 4 || points.size() < 2) return false;
    Rat d{points[1].first - points[0].first};
    if (d == 0) return false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!curve.contains(points[i].first, points[i].second)) return false;
        if (i + 1 < points.size() && !(Rat{points[i + 1].first - points[i].first} == d))
            return false;
    }
    return true;
}

std::size_t rational_point_count(const PowerAP& ap) {
    std::size_t count = 0;
    for (const auto& [x, y] : ap.points) count += y == 0 ? 1 : 2;
    return count;
}

PowerAP power_ap_from_quartic(const PowerInstance& inst, const QuarticPoint<Rat>& q) {
    if (!inst.quartic.contains(q))
        throw std::invalid_argument("power_ap_from_quartic: point not on the quartic");
    PowerAP ap;
    ap.curve.exponent = inst.exponent;
    const long n = inst.n;
    if (inst.odd) {
        auto cq = canonical_quadruple(odd_quadruple(q));
        std::array<Rat, 4> qr{Rat(cq[0]), Rat(cq[1]), Rat(cq[2]), Rat(cq[3])};
        OddCoeffs oc = odd_coeffs(inst.n, qr);
        if (!(oc.b == 0 && oc.c == 0))
            throw std::logic_error("power_ap_from_quartic: interior coefficients survived");
        if (oc.a == 0) throw DegenerateWitness("power_ap_from_quartic: zero leading coefficient");
        // clear the denominator of a through x -> m^2 x, y -> m^(2n+1) y
        BigInt m{den(oc.a)};
        ap.scale = m;
        Rat am2{oc.a * Rat(m * m)};
        Rat ystep{pow_rat(am2, n) * Rat(m)};
        ap.curve.k = Rat{oc.d * pow_rat(am2, 2 * n) * Rat(m * m)};
        for (int i = 0; i < 4; ++i)
            ap.points.push_back({Rat{am2 * (i - 1)}, Rat{ystep * qr[i]}});
    } else {
        auto tr = even_triple(inst, q);
        EvenCoeffs ec = even_coeffs(inst.n, tr);
        if (!(ec.a == 0 && ec.b == 0))
            throw std::logic_error("power_ap_from_quartic: interior coefficients survived");
        if (ec.c == 0) throw DegenerateWitness("power_ap_from_quartic: zero constant term");
        // clear denominators through x -> m x, y -> m^n y
        BigInt m{lcm(lcm(den(tr[0]), den(tr[1])), den(tr[2]))};
        ap.scale = m;
        Rat mr(m);
        Rat ystep{pow_rat(mr, n)};
        ap.curve.k = Rat{ec.c * pow_rat(mr, 2 * n)};
        const int xs[6] = {-5, -3, -1, 1, 3, 5};
        const int entry[6] = {2, 1, 0, 0, 1, 2};
        for (int i = 0; i < 6; ++i)
            ap.points.push_back({Rat{mr * xs[i]}, Rat{ystep * tr[entry[i]]}});
    }
    if (!ap.valid()) throw std::logic_error("power_ap_from_quartic: witness failed validation");
    return ap;
}

WitnessSearch power_witness(const PowerInstance& inst, std::size_t max_recipes) {
    WitnessSearch out;
    auto recipes = recipe_sequence(max_recipes);
    for (std::size_t i = 0; i < recipes.size(); ++i) {
        ++out.tried;
        auto q = power_to_quartic(inst, apply_recipe(inst, recipes[i]));
        if (!q) continue;
        try {
            PowerAP ap = power_ap_from_quartic(inst, *q);
            ap.recipe = recipes[i];
            out.witness = std::move(ap);
            out.recipe_index = static_cast<int>(i);
            return out;
        } catch (const DegenerateWitness&) {
        }
    }
    return out;
}

SmallestK power_smallest_k(const PowerInstance& inst, unsigned op_budget) {
    SmallestK out;
    std::optional<Rat> best_abs;
    for (const Recipe& r : recipe_sequence(4 * (op_budget + 1))) {
        if (r.group_ops() > op_budget) continue;
        ++out.tried;
        auto q = power_to_quartic(inst, apply_recipe(inst, r));
        if (!q) continue;
        try {
            PowerAP ap = power_ap_from_quartic(inst, *q);
            ap.recipe = r;
            ++out.produced;
            Rat a = rat_abs(ap.curve.k);
            if (!best_abs || a < *best_abs) {
                best_abs = a;
                out.best = std::move(ap);
            }
        } catch (const DegenerateWitness&) {
        }
    }
    return out;
}

std::vector<PowerAP> inequivalent_batch(const PowerInstance& inst, std::size_t count) {
    std::vector<PowerAP> kept;
    for (unsigned m = 1; kept.size() < count; ++m) {
        for (unsigned t = 0; t <= 3 && kept.size() < count; ++t) {
            auto q = power_to_quartic(inst, apply_recipe(inst, Recipe{m, t}));
            if (!q) continue;
            try {
                PowerAP ap = power_ap_from_quartic(inst, *q);
                ap.recipe = {m, t};
                bool fresh = true;
                for (const auto& have : kept)
                    if (twist_equivalent(have.curve.k, ap.curve.k, inst.exponent)) {
                        fresh = false;
                        break;
                    }
                if (fresh) kept.push_back(std::move(ap));
            } catch (const DegenerateWitness&) {
            }
        }
    }
    return kept;
}

bool twist_equivalent(const Rat& k1, const Rat& k2, unsigned exponent) {
    if (exponent < 3) throw std::invalid_argument("twist_equivalent: exponent must be at least 3");
    if (k1 == 0 || k2 == 0)
        throw std::invalid_argument("twist_equivalent: zero k has no twist class");
    Rat ratio{k1 / k2};
    if (ratio < 0) return false;
    return perfect_power_root(ratio, 2UL * exponent).has_value();
}

const std::vector<TableRow>& generator_table() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> r;
        auto add = [&](unsigned n, bool odd, const char* x, const char* y) {
            r.push_back({n, odd, parse_rat(x), parse_rat(y)});
        };
        add(2, true, "303", "17820");
        add(3, true, "1167", "6966");
        add(4, true, "4623", "27702");
        add(4, true, "11773", "1175552");
        add(5, true, "18447", "110646");
        add(5, true, "350011167/6241", "6184493104374/493039");
        add(6, true, "73743", "442422");
        add(7, true, "294927", "1769526");
        add(7, true, "153394089/400", "1214402001813/800");
        add(7, true, "124356529/256", "1101957449705/4096");
        add(8, true, "1179663", "7077942");
        add(2, false, "3840", "176256");
        add(3, false, "80808", "14478912");
        add(3, false, "130704", "40007520");
        add(4, false, "1230432", "116328960");
        add(4, false, "31769376/25", "24804389376/125");
        add(5, false, "36278088", "68748343488");
        add(6, false, "836384640", "5022400795776");
        add(7, false, "19863352968", "370669722011712");
        add(8, false, "480955252992", "27480236025415680");
        return r;
    }();
    return rows;
}

RowCheck check_row(const TableRow& row) {
    RowCheck out;
    out.row = row;
    PowerInstance inst = row.odd ? odd_instance(row.n) : even_instance(row.n);
    ECPoint<Rat> p(row.x, row.y);
    out.on_curve = inst.helper.contains(p);
    if (out.on_curve) {
        OrderCertificate cert = certify_order(inst.helper, p);
        out.infinite_order = cert.verdict == OrderVerdict::infinite;
        out.evidence_m = cert.evidence_m;
    }
    out.pass = out.on_curve && out.infinite_order;
    return out;
}

std::vector<RowCheck> check_generator_table() {
    std::vector<RowCheck> out;
    for (const TableRow& r : generator_table()) out.push_back(check_row(r));
    return out;
}

std::vector<RepairCandidate> repair_probe(const TableRow& row) {
    PowerInstance inst = row.odd ? odd_instance(row.n) : even_instance(row.n);
    std::vector<RepairCandidate> out;
    auto consider = [&](const Rat& x, const Rat& y, const std::string& edit) {
        if (x == row.x && y == row.y) return;
        if (!inst.helper.contains(ECPoint<Rat>(x, y))) return;
        for (const auto& c : out)
            if (c.x == x && c.y == y) return;
        out.push_back({x, y, edit});
    };
    auto digit_edits = [](const std::string& s) {
        std::vector<std::pair<std::string, std::string>> v;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::string t = s;
            t.erase(i, 1);
            if (t.empty() || (t.size() > 1 && t[0] == '0')) continue;
            v.push_back({t, "drop digit " + std::to_string(i + 1)});
        }
        if (s != "0")
            for (char d = '0'; d <= '9'; ++d) v.push_back({s + d, std::string("append ") + d});
        return v;
    };
    struct Part {
        const char* name;
        bool is_x, is_num;
    };
    const Part parts[4] = {{"x numerator", true, true},
                           {"x denominator", true, false},
                           {"y numerator", false, true},
                           {"y denominator", false, false}};
    for (const Part& part : parts) {
        const Rat& val = part.is_x ? row.x : row.y;
        BigInt comp = part.is_num ? num(val) : den(val);
        bool negative = comp < 0;
        BigInt mag = negative ? BigInt(-comp) : comp;
        for (const auto& [digits, desc] : digit_edits(to_string(mag))) {
            BigInt edited = parse_bigint(digits);
            if (negative) edited = -edited;
            BigInt nn = part.is_num ? edited : num(val);
            BigInt dd = part.is_num ? den(val) : edited;
            if (dd == 0) continue;
            Rat nv = make_rat(nn, dd);
            consider(part.is_x ? nv : row.x, part.is_x ? row.y : nv,
                     std::string(part.name) + ": " + desc);
        }
    }
    consider(Rat{-row.x}, row.y, "x: sign flip");
    consider(row.x, Rat{-row.y}, "y: sign flip");
    return out;
}

bool verify_power_identities() {
    using MP = MultiPoly;

    // odd family, uniform in e = 2^(2n+1)
    MP e = MP::variable("e");
    MP A = -27 * (3 * e * e + 1);
    MP B = 54 * (9 * e * e - 1);
    MP t1(6), t2 = 3 * (3 * e - 1), t3 = -3 * (3 * e + 1);
    if (!(t1 + t2 + t3).is_zero()) return false;
    if (!(t1 * t2 + t1 * t3 + t2 * t3 == A)) return false;
    if (!(t1 * t2 * t3 == -B)) return false;

    MP gx = -3 * (3 * e - 5), gy = 54 * (e - 1);
    if (!(gy * gy == gx.pow(3) + A * gx + B)) return false;

    std::array<MP, 5> qc = {MP(4), 8 * (e - 1), 8 - 12 * e, 4 * (e - 1), MP(1)};

    MP v = MP::variable("v");
    MP P = v * v - 4 * v + 2, Q = v * v - 2 * v + 2, R = v * v - 2;
    if (!(P * P + R * R - 2 * Q * Q).is_zero()) return false;  // x^2 term dies
    {
        // homogeneous form of the same conic parametrization
        MP hu = MP::variable("hu"), hv = MP::variable("hv");
        MP hp = 2 * hu * hu - 4 * hu * hv + hv * hv;
        MP hq = 2 * hu * hu - 2 * hu * hv + hv * hv;
        MP hr = hv * hv - 2 * hu * hu;
        if (!(hp * hp - 2 * hq * hq + hr * hr).is_zero()) return false;
    }
    MP quart = qc[0] + qc[1] * v + qc[2] * v * v + qc[3] * v.pow(3) + qc[4] * v.pow(4);
    // s^2 = quartic is exactly the vanishing of the x term
    if (!(2 * quart == -(e - 4) * P * P - 6 * Q * Q + (e + 4) * R * R)) return false;

    {
        // the interpolation a x^(2n+1) + b x^2 + c x + d hits the prescribed
        // squares at x = -1, 0, 1, 2 for every quadruple (p, q, r, s)
        MP sp = MP::variable("p"), sq = MP::variable("q"), sr = MP::variable("r"),
           ss = MP::variable("s");
        MP p2 = sp * sp, q2 = sq * sq, r2 = sr * sr, s2 = ss * ss;
        MP aN = -p2 + 3 * q2 - 3 * r2 + s2;  // a = aN / (e - 2)
        MP b2 = p2 - 2 * q2 + r2;            // b = b2 / 2
        MP c2 = (e - 2) * (r2 - p2) - 2 * aN;  // c = c2 / (2 (e - 2))
        // each equation scaled by 2 (e - 2)
        if (!(-2 * aN + (e - 2) * b2 - c2 + 2 * (e - 2) * (q2 - p2)).is_zero()) return false;
        if (!(2 * aN + (e - 2) * b2 + c2 + 2 * (e - 2) * (q2 - r2)).is_zero()) return false;
        if (!(2 * e * aN + 4 * (e - 2) * b2 + 2 * c2 + 2 * (e - 2) * (q2 - s2)).is_zero())
            return false;
    }

    // curve -> quartic lands on the quartic, modulo the curve relation
    MP X = MP::variable("X"), Y = MP::variable("Y");
    MP curve_rhs = X.pow(3) + A * X + B;
    MP Dv = 6 * (X - 3 * (3 * e * e - 1));
    MP W = 2 * Y - 54 * e * (e * e - 1);
    MP Nv = W - (e - 1) * Dv;
    MP Ns = -9 * W * W + (2 * X + 3 * (3 * e * e - 1)) * Dv * Dv;
    MP lhs = Ns * Ns - 81 * (Nv.pow(4) + qc[3] * Nv.pow(3) * Dv + qc[2] * Nv * Nv * Dv * Dv +
                             qc[1] * Nv * Dv.pow(3) + qc[0] * Dv.pow(4));
    if (!lhs.reduce_square("Y", curve_rhs).is_zero()) return false;

    // quartic -> curve lands on the curve, modulo the quartic relation
    MP s = MP::variable("s");
    MP Xp = Rat(3, 2) * (3 * v * v + 6 * (e - 1) * v + 3 * s - 6 * e + 4);
    MP Yp = Rat(27, 2) *
            (v.pow(3) + 3 * (e - 1) * v * v + (4 - 6 * e) * v + (v + e - 1) * s + 2 * (e - 1));
    MP onc = Yp * Yp - (Xp.pow(3) + A * Xp + B);
    if (!onc.reduce_square("s", quart).is_zero()) return false;

    // and the round trip is the identity
    MP DvP = 6 * (Xp - 3 * (3 * e * e - 1));
    MP WP = 2 * Yp - 54 * e * (e * e - 1);
    if (!(WP - (e - 1) * DvP - v * DvP).reduce_square("s", quart).is_zero()) return false;
    MP NsP = -9 * WP * WP + (2 * Xp + 3 * (3 * e * e - 1)) * DvP * DvP;
    if (!(NsP - 9 * s * DvP * DvP).reduce_square("s", quart).is_zero()) return false;

    // even family, uniform in u = 3^n, v = 5^n
    MP uu = MP::variable("u"), vv = MP::variable("v");
    MP u2 = uu * uu, v2 = vv * vv;
    MP Ae = -27 * (v2 * v2 - (u2 + 1) * v2 + u2 * u2 - u2 + 1);
    MP Be = 27 * (1 + u2 - 2 * v2) * (2 * u2 - v2 - 1) * (u2 + v2 - 2);
    MP w1 = 3 * (1 + u2 - 2 * v2), w2 = 3 * (u2 + v2 - 2), w3 = 3 * (v2 - 2 * u2 + 1);
    if (!(w1 + w2 + w3).is_zero()) return false;
    if (!(w1 * w2 + w1 * w3 + w2 * w3 == Ae)) return false;
    if (!(w1 * w2 * w3 == -Be)) return false;

    MP ex = 3 * (u2 + v2 + 1);
    MP eR = ex.pow(3) + Ae * ex + Be;
    if (!(eR == 729 * u2 * v2)) return false;  // generator ordinate is -27uv

    // doubling numerator: x(2P) = 3 Num / (4 u^2 v^2)
    MP Num = 3 * u2 * u2 - 2 * (u2 + 1) * u2 * v2 + (3 - 2 * u2 + 3 * u2 * u2) * v2 * v2;
    MP dd = 3 * ex * ex + Ae;
    if (!(dd * dd - 8 * ex * eR == 2187 * Num)) return false;

    // parametrization clears the x^2 and x terms and pins the constant
    MP t = MP::variable("t");
    MP Pt = t * t - 2 * uu * t + 1;
    MP Qt = -(uu * t * t - 2 * t + uu);
    MP Dd = t * t - 1;
    MP quarE =
        v2 * t.pow(4) - 4 * uu * t.pow(3) - 2 * (v2 - 2 * u2 - 2) * t * t - 4 * uu * t + v2;
    if (!(Pt * Pt - 2 * Qt * Qt + quarE + (2 * u2 - v2 - 1) * Dd * Dd).is_zero()) return false;
    if (!(Qt * Qt - Pt * Pt - (u2 - 1) * Dd * Dd).is_zero()) return false;
    if (!(quarE - Pt * Pt - (v2 - 1) * Dd * Dd).is_zero()) return false;

    {
        // the interpolation x^(2n) + a x^2 + b x + c hits the prescribed
        // squares at x = 1, 3, 5 for every triple (p, q, r)
        MP sp = MP::variable("p"), sq = MP::variable("q"), sr = MP::variable("r");
        MP p2 = sp * sp, q2 = sq * sq, r2 = sr * sr;
        MP aE = Rat(1, 8) * (p2 - 2 * q2 + r2 + 2 * u2 - v2 - 1);
        MP bE = Rat(1, 2) * (q2 - u2 - p2 + 1) - 4 * aE;
        MP cE = p2 - 1 - aE - bE;
        if (!(1 + aE + bE + cE - p2).is_zero()) return false;
        if (!(u2 + 9 * aE + 3 * bE + cE - q2).is_zero()) return false;
        if (!(v2 + 25 * aE + 5 * bE + cE - r2).is_zero()) return false;
    }

    // curve -> quartic, modulo the curve relation
    MP Xe = MP::variable("X"), Ye = MP::variable("Y");
    MP curveE = Xe.pow(3) + Ae * Xe + Be;
    MP D0 = v2 * Xe - 3 * (3 * u2 - 2 * v2 + v2 * v2 - 2 * u2 * v2);
    MP Nt = v2 * vv * Ye - 27 * uu * (u2 - v2) * (v2 - 1) + 3 * uu * D0;
    MP Dt = 3 * v2 * D0;
    MP NsE = (2 * Xe - 6 * u2 + 3 * v2 - 6) * Dt * Dt + 18 * uu * Nt * Dt - 9 * v2 * Nt * Nt;
    MP rhsE = v2 * Nt.pow(4) - 4 * uu * Nt.pow(3) * Dt -
              2 * (v2 - 2 * u2 - 2) * Nt * Nt * Dt * Dt - 4 * uu * Nt * Dt.pow(3) +
              v2 * Dt.pow(4);
    if (!(NsE * NsE - 81 * v2 * rhsE).reduce_square("Y", curveE).is_zero()) return false;

    // quartic -> curve, modulo the quartic relation
    MP se = MP::variable("s");
    MP Xq = Rat(3, 2) * (2 - 6 * t * uu + 2 * u2 + 3 * se * vv + (3 * t * t - 1) * v2);
    MP Yq = Rat(-27, 2) * (se * uu + ((3 * t * t + 1) * uu - 2 * t * (u2 + 1)) * vv -
                           se * t * v2 - (t.pow(3) - t) * v2 * vv);
    MP oncE = Yq * Yq - (Xq.pow(3) + Ae * Xq + Be);
    if (!oncE.reduce_square("s", quarE).is_zero()) return false;

    // and the round trip is the identity
    MP D0q = v2 * Xq - 3 * (3 * u2 - 2 * v2 + v2 * v2 - 2 * u2 * v2);
    MP Ntq = v2 * vv * Yq - 27 * uu * (u2 - v2) * (v2 - 1) + 3 * uu * D0q;
    MP Dtq = 3 * v2 * D0q;
    if (!(Ntq - t * Dtq).reduce_square("s", quarE).is_zero()) return false;
    MP NsQ = (2 * Xq - 6 * u2 + 3 * v2 - 6) * Dtq * Dtq + 18 * uu * Ntq * Dtq - 9 * v2 * Ntq * Ntq;
    if (!(NsQ - 9 * vv * se * Dtq * Dtq).reduce_square("s", quarE).is_zero()) return false;

    return true;
}

}  // namespace apc
