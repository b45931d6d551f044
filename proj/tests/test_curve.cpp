#include <doctest.h>

#include <apc/certify.hpp>
#include <apc/curve.hpp>

using namespace apc;

namespace {

using QPoint = ECPoint<Rat>;
using QCurve = ShortWCurve<Rat>;

QPoint pt(long x, long y) { return QPoint(Rat(x), Rat(y)); }

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("membership") {
  QCurve c(Rat(-39), Rat(-173));
  CHECK(c.contains(pt(11, 27)));
  CHECK(!c.contains(pt(11, 28)));
  CHECK(c.contains(QPoint::inf()));
}

TEST_CASE("singular models are rejected") {
  CHECK_THROWS_AS(QCurve(Rat(0), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(QCurve(Rat(-3), Rat(2)), std::invalid_argument);
  QCurve ok(Rat(-3), Rat(3));
  CHECK(ok.discriminant() == Rat(-16) * Rat(4 * -27 + 27 * 9));
}

TEST_CASE("two torsion addition") {
  QCurve c(Rat(-1), Rat(0));  // y^2 = x^3 - x
  QPoint a = pt(0, 0), b = pt(1, 0), d = pt(-1, 0);
  CHECK(c.add(a, b) == d);
  CHECK(c.add(a, d) == b);
  CHECK(c.dbl(a) == QPoint::inf());
  CHECK(c.add(a, a) == QPoint::inf());
}

TEST_CASE("doubling oracle") {
  // hand computation on y^2 = x^3 - 16x + 16 at (0,4):
  // lambda = -16/8 = -2, x3 = 4, y3 = -2(0-4) - 4 = 4
  QCurve c(Rat(-16), Rat(16));
  QPoint p = pt(0, 4);
  REQUIRE(c.contains(p));
  QPoint two = c.dbl(p);
  CHECK(two == pt(4, 4));
  CHECK(c.contains(two));
}

TEST_CASE("scalar multiples") {
  QCurve c(Rat(-16), Rat(16));
  QPoint p = pt(0, 4);
  QPoint acc = QPoint::inf();
  for (int m = 1; m <= 9; ++m) {
    acc = c.add(acc, p);
    CHECK(acc == c.mul(m, p));
    CHECK(c.contains(acc));
  }
  CHECK(c.mul(0, p) == QPoint::inf());
  CHECK(c.mul(-3, p) == c.neg(c.mul(3, p)));
  CHECK(c.add(c.mul(5, p), c.mul(-5, p)) == QPoint::inf());
}

TEST_CASE("integer roots of monic cubics") {
  // z^3 - z: roots -1, 0, 1
  CHECK(integer_roots_monic_cubic(BigInt(-1), BigInt(0)) ==
        std::vector<BigInt>{-1, 0, 1});
  // z^3 + z: root 0 only
  CHECK(integer_roots_monic_cubic(BigInt(1), BigInt(0)) == std::vector<BigInt>{0});
  // z^3 - 6z^2 + 11z - 6 is not depressed; instead (z-10)(z+3)(z+7) = z^3 - 79z - 210
  CHECK(integer_roots_monic_cubic(BigInt(-79), BigInt(-210)) ==
        std::vector<BigInt>{-7, -3, 10});
  // z^3 + 1: root -1
  CHECK(integer_roots_monic_cubic(BigInt(0), BigInt(1)) == std::vector<BigInt>{-1});
  // no roots
  CHECK(integer_roots_monic_cubic(BigInt(0), BigInt(2)).empty());
  CHECK(integer_roots_monic_cubic(BigInt(-4), BigInt(2)).empty());
}

TEST_CASE("rational two torsion") {
  QCurve c(Rat(-1), Rat(0));
  CHECK(two_torsion_x(c) == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});

  QCurve cubic1(Rat(0), Rat(1));
  CHECK(two_torsion_x(cubic1) == std::vector<Rat>{Rat(-1)});

  // the n = 2 odd-exponent fiber: full rational 2-torsion
  QCurve odd2(Rat(-82971), Rat(497610));
  CHECK(two_torsion_x(odd2) == std::vector<Rat>{Rat(-291), Rat(6), Rat(285)});

  // the n = 2 even-exponent fiber
  QCurve even2(Rat(-9338112), Rat(10301423616));
  CHECK(two_torsion_x(even2) == std::vector<Rat>{Rat(-3504), Rat(1392), Rat(2112)});

  // fractional coefficients still find halves-free roots after clearing
  QCurve frac(make_rat(-1, 16), Rat(0));
  CHECK(two_torsion_x(frac) ==
        std::vector<Rat>{make_rat(-1, 4), Rat(0), make_rat(1, 4)});
}

TEST_CASE("integral model") {
  QCurve c(make_rat(1, 4), make_rat(1, 8));
  IntegralModel m = integral_model(c);
  CHECK(m.scale == 2);
  CHECK(m.curve.A == Rat(4));
  CHECK(m.curve.B == Rat(8));
  QPoint p(make_rat(1, 2), make_rat(7, 8));  // not on c; mapping is formal
  QPoint q = m.map_point(p);
  CHECK(q.x == Rat(2));
  CHECK(q.y == Rat(7));

  QCurve c2(make_rat(1, 3), Rat(1));
  IntegralModel m2 = integral_model(c2);
  CHECK(m2.scale == 3);
  CHECK(m2.curve.A == Rat(27));

  QCurve c3(Rat(-39), Rat(-173));
  CHECK(integral_model(c3).scale == 1);
}

TEST_CASE("certify torsion orders") {
  QCurve c(Rat(0), Rat(1));  // y^2 = x^3 + 1, torsion Z/6
  auto c6 = certify_order(c, pt(2, 3));
  CHECK(c6.verdict == OrderVerdict::torsion);
  CHECK(c6.order == 6);
  CHECK(c6.verify(c, pt(2, 3)));

  auto c3 = certify_order(c, pt(0, 1));
  CHECK(c3.verdict == OrderVerdict::torsion);
  CHECK(c3.order == 3);

  auto c2 = certify_order(c, pt(-1, 0));
  CHECK(c2.verdict == OrderVerdict::torsion);
  CHECK(c2.order == 2);

  auto c1 = certify_order(c, QPoint::inf());
  CHECK(c1.verdict == OrderVerdict::torsion);
  CHECK(c1.order == 1);

  QCurve c4(Rat(4), Rat(0));  // (2,4) has order 4
  auto cert4 = certify_order(c4, pt(2, 4));
  CHECK(cert4.verdict == OrderVerdict::torsion);
  CHECK(cert4.order == 4);
  CHECK(cert4.verify(c4, pt(2, 4)));
}

TEST_CASE("certify infinite order") {
  QCurve c(Rat(-16), Rat(16));
  auto cert = certify_order(c, pt(0, 4));
  CHECK(cert.verdict == OrderVerdict::infinite);
  CHECK(cert.verify(c, pt(0, 4)));

  // non-integral input is its own evidence
  QCurve c2(Rat(0), Rat(17));
  QPoint half(make_rat(1, 4), make_rat(33, 8));
  REQUIRE(c2.contains(half));
  auto cert2 = certify_order(c2, half);
  CHECK(cert2.verdict == OrderVerdict::infinite);
  CHECK(cert2.evidence_m == 1);
  CHECK(cert2.verify(c2, half));

  CHECK_THROWS_AS(certify_order(c, pt(1, 2)), std::invalid_argument);
}

TEST_CASE("odd family generator evidence") {
  // first non-integral multiple of (-273, 1674) on the n = 2 fiber is 3P
  QCurve c(Rat(-82971), Rat(497610));
  QPoint p = pt(-273, 1674);
  REQUIRE(c.contains(p));
  auto cert = certify_order(c, p);
  CHECK(cert.verdict == OrderVerdict::infinite);
  CHECK(cert.evidence_m == 3);
  CHECK(!cert.via_height);
  CHECK(cert.verify(c, p));
  // frozen multiples
  CHECK(c.mul(2, p) == pt(2310, -110160));
  CHECK(c.mul(3, p).x == make_rat(-13380177, 82369));
  CHECK(c.mul(4, p).x == make_rat(4474490881, 7398400));
}

TEST_CASE("curves over rational functions") {
  // the group law is generic: it works verbatim over Q(t)
  RatFunc t = RatFunc::var();
  ShortWCurve<RatFunc> c(RatFunc(0), t.pow(2) + RatFunc(1));
  ECPoint<RatFunc> q(RatFunc(-1), t);  // (-1)^3 + t^2 + 1 = t^2
  CHECK(c.contains(q));
  CHECK(!c.contains(ECPoint<RatFunc>(RatFunc(0), t)));
  auto two = c.dbl(q);
  CHECK(c.contains(two));
  auto four = c.dbl(two);
  CHECK(c.contains(four));
  CHECK(c.add(two, q) == c.sub(four, q));
}

}  // TEST_SUITE
