#include <doctest.h>

#include <cmath>
#include <random>

#include <apc/heights.hpp>

using namespace apc;

namespace {

using QPoint = ECPoint<Rat>;
using QCurve = ShortWCurve<Rat>;

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("group law on random curves") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::uniform_int_distribution<long> mult(-6, 6);

  int done = 0;
  while (done < 300) {
    long A = coef(rng);
    long x0 = coord(rng);
    long y0 = coord(rng);
    if (y0 == 0) continue;
    // choose B so that (x0, y0) lies on y^2 = x^3 + Ax + B
    BigInt B = BigInt(y0) * y0 - BigInt(x0) * x0 * x0 - BigInt(A) * x0;
    BigInt disc = 4 * BigInt(A) * A * A + 27 * B * B;
    if (disc == 0) continue;
    QCurve c{Rat(A), Rat(B)};
    QPoint p{Rat(x0), Rat(y0)};
    REQUIRE(c.contains(p));

    long m = mult(rng), n = mult(rng);
    QPoint mp = c.mul(m, p), np = c.mul(n, p);
    CHECK(c.add(mp, np) == c.mul(m + n, p));
    CHECK(c.add(np, mp) == c.add(mp, np));
    CHECK(c.contains(mp));
    ++done;
  }
}

TEST_CASE("associativity on multiples") {
  QCurve c(Rat(-16), Rat(16));
  QPoint p(Rat(0), Rat(4));
  for (int i = 1; i <= 5; ++i) {
    QPoint q = c.mul(i, p), r = c.mul(i + 2, p);
    CHECK(c.add(c.add(p, q), r) == c.add(p, c.add(q, r)));
  }
}

TEST_CASE("height quadruples under doubling across curves") {
  struct Case { long A, B, x, y; };
  // integral points of infinite order on small curves
  const Case cases[] = {
      {-16, 16, 0, 4},
      {0, 17, -2, 3},
      {0, -2, 3, 5},
  };
  for (const Case& t : cases) {
    QCurve c{Rat(t.A), Rat(t.B)};
    QPoint p{Rat(t.x), Rat(t.y)};
    REQUIRE(c.contains(p));
    auto h1 = canonical_height(c, p);
    auto h2 = canonical_height(c, c.dbl(p));
    double tol = 4 * h1.error_bound + h2.error_bound + 1e-18;
    CHECK(std::abs(h2.value_big.to_double() - 4 * h1.value_big.to_double()) <= tol);
  }
}

}  // TEST_SUITE
