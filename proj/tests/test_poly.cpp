#include <doctest.h>

#include <apc/poly.hpp>
#include <apc/ratfunc.hpp>
#include <apc/field.hpp>

using namespace apc;

namespace {

UniPoly up(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(v);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("arithmetic basics") {
  UniPoly x = UniPoly::var();
  UniPoly f = x * x - Rat(1);
  UniPoly g = x + Rat(1);
  CHECK(f.degree() == 2);
  CHECK((f + g).degree() == 2);
  CHECK((f - f).degree() == -1);
  CHECK((f * g) == up({-1, -1, 1, 1}));
  CHECK(f.eval(Rat(3)) == Rat(8));
  CHECK(f.eval(make_rat(1, 2)) == make_rat(-3, 4));
}

TEST_CASE("division with remainder") {
  UniPoly f = up({2, 0, -3, 1, 4});
  UniPoly g = up({1, 2});
  auto [q, r] = UniPoly::divrem(f, g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK((f * g).divide_exact(g) == f);
  CHECK_THROWS_AS(up({1, 1}).divide_exact(up({0, 1})), std::invalid_argument);
}

TEST_CASE("composition and derivative") {
  UniPoly x = UniPoly::var();
  UniPoly f = x * x + Rat(1);
  UniPoly g = x - Rat(2);
  CHECK(f.compose(g) == up({5, -4, 1}));
  CHECK(f.derivative() == up({0, 2}));
  CHECK(up({7}).derivative().degree() == -1);
}

TEST_CASE("gcd and extended gcd") {
  UniPoly f = up({-1, 0, 1});       // x^2 - 1
  UniPoly g = up({-1, 0, 0, 1});    // x^3 - 1
  CHECK(poly_gcd(f, g) == up({-1, 1}));

  auto e = poly_ext_gcd(f, g);
  CHECK(e.g == up({-1, 1}));
  CHECK(e.u * f + e.v * g == e.g);

  UniPoly a = up({2, 1, 3});
  UniPoly b = up({5, 0, 0, 7});
  auto e2 = poly_ext_gcd(a, b);
  CHECK(e2.g == UniPoly(Rat(1)));
  CHECK(e2.u * a + e2.v * b == e2.g);
}

TEST_CASE("content and primitive part") {
  UniPoly f = up({2, 4, 6});
  CHECK(content(f) == Rat(2));
  CHECK(primitive_part(f) == up({1, 2, 3}));

  std::vector<Rat> cs = {make_rat(1, 2), make_rat(1, 3)};
  UniPoly g{cs};
  CHECK(content(g) == make_rat(1, 6));
  CHECK(primitive_part(g) == up({3, 2}));

  UniPoly h = up({-2, 0, -4});
  CHECK(primitive_part(h).lead() > 0);
}

TEST_CASE("squarefree part") {
  UniPoly v = UniPoly::var();
  CHECK(squarefree_part(Rat(4) * v * v) == v);
  UniPoly f = (v - Rat(1)) * (v - Rat(1)) * (v + Rat(2));
  UniPoly s = squarefree_part(f);
  CHECK(s == (v - Rat(1)) * (v + Rat(2)));
}

TEST_CASE("polynomial square root") {
  UniPoly x = UniPoly::var();
  CHECK(poly_sqrt(x * x + Rat(2) * x + Rat(1)).value() == x + Rat(1));
  CHECK(poly_sqrt(Rat(4) * x * x).value() == Rat(2) * x);
  CHECK(!poly_sqrt(x * x + Rat(1)).has_value());
  UniPoly f = up({2, -1, 0, 3});
  CHECK(poly_sqrt(f * f).value() == f);
  CHECK(!poly_sqrt(x).has_value());
}

TEST_CASE("resultants") {
  UniPoly f = up({1, 0, 1});   // x^2 + 1
  UniPoly g = up({-1, 0, 1});  // x^2 - 1
  CHECK(resultant(f, g) == Rat(4));
  CHECK(resultant(g, f) == Rat(4));
  CHECK(resultant(up({-2, 1}), up({-4, 0, 1})) == Rat(0));
  // swap sign rule: deg f * deg g odd flips the sign
  UniPoly a = up({3, 1});
  UniPoly b = up({1, 2, 1, 1});
  CHECK(resultant(a, b) == -resultant(b, a));
}

TEST_CASE("duplication resultant for y^2 = x^3 + k") {
  // For A = 0, B = k the two x-coordinate duplication polynomials have
  // resultant 186624 k^4.  Checked here for two values of k.
  for (long k : {-2L, 5L}) {
    Rat A(0), B(k);
    UniPoly F{std::vector<Rat>{A * A, Rat(-8) * B, Rat(-2) * A, Rat(0), Rat(1)}};
    UniPoly G{std::vector<Rat>{Rat(4) * B, Rat(4) * A, Rat(0), Rat(4)}};
    Rat r = resultant(F, G);
    CHECK(r == Rat(186624) * pow_rat(Rat(k), 4));
  }
}

TEST_CASE("polynomials over rational functions") {
  // Poly<RatFunc> is what the parametrized families use: coefficients are
  // rational functions of t, the polynomial variable is the fiber one.
  RatFunc t = RatFunc::var();
  Poly<RatFunc> v = Poly<RatFunc>::var();
  Poly<RatFunc> f = v * v - Poly<RatFunc>(t);
  auto val = f.eval(t);  // substitute v = t
  CHECK(val == t * t - t);
  CHECK(f.degree() == 2);
}

TEST_CASE("rational function arithmetic") {
  RatFunc t = RatFunc::var();
  RatFunc f = (t * t - RatFunc(1)) / (t - RatFunc(1));
  CHECK(f == t + RatFunc(1));  // reduction happened
  CHECK(f.eval(Rat(3)).value() == Rat(4));
  RatFunc g = RatFunc(1) / (t - RatFunc(2));
  CHECK(!g.eval(Rat(2)).has_value());
  CHECK(g * (t - RatFunc(2)) == RatFunc(1));
  CHECK((t + RatFunc(1)).pow(2) == t * t + RatFunc(2) * t + RatFunc(1));
}

}  // TEST_SUITE
