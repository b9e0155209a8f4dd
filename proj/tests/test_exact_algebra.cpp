#include <catch_amalgamated.hpp>

#include "negdim/ratfunc.hpp"
#include "negdim/series.hpp"

#include <random>

using namespace negdim;

namespace {

RatFunc n() { return sym("n"); }
RatFunc z() { return sym("z"); }

MultiPoly random_poly(std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4), count(1, max_terms);
  std::vector<std::pair<Exponents, Rational>> terms;
  int t = count(rng);
  for (int i = 0; i < t; ++i) terms.push_back({{deg(rng), deg(rng)}, Rational(coef(rng))});
  return MultiPoly::from_terms({"n", "z"}, terms);
}

RatFunc random_ratfunc(std::mt19937& rng) {
  MultiPoly d;
  while (d.is_zero()) d = random_poly(rng, 2, 3);
  // A shared factor exercises the gcd.
  MultiPoly common = random_poly(rng, 1, 2);
  if (common.is_zero()) common = MultiPoly(1);
  return RatFunc(random_poly(rng, 2, 4) * common, d * common);
}

std::map<std::string, Rational> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  return {{"n", Rational(num(rng), den(rng))}, {"z", Rational(num(rng), den(rng))}};
}

}  // namespace

TEST_CASE("rational arithmetic and parsing", "[rational]") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(2, -4).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("polynomial canonical form and rendering", "[multipoly]") {
  MultiPoly p = MultiPoly::symbol("n") * MultiPoly::symbol("z") - MultiPoly(1);
  CHECK(p.str() == "n*z - 1");
  MultiPoly q = MultiPoly::symbol("z") - MultiPoly::symbol("z");
  CHECK(q.is_zero());
  CHECK(q.symbols().empty());
  MultiPoly r = (MultiPoly::symbol("n") + 1).pow(2) * Rational(1, 2);
  CHECK(r.str() == "1/2*n^2 + n + 1/2");
  CHECK(MultiPoly::divide(r, MultiPoly::symbol("n") + 1)->str() == "1/2*n + 1/2");
  CHECK_FALSE(MultiPoly::divide(r, MultiPoly::symbol("n")).has_value());
}

TEST_CASE("multivariate gcd", "[multipoly]") {
  MultiPoly x = MultiPoly::symbol("x"), y = MultiPoly::symbol("y");
  MultiPoly g = x * y - 1;
  MultiPoly a = g * (x + y) * (x - 2), b = g * (x * x + y) * Rational(3, 2);
  CHECK(gcd(a, b) == g);
  CHECK(gcd(x + 1, y + 1) == MultiPoly(1));
  CHECK(gcd(MultiPoly(), x * Rational(-2)) == x);
}

TEST_CASE("ratfunc_arith examples", "[ratfunc]") {
  RatFunc one_minus = RatFunc(1) - z() * n();
  CHECK(equal(RatFunc(1) / one_minus * one_minus, RatFunc(1)));
  RatFunc f = (n() * n() - 1) / (n() - 1);
  CHECK(f.str() == "n + 1");
  CHECK(f.is_polynomial());
  CHECK((z() / one_minus + (-z()) / one_minus).is_zero());
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), std::domain_error);
  CHECK_THROWS_AS(z() / (n() - n()), std::domain_error);
}

TEST_CASE("canonical denominator", "[ratfunc]") {
  RatFunc f = RatFunc(1) / (RatFunc(2) - RatFunc(2) * z() * n());
  CHECK(f.den().str() == "n*z - 1");
  CHECK(f.num().str() == "-1/2");
  CHECK(f.str() == "(-1/2)/(n*z - 1)");
}

TEST_CASE("substitute examples", "[ratfunc]") {
  RatFunc f = RatFunc(1) - z() * n();
  CHECK(equal(f.substitute("n", -n()), RatFunc(1) + z() * n()));
  CHECK(equal(f.substitute({{"n", -n()}, {"z", -z()}}), f));
  RatFunc g = (RatFunc(2) - z() * (RatFunc(2) * n() + 2)) / (RatFunc(2) - z() * (RatFunc(2) * n() + 1));
  RatFunc expected = (RatFunc(2) + z() * (RatFunc(-2) * n() + 2)) / (RatFunc(2) + z() * (RatFunc(-2) * n() + 1));
  CHECK(equal(g.substitute({{"n", -n()}, {"z", -z()}}), expected));
  CHECK(equal(g.substitute("n", RatFunc(1) / n()),
              (RatFunc(2) * n() - z() * (RatFunc(2) + 2 * n())) / (RatFunc(2) * n() - z() * (RatFunc(2) + n()))));
  CHECK_THROWS_AS((RatFunc(1) / (n() - z())).substitute("n", z()), std::domain_error);
}

TEST_CASE("series_expand examples", "[series]") {
  RatFunc geo = RatFunc(1) / (RatFunc(1) - z() * n());
  auto s = series_expand(geo, "z", 3);
  REQUIRE(s.order() == 3);
  CHECK(s.coefficients[0] == RatFunc(1));
  CHECK(s.coefficients[1] == n());
  CHECK(s.coefficients[2] == n() * n());
  CHECK(s.coefficients[3] == n() * n() * n());

  // Long division by hand: (n - z(n^2-1)) / (1 - zn) = n + z + n z^2 + ...
  RatFunc f = (n() - z() * (n() * n() - 1)) / (RatFunc(1) - z() * n());
  auto t = series_expand(f, "z", 2);
  CHECK(t.coefficients == std::vector<RatFunc>{n(), RatFunc(1), n()});

  CHECK(series_expand(RatFunc(1) / (RatFunc(1) - z()), "z", 0).coefficients == std::vector<RatFunc>{RatFunc(1)});
  CHECK_THROWS_AS(series_expand(RatFunc(1) / z(), "z", 2), std::domain_error);
}

TEST_CASE("ratfunc properties on random inputs", "[ratfunc][property]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);

    // Canonicalization is idempotent.
    RatFunc na = a.normalized();
    CHECK(na.num() == a.num());
    CHECK(na.den() == a.den());
    CHECK(gcd(a.num(), a.den()).is_constant());

    // Field axioms.
    CHECK(equal((a + b) - b, a));
    CHECK(equal(a * b, b * a));
    if (!b.is_zero()) CHECK(equal((a / b) * b, a));

    // Equality agrees with evaluation.
    RatFunc c = a * b + a;
    RatFunc c2 = a * (b + 1);
    CHECK(equal(c, c2));
    int checked = 0;
    for (int k = 0; k < 40 && checked < 20; ++k) {
      auto pt = random_point(rng);
      if (a.den().evaluate(pt).is_zero() || b.den().evaluate(pt).is_zero()) continue;
      CHECK(c.evaluate(pt) == c2.evaluate(pt));
      ++checked;
    }
    RatFunc d = c + z();
    for (int k = 0; k < 10; ++k) {
      auto pt = random_point(rng);
      if (c.den().evaluate(pt).is_zero()) continue;
      if (c.evaluate(pt) != d.evaluate(pt)) {
        CHECK_FALSE(equal(c, d));
        break;
      }
    }

    // Double sign flip.
    CHECK(equal(a.substitute("z", -z()).substitute("z", -z()), a));
  }
}

TEST_CASE("series of a product is the Cauchy product", "[series][property]") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 15) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    if (a.den().coeff_in("z", 0).is_zero() || b.den().coeff_in("z", 0).is_zero()) continue;
    auto sa = series_expand(a, "z", 4), sb = series_expand(b, "z", 4);
    CHECK(series_expand(a * b, "z", 4) == cauchy_product(sa, sb));
    ++done;
  }
}
