#include <catch_amalgamated.hpp>

#include "negdim/casimir.hpp"
#include "negdim/dims.hpp"

#include <random>

using namespace negdim;
using namespace negdim::dims;

namespace {

MultiPoly X() { return MultiPoly::symbol("N"); }
RatFunc n() { return sym("n"); }

}  // namespace

TEST_CASE("weyl_dim small cases", "[dims]") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(weyl_dim(Family::A, {1}, N) == N);
    CHECK(weyl_dim(Family::C, {1}, N) == 2 * N);
    CHECK(weyl_dim(Family::D, {1}, N) == 2 * N);
    CHECK(weyl_dim(Family::B, {1}, N) == 2 * N + 1);
    CHECK(weyl_dim(Family::C, {2}, N) == N * (2 * N + 1));
    if (N >= 2) CHECK(weyl_dim(Family::D, {1, 1}, N) == N * (2 * N - 1));
    CHECK(weyl_dim(Family::A, {}, N) == 1);
  }
  // Known values: SU(3) adjoint, Sp(4) (1,1) = 5, SO(7) (1,1) = 21, O(6) Λ^3 = 20.
  CHECK(weyl_dim(Family::A, {2, 1}, 3) == 8);
  CHECK(weyl_dim(Family::C, {1, 1}, 2) == 5);
  CHECK(weyl_dim(Family::B, {1, 1}, 3) == 21);
  CHECK(weyl_dim(Family::D, {1, 1, 1}, 3) == 20);
  CHECK(weyl_dim(Family::D, {2}, 1) == 2);
  CHECK_THROWS_AS(weyl_dim(Family::A, {1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(Family::A, {1}, 0), std::invalid_argument);
}

TEST_CASE("dim_poly examples", "[dims]") {
  CHECK(dim_poly(Family::C, {2}).poly == X() * (MultiPoly(2) * X() + 1));
  CHECK(dim_poly(Family::D, {1, 1}).poly == X() * (MultiPoly(2) * X() - 1));
  CHECK(dim_poly(Family::A, {1, 1}).poly == X() * (X() - 1) * Rational(1, 2));
  CHECK(dim_poly(Family::A, {}).poly == MultiPoly(1));
  CHECK(dim_poly(Family::B, {1}).poly == MultiPoly(2) * X() + 1);
}

TEST_CASE("dim_poly degree and values", "[dims][property]") {
  for (const auto& l : partitions_up_to(6))
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
      DimPoly d = dim_poly(f, l);
      CHECK(d.poly.total_degree() <= l.weight());
      for (int N = std::max(1, l.length()); N <= std::max(1, l.length()) + 8; ++N)
        CHECK(d.at(N) == Rational(weyl_dim(f, l, N)));
    }
}

TEST_CASE("family A matches hook-content", "[dims][property]") {
  std::mt19937 rng(20261015);
  auto all = partitions_up_to(6);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> extra(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const Partition& l = all[pick(rng)];
    int N = std::max(1, l.length()) + extra(rng);
    INFO(l.str() << " N=" << N);
    CHECK(dim_poly(Family::A, l).at(N) == hook_content(l, Rational(N)));
  }
  // The polynomial itself agrees with hook-content as a polynomial in N.
  for (const auto& l : all) {
    MultiPoly hc(1);
    Partition t = transpose(l);
    for (int i = 1; i <= l.length(); ++i)
      for (int j = 1; j <= l[i]; ++j)
        hc *= (X() + MultiPoly(j - i)) * Rational(1, (l[i] - j) + (t[j] - i) + 1);
    CHECK(dim_poly(Family::A, l).poly == hc);
  }
}

TEST_CASE("King duality", "[dims]") {
  auto r2 = king_check({2});
  CHECK(r2.holds);
  CHECK(r2.holds_unsigned);
  CHECK(r2.lhs == X() * (MultiPoly(2) * X() + 1));
  auto r1 = king_check({1});
  CHECK(r1.holds);
  CHECK(r1.lhs == MultiPoly(2) * X());
  CHECK(r1.rhs == MultiPoly(-2) * X());
  CHECK_FALSE(r1.holds_unsigned);
  for (const auto& l : partitions_up_to(6)) {
    INFO(l.str());
    auto r = king_check(l);
    CHECK(r.holds);
    CHECK(r.holds_unsigned == (l.weight() % 2 == 0));
  }
}

TEST_CASE("vogel_dim examples", "[dims]") {
  CHECK(vogel_dim({RatFunc(-2), RatFunc(4), n() - RatFunc(4)}) == n() * (n() - RatFunc(1)) / RatFunc(2));
  CHECK(vogel_dim({RatFunc(-2), RatFunc(2), n()}) == n() * n() - RatFunc(1));
  CHECK(vogel_dim({RatFunc(-2), RatFunc(1), n() + RatFunc(2)}) == n() * (RatFunc(2) * n() + RatFunc(1)));
  for (auto f : {VogelFamily::Sp2n, VogelFamily::Sln, VogelFamily::Son})
    CHECK(vogel_dim(vogel_classical(f)) == classical_dimension(f));
  CHECK_THROWS_AS(vogel_dim({RatFunc(0), RatFunc(1), RatFunc(2)}), std::domain_error);
}

TEST_CASE("vogel_dim symmetries", "[dims][property]") {
  const RatFunc a = sym("a"), b = sym("b"), c = sym("c"), s = sym("s");
  RatFunc base = vogel_dim({a, b, c});
  CHECK(vogel_dim({b, a, c}) == base);
  CHECK(vogel_dim({c, b, a}) == base);
  CHECK(vogel_dim({b, c, a}) == base);
  CHECK(vogel_dim({s * a, s * b, s * c}) == base);
}

TEST_CASE("vogel_equiv", "[dims]") {
  auto sp = vogel_classical(VogelFamily::Sp2n);
  VogelTriple target{RatFunc(-2), RatFunc(4), RatFunc(-2) * n() - RatFunc(4)};
  CHECK(vogel_equiv(scale(swap01(sp), RatFunc(-2)), target));
  CHECK(vogel_equiv(target, substitute(vogel_classical(VogelFamily::Son), "n", RatFunc(-2) * n())));
  CHECK_FALSE(vogel_equiv({RatFunc(1), RatFunc(2), RatFunc(3)}, {RatFunc(1), RatFunc(2), RatFunc(4)}));
  CHECK(vogel_equiv({RatFunc(3), RatFunc(1), RatFunc(2)}, {RatFunc(2), RatFunc(4), RatFunc(6)}));
  auto r = vogel_sp_so();
  CHECK(r.holds);
  CHECK(vogel_dim(r.scaled_sp) == vogel_dim(r.so_minus));
  CHECK_FALSE(vogel_equiv(vogel_classical(VogelFamily::Sp2n), vogel_classical(VogelFamily::Son)));
}

TEST_CASE("trivial Casimir constants match fundamental dimensions", "[dims][casimir]") {
  using namespace negdim::casimir;
  const std::vector<std::pair<casimir::Family, dims::Family>> pairs{
      {casimir::Family::U, dims::Family::A}, {casimir::Family::C, dims::Family::C}, {casimir::Family::D, dims::Family::D}};
  for (auto [cf, df] : pairs) {
    RatFunc gf = casimir_gf(group_spec(cf), Partition{}, Mode::Blocks()).gf;
    CHECK(gf.is_polynomial());
    for (int N = 2; N <= 6; ++N)
      CHECK(gf.evaluate({{casimir::kN, Rational(N)}}) == Rational(weyl_dim(df, {1}, N)));
  }
}
