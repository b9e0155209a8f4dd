#include <catch_amalgamated.hpp>

#include "negdim/spaces.hpp"

#include <random>

using namespace negdim;
using namespace negdim::spaces;

namespace {

RatFunc Q(long a, long b) { return RatFunc(Rational(a, b)); }
RatFunc R(long v) { return RatFunc(v); }
const RatFunc N = sym("N"), m = sym("m"), n = sym("n");

}  // namespace

TEST_CASE("catalogue rows", "[spaces]") {
  CHECK(catalogue().size() == 12);
  for (const auto& s : catalogue())
    if (s.label.rfind("group-", 0) == 0) {
      CHECK(s.mults.alpha == R(2));
      if (s.mults.beta) CHECK((s.mults.beta->is_zero() || *s.mults.beta == R(2)));
      if (s.mults.beta2) CHECK((s.mults.beta2->is_zero() || *s.mults.beta2 == R(2)));
      CHECK(to_kpq(s).k == R(-1));
    }
  CHECK_FALSE(find_space("DIII-odd").matchable);
  CHECK_THROWS_AS(find_space("EIII"), std::invalid_argument);
}

TEST_CASE("to_kpq examples", "[spaces]") {
  CHECK(to_kpq(find_space("AI")).k == Q(-1, 2));
  CHECK_FALSE(to_kpq(find_space("AI")).p.has_value());
  auto ci = to_kpq(find_space("CI"));
  CHECK(ci.k == Q(-1, 2));
  CHECK(*ci.p == R(0));
  CHECK(*ci.q == Q(-1, 2));
  auto d = to_kpq(find_space("group-D"));
  CHECK((d.k == R(-1) && *d.p == R(0) && *d.q == R(0)));
  auto bdi = to_kpq(find_space("BDI"));
  CHECK(*bdi.p == (n - m) / R(2));
  auto diii = to_kpq(find_space("DIII"));
  CHECK((diii.k == R(-2) && *diii.p == R(0) && *diii.q == Q(-1, 2)));
}

TEST_CASE("bc_dual and a_dual examples", "[spaces]") {
  auto x = bc_dual({Q(-1, 2), R(0), Q(-1, 2), N});
  CHECK((x.k == R(-2) && *x.p == R(0) && *x.q == Q(-1, 2) && x.n == R(-2) * N));
  auto y = bc_dual({R(-1), R(0), R(0), N});
  CHECK((y.k == R(-1) && *y.p == R(0) && *y.q == R(-1) && y.n == -N));
  auto a = a_dual({Q(-1, 2), {}, {}, N});
  CHECK((a.k == R(-2) && a.n == R(-2) * N));
  auto b = a_dual({R(-1), {}, {}, N});
  CHECK((b.k == R(-1) && b.n == -N));
  CHECK_THROWS_AS(bc_dual({R(0), R(0), R(0), N}), std::domain_error);
  CHECK_THROWS_AS(a_dual({R(0), {}, {}, N}), std::domain_error);
  // The DIII entry is the image of CI.
  auto ci = bc_dual(to_kpq(find_space("CI")));
  CHECK(kpq_match(ci, to_kpq(find_space("DIII"))) == Relabel::None);
}

TEST_CASE("dualities are involutions", "[spaces][property]") {
  const RatFunc k = sym("k"), p = sym("p"), q = sym("q");
  KPQ x{k, p, q, N};
  KPQ xx = bc_dual(bc_dual(x));
  CHECK((xx.k == k && *xx.p == p && *xx.q == q && xx.n == N));
  KPQ aa = a_dual(a_dual({k, {}, {}, N}));
  CHECK((aa.k == k && aa.n == N));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-9, 9), pos(1, 9);
  for (int i = 0; i < 50; ++i) {
    long kn = d(rng);
    if (kn == 0) continue;
    KPQ v{Q(kn, pos(rng)), Q(d(rng), pos(rng)), Q(d(rng), pos(rng)), N};
    KPQ w = bc_dual(bc_dual(v));
    CHECK((w.k == v.k && *w.p == *v.p && *w.q == *v.q && w.n == N));
  }
}

TEST_CASE("dual pair table", "[spaces]") {
  int expected = 0;
  for (const auto& row : printed_pairs()) {
    INFO(row.source);
    DualMatch r = dual_space(row.source);
    CHECK(r.pairing_reproduced());
    CHECK(r.dual_kpq.n == to_kpq(find_space(row.source)).n / to_kpq(find_space(row.source)).k);
    for (const auto& dsc : r.discrepancies) {
      CHECK(dsc.id == kBdiDiscrepancyId);
      ++expected;
    }
    if (row.source != "BDI") {
      CHECK(r.matched());
      CHECK(r.discrepancies.empty());
    }
  }
  CHECK(expected == 1);

  auto aiii = dual_space("AIII");
  CHECK(aiii.relabel == Relabel::SwapMN);
  CHECK(*aiii.dual_kpq.p == m - n);

  auto bdi = dual_space("BDI");
  CHECK_FALSE(bdi.matched());
  CHECK(bdi.printed_pair_reproduced);
  CHECK(bdi.printed_relabel == Relabel::SwapMN);
  CHECK(bdi.qk_consistent);
  CHECK(*bdi.dual_kpq.p == m - n);
  CHECK(*bdi.dual_kpq.q == Q(-3, 2));

  CHECK(dual_space("AI").partner == std::optional<std::string>("AII"));
  CHECK(dual_space("CI").partner == std::optional<std::string>("DIII"));
  CHECK(dual_space("group-D").partner == std::optional<std::string>("group-C"));
  CHECK_THROWS_AS(dual_space("CII"), std::invalid_argument);
}
