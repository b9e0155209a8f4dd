// Acceptance gate: the ten end-to-end criteria, each with its time budget.
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "negdim/casimir.hpp"
#include "negdim/dims.hpp"
#include "negdim/jack.hpp"
#include "negdim/schur.hpp"
#include "negdim/spaces.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace negdim;

namespace {

struct Outcome {
  bool holds = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string frac(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

const std::vector<Partition>& sweep() {
  static const auto parts = partitions_up_to(6);
  return parts;
}

Outcome casimir_duality() {
  int ok = 0;
  for (const auto& l : sweep()) ok += casimir::check_sp_so_duality(l).holds;
  return {ok == static_cast<int>(sweep().size()), frac(ok, sweep().size()) + " partitions, |lambda| <= 6"};
}

Outcome u_selfduality() {
  int ok = 0;
  for (const auto& l : sweep()) ok += casimir::check_u_selfduality(l).holds;
  return {ok == static_cast<int>(sweep().size()), frac(ok, sweep().size()) + " partitions"};
}

Outcome row_block() {
  using namespace casimir;
  const std::vector<Family> families{Family::U, Family::SU, Family::C, Family::D};
  int rows_ok = 0, rows_total = 0;
  for (auto f : families) {
    auto spec = group_spec(f);
    for (const auto& l : sweep()) {
      RatFunc blocks = pi_blocks(spec, l);
      const int lo = std::max(1, l.length());
      bool all = true;
      for (int rank = lo; rank < lo + 5; ++rank)
        all = all && equal(pi_rows(spec, l, rank), blocks.substitute(kN, RatFunc(rank)));
      rows_ok += all;
      ++rows_total;
    }
  }
  std::string text = "rows = blocks " + frac(rows_ok, rows_total) + "; printed rectangles:";
  bool holds = rows_ok == rows_total;
  for (auto f : families) {
    int ok = 0, restored = 0;
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        RatFunc printed = printed_rectangle(f, p, q), blocks = pi_blocks(group_spec(f), rectangle(p, q));
        ok += equal(printed, blocks);
        RatFunc t(static_cast<long>(p) * q);
        restored += equal(printed / casimir::detail::lin(-t / sym(kN)), blocks);
      }
    holds = holds && ok == 16;
    text += " " + family_name(f) + " " + frac(ok, 16);
    if (ok != 16) text += " (" + frac(restored, 16) + " after the factor 1/(1 + z*t/n))";
  }
  return {holds, text};
}

Outcome trivial_constants() {
  using namespace casimir;
  const std::vector<std::pair<Family, dims::Family>> groups{
      {Family::U, dims::Family::A}, {Family::C, dims::Family::C}, {Family::D, dims::Family::D}};
  Outcome o;
  for (auto [cf, df] : groups) {
    RatFunc gf = casimir_gf(group_spec(cf), Partition{}, Mode::Blocks()).gf;
    RatFunc want = cf == Family::U ? sym(kN) : RatFunc(2) * sym(kN);
    bool ok = equal(gf, want);
    for (int n = 2; n <= 6; ++n)
      ok = ok && gf.evaluate({{kN, Rational(n)}}) == Rational(dims::weyl_dim(df, Partition{1}, n));
    o.holds = o.holds && ok;
    o.detail += family_name(cf) + ": " + gf.str() + (ok ? "" : " MISMATCH") + "; ";
  }
  o.detail += "weyl_dim checked at n = 2..6";
  return o;
}

Outcome king() {
  int ok = 0, unsigned_ok = 0;
  for (const auto& l : sweep()) {
    auto r = dims::king_check(l);
    ok += r.holds;
    unsigned_ok += r.holds_unsigned;
  }
  const MultiPoly N = MultiPoly::symbol(dims::kRank);
  bool instance = dims::dim_poly(dims::Family::C, Partition{2}).poly == N * (MultiPoly(2) * N + 1) &&
                  dims::dim_poly(dims::Family::D, Partition{1, 1}).poly == N * (MultiPoly(2) * N - 1);
  return {ok == static_cast<int>(sweep().size()) && instance,
          "with sign (-1)^|lambda| " + frac(ok, sweep().size()) + " (unsigned " + frac(unsigned_ok, sweep().size()) +
              ", the even weights); N(2N+1) <-> N(2N-1) " + (instance ? "reproduced" : "NOT reproduced")};
}

Outcome conjugation() {
  int ok = 0, printed = 0;
  for (int d = 1; d <= 6; ++d) {
    auto r = jack::check_conjugation(d);
    ok += r.holds;
    printed += r.printed_holds;
  }
  return {ok == 6, "theta L theta^-1 = k L(1/k, k*p0) on degrees 1..6: " + frac(ok, 6) + " (with p0/k: " +
                       frac(printed, 6) + ")"};
}

Outcome macdonald() {
  int ok = 0, schur_ok = 0, total = 0;
  for (const auto& l : sweep()) {
    if (l.empty()) continue;
    ++total;
    try {
      ok += !jack::macdonald_duality(l, sym(jack::kK)).is_zero();
    } catch (const std::logic_error&) {
    }
    schur_ok += jack::jack(l, RatFunc(-1)).m_expansion == schur::schur_m(l);
  }
  return {ok == total && schur_ok == total,
          "proportional with nonzero c " + frac(ok, total) + "; Schur at k = -1 " + frac(schur_ok, total)};
}

Outcome diagram() {
  int ok = 0, total = 0;
  for (int w = 1; w <= 5; ++w)
    for (const auto& mu : partitions_of(w))
      for (int n = 1; n <= 4; ++n) {
        ++total;
        ok += jack::check_diagram(mu, sym(jack::kK), n).holds;
      }
  return {ok == total, frac(ok, total) + " (mu, N) pairs"};
}

Outcome dual_pairs() {
  using namespace spaces;
  int ok = 0, expected = 0, other = 0;
  for (const auto& row : printed_pairs()) {
    auto m = dual_space(row.source);
    ok += m.pairing_reproduced();
    for (const auto& d : m.discrepancies) (d.id == kBdiDiscrepancyId ? expected : other)++;
  }
  const RatFunc k = sym("k"), p = sym("p"), q = sym("q"), N = sym(kSizeN);
  KPQ xx = bc_dual(bc_dual({k, p, q, N}));
  bool involution = xx.k == k && *xx.p == p && *xx.q == q && xx.n == N;
  const int rows = static_cast<int>(printed_pairs().size());
  return {ok == rows && involution && expected == 1 && other == 0,
          "pairs reproduced " + frac(ok, rows) + "; bc_dual involution " + (involution ? "yes" : "no") +
              "; expected discrepancies " + std::to_string(expected) + ", other " + std::to_string(other)};
}

Outcome vogel() {
  using namespace dims;
  int ok = 0;
  for (auto f : {VogelFamily::Sp2n, VogelFamily::Sln, VogelFamily::Son})
    ok += equal(vogel_dim(vogel_classical(f)), classical_dimension(f));
  auto r = vogel_sp_so();
  return {ok == 3 && r.holds, "classical dimensions " + frac(ok, 3) + "; " + triple_str(r.scaled_sp) + " ~ " +
                                  triple_str(r.so_minus) + (r.holds ? "" : " FAILS")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Sp(2n)/SO(-2n) Casimir duality", 30, casimir_duality},
      {2, "U(n) self-duality", 30, u_selfduality},
      {3, "row/block consistency and rectangle closed forms", 60, row_block},
      {4, "trivial-representation constants", 5, trivial_constants},
      {5, "King duality", 30, king},
      {6, "operator conjugation", 60, conjugation},
      {7, "Macdonald duality", 120, macdonald},
      {8, "commutative diagram", 60, diagram},
      {9, "symmetric-space dual pairs", 5, dual_pairs},
      {10, "Vogel dimension formula", 5, vogel},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.holds && s < c.budget_s;
    failed += !pass;
    std::printf("criterion %2d %s  %-50s %7.3f s (budget %g s)  %s\n", c.number, pass ? "PASS" : "FAIL",
                c.title.c_str(), s, c.budget_s, o.detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
