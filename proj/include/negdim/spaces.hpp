#pragma once

// Classical symmetric spaces: restricted-root multiplicities, the
// (k, p, q) "minus half-multiplicities", the A- and BC-type duality maps,
// and matching of dual pairs against the catalogue.
//
// Sizes are formal symbols N, m, n. Multiplicities are stored per root
// family: α = e_i ± e_j, β = e_i, 2β = 2e_i; A-type spaces have only α.

#include "negdim/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negdim::spaces {

inline const std::string kSizeN = "N";
inline const std::string kSizeM = "m";
inline const std::string kSizeNn = "n";

struct Multiplicities {
  RatFunc alpha;
  std::optional<RatFunc> beta, beta2;
};

struct SpaceSpec {
  std::string label;        // AI, ..., group-D; DIII-odd for the N = 2M+1 row
  std::string name;         // e.g. "SO(m+n)/SO(m)xSO(n)"
  std::string root_system;  // e.g. "BC_n"
  std::vector<std::string> size_params;
  Multiplicities mults;
  bool matchable = true;  // excluded from dual matching when false

  bool bc_type() const { return mults.beta.has_value(); }
};

struct KPQ {
  RatFunc k;
  std::optional<RatFunc> p, q;
  RatFunc n;  // size, scaled by the duality

  std::string str() const {
    std::string s = "(k=" + k.str();
    if (p) s += ", p=" + p->str();
    if (q) s += ", q=" + q->str();
    return s + ", N=" + n.str() + ")";
  }
};

/// Table of restricted-root multiplicities, including the compact groups
/// G = G x G / G with all multiplicities 2.
inline const std::vector<SpaceSpec>& catalogue() {
  static const std::vector<SpaceSpec> table = [] {
    const RatFunc m = sym(kSizeM), n = sym(kSizeNn);
    auto R = [](long v) { return RatFunc(v); };
    std::vector<SpaceSpec> t;
    t.push_back({"AI", "SU(N)/SO(N)", "A_{N-1}", {kSizeN}, {R(1), {}, {}}});
    t.push_back({"AII", "SU(2N)/Sp(2N)", "A_{N-1}", {kSizeN}, {R(4), {}, {}}});
    t.push_back({"AIII", "SU(m+n)/S(U(m)xU(n))", "BC_n", {kSizeM, kSizeNn}, {R(2), R(2) * (m - n), R(1)}});
    t.push_back({"BDI", "SO(m+n)/SO(m)xSO(n)", "B_n", {kSizeM, kSizeNn}, {R(1), m - n, R(0)}});
    t.push_back({"CI", "Sp(2N)/U(N)", "C_N", {kSizeN}, {R(1), R(0), R(1)}});
    t.push_back({"CII", "Sp(2m+2n)/Sp(2m)xSp(2n)", "BC_n", {kSizeM, kSizeNn}, {R(4), R(4) * (m - n), R(3)}});
    t.push_back({"DIII", "SO(2N)/U(N), N=2M", "C_M", {kSizeN}, {R(4), R(0), R(1)}});
    t.push_back({"DIII-odd", "SO(2N)/U(N), N=2M+1", "BC_M", {kSizeN}, {R(4), R(4), R(1)}, false});
    t.push_back({"group-A", "SU(N)", "A_{N-1}", {kSizeN}, {R(2), {}, {}}});
    t.push_back({"group-B", "SO(2N+1)", "B_N", {kSizeN}, {R(2), R(2), R(0)}});
    t.push_back({"group-C", "Sp(2N)", "C_N", {kSizeN}, {R(2), R(0), R(2)}});
    t.push_back({"group-D", "SO(2N)", "D_N", {kSizeN}, {R(2), R(0), R(0)}});
    return t;
  }();
  return table;
}

inline const SpaceSpec& find_space(const std::string& label) {
  for (const auto& s : catalogue())
    if (s.label == label) return s;
  throw std::invalid_argument("unknown symmetric space label: " + label);
}

inline KPQ to_kpq(const SpaceSpec& s) {
  const RatFunc half(Rational(-1, 2));
  KPQ out{half * s.mults.alpha, {}, {}, sym(kSizeN)};
  if (s.mults.beta) out.p = half * *s.mults.beta;
  if (s.mults.beta2) out.q = half * *s.mults.beta2;
  return out;
}

/// k -> 1/k, p -> p/k, 2q+1 -> (2q+1)/k, N -> N/k.
inline KPQ bc_dual(const KPQ& x) {
  if (x.k.is_zero()) throw std::domain_error("bc_dual: k = 0");
  if (!x.p || !x.q) throw std::invalid_argument("bc_dual: p and q are required");
  RatFunc kinv = x.k.inverse();
  RatFunc q = ((RatFunc(2) * *x.q + RatFunc(1)) * kinv - RatFunc(1)) / RatFunc(2);
  return {kinv, *x.p * kinv, q, x.n * kinv};
}

/// k -> 1/k, N -> N/k.
inline KPQ a_dual(const KPQ& x) {
  if (x.k.is_zero()) throw std::domain_error("a_dual: k = 0");
  RatFunc kinv = x.k.inverse();
  return {kinv, {}, {}, x.n * kinv};
}

inline KPQ dual(const KPQ& x) { return x.p ? bc_dual(x) : a_dual(x); }

/// One row of the printed dual-pair table.
struct PrintedPair {
  std::string source, source_name, partner, partner_name;
  KPQ source_kpq, partner_kpq;
};

inline const std::vector<PrintedPair>& printed_pairs() {
  static const std::vector<PrintedPair> rows = [] {
    const RatFunc m = sym(kSizeM), n = sym(kSizeNn), N = sym(kSizeN);
    auto R = [](long v) { return RatFunc(v); };
    auto Q = [](long a, long b) { return RatFunc(Rational(a, b)); };
    std::vector<PrintedPair> t;
    t.push_back({"group-A", "SU(N)", "group-A", "SU(N)", {R(-1), {}, {}, N}, {R(-1), {}, {}, -N}});
    t.push_back({"group-D", "SO(2N)", "group-C", "Sp(2N)", {R(-1), R(0), R(0), N}, {R(-1), R(0), R(-1), -N}});
    t.push_back({"AI", "SU(N)/SO(N)", "AII", "SU(2N)/Sp(2N)", {Q(-1, 2), {}, {}, N}, {R(-2), {}, {}, R(-2) * N}});
    t.push_back({"AIII", "SU(m+n)/S(U(m)xU(n))", "AIII", "SU(m+n)/SU(m)xSU(n)",
                 {R(-1), n - m, Q(-1, 2), N}, {R(-1), n - m, Q(-1, 2), -N}});
    t.push_back({"BDI", "SO(m+n)/SO(m)xSO(n)", "CII", "Sp(2m+2n)/Sp(2m)xSp(2n)",
                 {Q(-1, 2), n - m, R(0), N}, {R(-2), R(2) * (n - m), Q(-3, 2), R(-2) * N}});
    t.push_back({"CI", "Sp(2N)/U(N)", "DIII", "SO(4N)/U(2N)", {Q(-1, 2), R(0), Q(-1, 2), N},
                 {R(-2), R(0), Q(-1, 2), R(-2) * N}});
    return t;
  }();
  return rows;
}

enum class Relabel { None, SwapMN };

inline std::string relabel_name(Relabel r) { return r == Relabel::None ? "none" : "m<->n"; }

/// k and q exactly; p exactly or after exchanging m and n. Size is not compared.
inline std::optional<Relabel> kpq_match(const KPQ& a, const KPQ& b) {
  if (!(a.k == b.k) || a.p.has_value() != b.p.has_value() || a.q.has_value() != b.q.has_value()) return std::nullopt;
  if (a.q && !(*a.q == *b.q)) return std::nullopt;
  if (!a.p || *a.p == *b.p) return Relabel::None;
  if (a.p->rename({{kSizeM, kSizeNn}, {kSizeNn, kSizeM}}) == *b.p) return Relabel::SwapMN;
  return std::nullopt;
}

struct Discrepancy {
  std::string id;  // stable key
  std::string detail;
};

struct DualMatch {
  std::string space;
  KPQ kpq;          // from the multiplicity table
  KPQ printed_kpq;  // as printed in the dual-pair table
  KPQ dual_kpq;     // dual of kpq
  std::optional<std::string> partner;  // first catalogue match of dual_kpq
  Relabel relabel = Relabel::None;
  std::string printed_partner;
  bool printed_pair_reproduced = false;  // dual(printed source) matches printed partner
  Relabel printed_relabel = Relabel::None;
  std::vector<Discrepancy> discrepancies;

  bool qk_consistent = false;  // dual k, q equal the printed partner's multiplicity values

  bool matched() const { return partner.has_value() && *partner == printed_partner; }
  /// The pairing holds in (k, q) from multiplicities and in full from the printed values.
  bool pairing_reproduced() const { return printed_pair_reproduced && qk_consistent; }
};

namespace detail {

inline const PrintedPair& printed_row(const std::string& label) {
  for (const auto& r : printed_pairs())
    if (r.source == label) return r;
  throw std::invalid_argument("dual_space: " + label + " is not a left-column entry of the dual-pair table");
}

inline bool same_values(const KPQ& a, const KPQ& b) {
  auto eq = [](const std::optional<RatFunc>& x, const std::optional<RatFunc>& y) {
    return x.has_value() == y.has_value() && (!x || *x == *y);
  };
  return a.k == b.k && eq(a.p, b.p) && eq(a.q, b.q);
}

}  // namespace detail

/// Dual of a space from its multiplicities, matched against the catalogue and
/// against the printed pair table. Disagreements are reported, not thrown.
inline DualMatch dual_space(const std::string& label) {
  const SpaceSpec& s = find_space(label);
  const PrintedPair& row = detail::printed_row(label);
  DualMatch out{label, to_kpq(s), row.source_kpq, dual(to_kpq(s)), {}, Relabel::None, row.partner, false,
                Relabel::None, {}, false};
  for (const auto& cand : catalogue()) {
    if (!cand.matchable) continue;
    if (auto r = kpq_match(out.dual_kpq, to_kpq(cand))) {
      out.partner = cand.label;
      out.relabel = *r;
      break;
    }
  }
  if (auto r = kpq_match(dual(row.source_kpq), row.partner_kpq)) {
    out.printed_pair_reproduced = true;
    out.printed_relabel = *r;
  }
  // The partner is taken from the catalogue; k and q must agree even when p
  // does not, since p is where the two tables can differ.
  const KPQ partner_table = to_kpq(find_space(row.partner));
  out.qk_consistent = out.dual_kpq.k == partner_table.k &&
                      (!partner_table.q || (out.dual_kpq.q && *out.dual_kpq.q == *partner_table.q));
  const bool p_only = detail::same_values(KPQ{out.kpq.k, row.source_kpq.p, out.kpq.q, out.kpq.n}, row.source_kpq);
  if (!detail::same_values(out.kpq, row.source_kpq)) {
    std::string text = "multiplicities give " + out.kpq.str() + ", printed " + row.source_kpq.str();
    if (!out.partner)
      text += "; dual of the multiplicity value " + out.dual_kpq.str() + " matches no catalogue entry, " +
                row.partner + " has " + partner_table.str();
    out.discrepancies.push_back({"dual-pairs." + label + (p_only ? ".p-normalization" : ".source-kpq"), text});
  } else if (!out.matched()) {
    out.discrepancies.push_back({"dual-pairs." + label + ".unmatched",
                                 "dual " + out.dual_kpq.str() + " has no catalogue partner equal to " + row.partner});
  }
  if (!detail::same_values(partner_table, row.partner_kpq))
    out.discrepancies.push_back({"dual-pairs." + row.partner + ".partner-kpq",
                                 "multiplicities give " + partner_table.str() + ", printed " + row.partner_kpq.str()});
  return out;
}

/// The single known normalization gap: BDI's p from m_β = m-n is (n-m)/2,
/// while the pair table prints n-m.
inline const std::string kBdiDiscrepancyId = "dual-pairs.BDI.p-normalization";

}  // namespace negdim::spaces
