#pragma once

// Perelomov-Popov generating functions for the Casimir spectra of the
// classical groups, in two forms:
//
//   rows   - the product over the index range with the rank fixed to an
//            integer; this is the ground truth at that rank.
//   blocks - the same product rewritten through the block parametrization
//            (A_i, B_i) of the diagram, with n a formal symbol. This is the
//            analytic continuation in n used by the duality statements.
//
// All functions are exact rational functions in the symbols "n" and "z".

#include "negdim/partitions.hpp"
#include "negdim/ratfunc.hpp"
#include "negdim/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace negdim::casimir {

inline const std::string kN = "n";
inline const std::string kZ = "z";

enum class Family { U, SU, B, C, D };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::U: return "U(n)";
    case Family::SU: return "SU(n)";
    case Family::B: return "O(2n+1)";
    case Family::C: return "Sp(2n)";
    case Family::D: return "O(2n)";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "u" || s == "U") return Family::U;
  if (s == "su" || s == "SU") return Family::SU;
  if (s == "b" || s == "B") return Family::B;
  if (s == "c" || s == "C") return Family::C;
  if (s == "d" || s == "D") return Family::D;
  throw std::invalid_argument("unknown group family '" + s + "' (expected u, su, b, c or d)");
}

/// One row of the parameter table. U(n) shares the SU(n) row; only the
/// weights differ (U: λ_i, SU: λ_i - |λ|/n).
struct GroupSpec {
  Family family;
  RatFunc alpha;  // in n
  Rational beta;

  bool is_a_type() const { return family == Family::U || family == Family::SU; }

  /// r_i with ε_i = sign(i), ε_0 = 0.
  RatFunc shift(int i, const RatFunc& n) const {
    int eps = (i > 0) - (i < 0);
    switch (family) {
      case Family::U:
      case Family::SU: return (n + 1) / RatFunc(2) - RatFunc(i);
      case Family::B: return (n + RatFunc(Rational(1, 2))) * RatFunc(eps) - RatFunc(i);
      case Family::C: return (n + 1) * RatFunc(eps) - RatFunc(i);
      case Family::D: return n * RatFunc(eps) - RatFunc(i);
    }
    return {};
  }

  /// Index range for integer rank: 1..n, ±1..±n, or 0,±1..±n.
  std::vector<int> indices(int rank) const {
    std::vector<int> out;
    if (family == Family::B) out.push_back(0);
    for (int i = 1; i <= rank; ++i) {
      out.push_back(i);
      if (!is_a_type()) out.push_back(-i);
    }
    return out;
  }
};

inline GroupSpec group_spec(Family f) {
  RatFunc n = sym(kN);
  switch (f) {
    case Family::U:
    case Family::SU: return {f, (n - 1) / RatFunc(2), 0};
    case Family::B: return {f, n - RatFunc(Rational(1, 2)), 1};
    case Family::C: return {f, n, -1};
    case Family::D: return {f, n - 1, 1};
  }
  throw std::logic_error("group_spec: bad family");
}

/// z times the first multiplier: 1 + βz / (2 - (2α+1)z). This reproduces the
/// tabulated first multipliers (and the constant generating function of the
/// trivial representation).
inline RatFunc first_multiplier(const GroupSpec& spec) {
  RatFunc z = sym(kZ);
  RatFunc two(2);
  return RatFunc(1) + RatFunc(spec.beta) * z / (two - (two * spec.alpha + 1) * z);
}

namespace detail {

// Accumulates a product of factors as separate numerator/denominator
// polynomials; normalized once at the end.
class Product {
 public:
  void mul(const RatFunc& f) {
    num_ *= f.num();
    den_ *= f.den();
  }
  void div(const RatFunc& f) {
    num_ *= f.den();
    den_ *= f.num();
  }
  RatFunc result() const { return RatFunc(num_, den_); }

 private:
  MultiPoly num_{1};
  MultiPoly den_{1};
};

// 1 - z*x
inline RatFunc lin(const RatFunc& x) { return RatFunc(1) - sym(kZ) * x; }

}  // namespace detail

/// Π_G(λ, z) = Π_i (1 - z(m_i+1)) / (1 - z m_i) at integer rank.
inline RatFunc pi_rows(const GroupSpec& spec, const Partition& lambda, int rank) {
  if (rank < 1) throw std::invalid_argument("pi_rows: rank must be positive");
  if (lambda.length() > rank)
    throw std::invalid_argument("pi_rows: partition " + lambda.str() + " has more parts than the rank " +
                                std::to_string(rank));
  RatFunc n(rank);
  RatFunc alpha = spec.alpha.substitute(kN, n);
  std::vector<int> parts = lambda.padded(rank);
  Rational su_shift = spec.family == Family::SU ? Rational(lambda.weight(), rank) : Rational(0);
  detail::Product prod;
  for (int i : spec.indices(rank)) {
    RatFunc l;
    if (i != 0) {
      int ai = i > 0 ? i : -i;
      RatFunc li = RatFunc(Rational(parts[ai - 1]) - su_shift) + spec.shift(ai, n);
      l = i > 0 ? li : -li;
    }
    RatFunc m = l + alpha;
    prod.mul(detail::lin(m + 1));
    prod.div(detail::lin(m));
  }
  return prod.result();
}

/// Block-parametrized Π_G(λ, z) with n formal. Defined for U, SU, Sp, SO.
///
/// For SU the products carry the shift n -> n - t/n (t = |λ|) and, in
/// addition, the factor 1/(1 + z t/n) left over from telescoping the empty
/// rows; without it the block form disagrees with the row product.
inline RatFunc pi_blocks(const GroupSpec& spec, const Partition& lambda) {
  if (spec.family == Family::B) throw std::invalid_argument("pi_blocks: no block form for O(2n+1)");
  const BlockParam bp = block_param(lambda);
  const int k = bp.blocks();
  const RatFunc n = sym(kN);
  auto A = [&](int i) { return RatFunc(bp.A[i]); };
  auto B = [&](int i) { return RatFunc(bp.B[i]); };
  detail::Product prod;

  if (spec.is_a_type()) {
    RatFunc s = n;
    if (spec.family == Family::SU) {
      RatFunc t_over_n = RatFunc(lambda.weight()) / n;
      s = n - t_over_n;
      prod.div(detail::lin(-t_over_n));
    }
    for (int a = 0; a <= k; ++a) prod.mul(detail::lin(B(k - a) - A(a) + s));
    for (int a = 1; a <= k; ++a) prod.div(detail::lin(B(k - a + 1) - A(a) + s));
    return prod.result();
  }

  const bool symplectic = spec.family == Family::C;
  const RatFunc s = symplectic ? RatFunc(2) * n + 1 : RatFunc(2) * n - 1;
  for (int a = 0; a <= k; ++a) prod.mul(detail::lin(B(k - a) - A(a) + s));
  for (int a = 1; a <= k; ++a) prod.div(detail::lin(B(k - a + 1) - A(a) + s));
  prod.mul(detail::lin(n));
  prod.div(detail::lin(symplectic ? n + 1 : n - 1));
  for (int a = 0; a <= k; ++a) prod.div(detail::lin(A(a) - B(k - a)));
  for (int a = 1; a <= k; ++a) prod.mul(detail::lin(A(a) - B(k - a + 1)));
  return prod.result();
}

/// The closed forms for rectangular diagrams R_{p,q} (q rows of length p),
/// transcribed as printed. Used only as claims to check against pi_blocks.
inline RatFunc printed_rectangle(Family f, int p, int q) {
  RatFunc n = sym(kN), P(p), Q(q);
  using detail::lin;
  switch (f) {
    case Family::U: return lin(P + n) * lin(n - Q) / lin(P - Q + n);
    case Family::SU: {
      RatFunc pq = P * Q / n;
      return lin(P - pq + n) * lin(n - pq - Q) / lin(P - pq - Q + n);
    }
    case Family::C:
      return lin(P + RatFunc(2) * n + 1) * lin(RatFunc(2) * n + 1 - Q) * lin(Q - P) * lin(n) /
             (lin(P - Q + RatFunc(2) * n + 1) * lin(n + 1) * lin(-P) * lin(Q));
    case Family::D:
      return lin(P + RatFunc(2) * n - 1) * lin(RatFunc(2) * n - 1 - Q) * lin(Q - P) * lin(n) /
             (lin(P - Q + RatFunc(2) * n - 1) * lin(n - 1) * lin(-P) * lin(Q));
    case Family::B: break;
  }
  throw std::invalid_argument("printed_rectangle: no printed form for O(2n+1)");
}

struct Mode {
  bool blocks = true;
  int rank = 0;  // used when !blocks

  static Mode Blocks() { return {true, 0}; }
  static Mode Rows(int rank) { return {false, rank}; }
};

struct CasimirGF {
  GroupSpec spec;
  Partition lambda;
  RatFunc gf;  // Σ_p C_p z^p
  RatFunc pi;
};

/// C_G(λ, z) = first_multiplier * (1 - Π) / z, with the division by z exact.
inline CasimirGF casimir_gf(const GroupSpec& spec, const Partition& lambda, Mode mode) {
  RatFunc pi = mode.blocks ? pi_blocks(spec, lambda) : pi_rows(spec, lambda, mode.rank);
  RatFunc fm = first_multiplier(spec);
  if (!mode.blocks) fm = fm.substitute(kN, RatFunc(mode.rank));
  RatFunc one_minus = RatFunc(1) - pi;
  const MultiPoly& num = one_minus.num();
  if (!num.coeff_in(kZ, 0).is_zero())
    throw std::logic_error("casimir_gf: 1 - Π does not vanish at z = 0 for " + lambda.str());
  auto reduced = MultiPoly::divide(num, MultiPoly::symbol(kZ));
  if (!reduced) throw std::logic_error("casimir_gf: numerator not divisible by z");
  RatFunc gf = fm * RatFunc(*reduced, one_minus.den());
  return {spec, lambda, gf, pi};
}

inline std::vector<RatFunc> casimir_coeffs(const GroupSpec& spec, const Partition& lambda, int order,
                                           Mode mode = Mode::Blocks()) {
  return series_expand(casimir_gf(spec, lambda, mode).gf, kZ, order).coefficients;
}

struct DualityCheck {
  bool holds = false;
  RatFunc lhs, rhs;
};

/// f(n, z) -> f(-n, -z)
inline RatFunc flip_n_z(const RatFunc& f) {
  return f.substitute({{kN, -sym(kN)}, {kZ, -sym(kZ)}});
}

/// C_{Sp(2n)}(λ, z) = -C_{SO(2n)}(λ', -z) at n -> -n.
inline DualityCheck check_sp_so_duality(const Partition& lambda) {
  RatFunc lhs = casimir_gf(group_spec(Family::C), lambda, Mode::Blocks()).gf;
  RatFunc rhs = -flip_n_z(casimir_gf(group_spec(Family::D), transpose(lambda), Mode::Blocks()).gf);
  return {equal(lhs, rhs), lhs, rhs};
}

/// C_{U(n)}(λ, z) = -C_{U(-n)}(λ', -z).
inline DualityCheck check_u_selfduality(const Partition& lambda) {
  RatFunc lhs = casimir_gf(group_spec(Family::U), lambda, Mode::Blocks()).gf;
  RatFunc rhs = -flip_n_z(casimir_gf(group_spec(Family::U), transpose(lambda), Mode::Blocks()).gf);
  return {equal(lhs, rhs), lhs, rhs};
}

/// Π_{SU(n)}(R_{p,q}, z) is fixed by n -> -n, p <-> q, z -> -z.
inline DualityCheck check_su_rectangle_invariance(int p, int q) {
  auto su = group_spec(Family::SU);
  RatFunc lhs = pi_blocks(su, rectangle(p, q));
  RatFunc rhs = flip_n_z(pi_blocks(su, rectangle(q, p)));
  return {equal(lhs, rhs), lhs, rhs};
}

}  // namespace negdim::casimir
