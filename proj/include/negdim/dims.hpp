#pragma once

// Dimensions of tensor representations as polynomials in the rank N,
// King's transposition duality, and Vogel's universal dimension formula.

#include "negdim/multipoly.hpp"
#include "negdim/partitions.hpp"
#include "negdim/ratfunc.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negdim::dims {

inline const std::string kRank = "N";
inline const std::string kVogelN = "n";

/// A: U(N), B: O(2N+1), C: Sp(2N), D: O(2N).
enum class Family { A, B, C, D };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "a" || s == "A") return Family::A;
  if (s == "b" || s == "B") return Family::B;
  if (s == "c" || s == "C") return Family::C;
  if (s == "d" || s == "D") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected a|b|c|d)");
}

/// Weyl's product over positive roots of (λ+ρ, α)/(ρ, α).
///
/// For D the result is the dimension for O(2N): when λ_N > 0 the SO(2N)
/// module with highest weight λ and its image under the outer automorphism
/// (λ_N -> -λ_N) combine into one O(2N) irreducible, doubling the dimension.
/// This is what makes the D values polynomial in N.
inline BigInt weyl_dim(Family f, const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("weyl_dim: N must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("weyl_dim: " + lambda.str() + " has more than N = " + std::to_string(n) + " parts");
  std::vector<Rational> rho(n + 1), shifted(n + 1);
  for (int i = 1; i <= n; ++i) {
    switch (f) {
      case Family::A: rho[i] = Rational(n - i); break;
      case Family::B: rho[i] = Rational(2 * (n - i) + 1, 2); break;
      case Family::C: rho[i] = Rational(n - i + 1); break;
      case Family::D: rho[i] = Rational(n - i); break;
    }
    shifted[i] = rho[i] + Rational(lambda[i]);
  }
  Rational num(1), den(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= shifted[i] - shifted[j];
      den *= rho[i] - rho[j];
      if (f != Family::A) {
        num *= shifted[i] + shifted[j];
        den *= rho[i] + rho[j];
      }
    }
  for (int i = 1; i <= n; ++i) {
    if (f == Family::B || f == Family::C) {  // e_i and 2e_i give the same ratio
      num *= shifted[i];
      den *= rho[i];
    }
  }
  Rational d = num / den;
  if (f == Family::D && lambda[n] > 0) d *= Rational(2);
  if (!d.is_integer()) throw std::logic_error("weyl_dim: non-integer dimension " + d.str());
  return d.num();
}

/// Π over cells of (N + content) / hook, the U(N) dimension; independent of weyl_dim.
inline Rational hook_content(const Partition& lambda, const Rational& n) {
  Partition t = transpose(lambda);
  Rational d(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      int hook = (lambda[i] - j) + (t[j] - i) + 1;
      d *= (n + Rational(j - i)) / Rational(hook);
    }
  return d;
}

struct DimPoly {
  Family family;
  Partition lambda;
  MultiPoly poly;  // in kRank

  Rational at(long n) const { return poly.evaluate({{kRank, Rational(n)}}); }
};

/// Lagrange interpolation of the Weyl values at N = s, ..., s + |λ| with
/// s = max(1, #parts), confirmed at N = s + |λ| + 1.
inline DimPoly dim_poly(Family f, const Partition& lambda) {
  const int start = std::max(1, lambda.length()), deg = lambda.weight();
  const MultiPoly x = MultiPoly::symbol(kRank);
  MultiPoly poly;
  for (int i = 0; i <= deg; ++i) {
    Rational yi(weyl_dim(f, lambda, start + i));
    MultiPoly basis(1);
    Rational denom(1);
    for (int j = 0; j <= deg; ++j) {
      if (j == i) continue;
      basis *= x - MultiPoly(Rational(start + j));
      denom *= Rational(i - j);
    }
    poly += basis * (yi / denom);
  }
  DimPoly out{f, lambda, poly};
  const int extra = start + deg + 1;
  if (out.at(extra) != Rational(weyl_dim(f, lambda, extra)))
    throw std::logic_error("dim_poly: degree bound fails for " + family_name(f) + " " + lambda.str() + " at N = " +
                           std::to_string(extra));
  return out;
}

struct KingReport {
  Partition lambda;
  MultiPoly lhs;        // dim_C(λ)(N)
  MultiPoly rhs;        // dim_D(λ')(-N)
  bool holds = false;   // lhs = (-1)^{|λ|} rhs
  bool holds_unsigned;  // lhs = rhs
};

/// dim Sp(2N)_λ (N) against dim O(2N)_{λ'} (-N). The two agree up to the
/// sign (-1)^{|λ|}: for λ = (1) they are 2N and -2N.
inline KingReport king_check(const Partition& lambda) {
  MultiPoly lhs = dim_poly(Family::C, lambda).poly;
  MultiPoly rhs = dim_poly(Family::D, transpose(lambda)).poly.substitute({{kRank, -MultiPoly::symbol(kRank)}});
  MultiPoly signed_rhs = lambda.weight() % 2 == 0 ? rhs : -rhs;
  return {lambda, lhs, rhs, lhs == signed_rhs, lhs == rhs};
}

using VogelTriple = std::array<RatFunc, 3>;

inline std::string triple_str(const VogelTriple& t) {
  return "(" + t[0].str() + ", " + t[1].str() + ", " + t[2].str() + ")";
}

/// (α-2t)(β-2t)(γ-2t) / (αβγ) with t = α+β+γ.
inline RatFunc vogel_dim(const VogelTriple& v) {
  RatFunc den = v[0] * v[1] * v[2];
  if (den.is_zero()) throw std::domain_error("vogel_dim: zero parameter in " + triple_str(v));
  RatFunc t2 = RatFunc(2) * (v[0] + v[1] + v[2]);
  return (v[0] - t2) * (v[1] - t2) * (v[2] - t2) / den;
}

enum class VogelFamily { Sp2n, Sln, Son };

inline VogelFamily parse_vogel_family(const std::string& s) {
  if (s == "sp2n") return VogelFamily::Sp2n;
  if (s == "sln") return VogelFamily::Sln;
  if (s == "son") return VogelFamily::Son;
  throw std::invalid_argument("unknown Vogel family '" + s + "' (expected sp2n|sln|son)");
}

inline std::string vogel_family_name(VogelFamily f) {
  switch (f) {
    case VogelFamily::Sp2n: return "sp2n";
    case VogelFamily::Sln: return "sln";
    case VogelFamily::Son: return "son";
  }
  return "?";
}

inline VogelTriple vogel_classical(VogelFamily f) {
  const RatFunc n = sym(kVogelN);
  switch (f) {
    case VogelFamily::Sp2n: return {RatFunc(-2), RatFunc(1), n + RatFunc(2)};
    case VogelFamily::Sln: return {RatFunc(-2), RatFunc(2), n};
    case VogelFamily::Son: return {RatFunc(-2), RatFunc(4), n - RatFunc(4)};
  }
  throw std::logic_error("vogel_classical");
}

/// The expected dimension of each classical family in n.
inline RatFunc classical_dimension(VogelFamily f) {
  const RatFunc n = sym(kVogelN);
  switch (f) {
    case VogelFamily::Sp2n: return n * (RatFunc(2) * n + RatFunc(1));
    case VogelFamily::Sln: return n * n - RatFunc(1);
    case VogelFamily::Son: return n * (n - RatFunc(1)) / RatFunc(2);
  }
  throw std::logic_error("classical_dimension");
}

namespace detail {

inline std::optional<VogelTriple> normalized(const VogelTriple& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return VogelTriple{v[0] / x, v[1] / x, v[2] / x};
  return std::nullopt;
}

}  // namespace detail

/// True iff some permutation of a is a common nonzero multiple of b.
inline bool vogel_equiv(const VogelTriple& a, const VogelTriple& b) {
  auto nb = detail::normalized(b);
  if (!nb) return !detail::normalized(a);
  std::array<int, 3> perm{0, 1, 2};
  do {
    auto na = detail::normalized({a[perm[0]], a[perm[1]], a[perm[2]]});
    if (na && (*na)[0] == (*nb)[0] && (*na)[1] == (*nb)[1] && (*na)[2] == (*nb)[2]) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline VogelTriple scale(const VogelTriple& v, const RatFunc& c) { return {v[0] * c, v[1] * c, v[2] * c}; }
inline VogelTriple swap01(const VogelTriple& v) { return {v[1], v[0], v[2]}; }
inline VogelTriple substitute(const VogelTriple& v, const std::string& s, const RatFunc& value) {
  return {v[0].substitute(s, value), v[1].substitute(s, value), v[2].substitute(s, value)};
}

struct VogelSpSoReport {
  VogelTriple scaled_sp;  // (-2) * swap01(sp2n)
  VogelTriple so_minus;   // son at n -> -2n
  bool holds = false;
};

/// sp_{2n}'s triple times -2 with the first two entries swapped is so_{-2n}'s.
inline VogelSpSoReport vogel_sp_so() {
  VogelTriple a = scale(swap01(vogel_classical(VogelFamily::Sp2n)), RatFunc(-2));
  VogelTriple b = substitute(vogel_classical(VogelFamily::Son), kVogelN, RatFunc(-2) * sym(kVogelN));
  return {a, b, vogel_equiv(a, b)};
}

}  // namespace negdim::dims
