#pragma once

// The Calogero-Moser-Sutherland operator on symmetric functions,
//
//   L_{k,p0} = Σ_{a,b} p_{a+b} ∂_a ∂_b - k Σ_{a,b} p_a p_b ∂_{a+b}
//              - k p0 Σ_a p_a ∂_a + (1+k) Σ_a a p_a ∂_a,     ∂_a = a ∂/∂p_a,
//
// its finite-N counterpart in exponential coordinates, Jack functions as its
// monic triangular eigenfunctions, and the θ-duality between P(λ, k) and
// P(λ', 1/k).
//
// θ maps p_a -> k^{-1} p_a and is linear over ℚ(k); the parameter of the
// target algebra becomes 1/k, so θ applied with parameter 1/k undoes it.

#include "negdim/linalg.hpp"
#include "negdim/partitions.hpp"
#include "negdim/ratfunc.hpp"
#include "negdim/symfunc.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negdim::jack {

using symfunc::MExpr;
using symfunc::NPoly;
using symfunc::PExpr;

inline const std::string kK = "k";
inline const std::string kP0 = "p0";

/// Integer structure of the operator on p_μ: the two "cut" and "join" parts
/// and the diagonal Σ a^2 c_a. Everything else is scalar on a degree.
struct OperatorParts {
  std::map<Partition, long, std::greater<>> join;  // Σ p_{a+b} ∂_a ∂_b
  std::map<Partition, long, std::greater<>> cut;   // Σ p_a p_b ∂_{a+b}
  long weighted_degree = 0;                        // Σ_a a p_a ∂_a eigenvalue
};

namespace detail {

inline std::vector<int> counts_of(const Partition& mu) {
  std::vector<int> c(mu.weight() + 1, 0);
  for (int p : mu.parts()) ++c[p];
  return c;
}

inline Partition from_counts(const std::vector<int>& c) {
  std::vector<int> parts;
  for (int a = static_cast<int>(c.size()) - 1; a >= 1; --a)
    for (int r = 0; r < c[a]; ++r) parts.push_back(a);
  return Partition(parts);
}

}  // namespace detail

inline OperatorParts operator_parts(const Partition& mu) {
  OperatorParts out;
  const int d = mu.weight();
  auto c = detail::counts_of(mu);
  c.resize(2 * d + 2, 0);
  for (int a = 1; a <= d; ++a) out.weighted_degree += static_cast<long>(a) * a * c[a];

  for (int a = 1; a <= d; ++a) {
    if (!c[a]) continue;
    for (int b = 1; b <= d; ++b) {
      long coef = a == b ? static_cast<long>(a) * a * c[a] * (c[a] - 1) : static_cast<long>(a) * b * c[a] * c[b];
      if (coef == 0) continue;
      auto nc = c;
      --nc[a];
      --nc[b];
      ++nc[a + b];
      out.join[detail::from_counts(nc)] += coef;
    }
  }
  for (int s = 2; s <= d; ++s) {
    if (!c[s]) continue;
    for (int a = 1; a < s; ++a) {
      auto nc = c;
      --nc[s];
      ++nc[a];
      ++nc[s - a];
      out.cut[detail::from_counts(nc)] += static_cast<long>(s) * c[s];
    }
  }
  return out;
}

/// L_{k,p0} applied to a homogeneous element.
inline PExpr apply_L_inf(const PExpr& x, const RatFunc& k, const RatFunc& p0) {
  PExpr out(x.degree());
  const RatFunc d(x.degree());
  for (const auto& [mu, coef] : x.terms()) {
    auto parts = operator_parts(mu);
    for (const auto& [nu, v] : parts.join) out.add(nu, coef * RatFunc(v));
    for (const auto& [nu, v] : parts.cut) out.add(nu, -(coef * k * RatFunc(v)));
    RatFunc diag = (RatFunc(1) + k) * RatFunc(parts.weighted_degree) - k * p0 * d;
    out.add(mu, coef * diag);
  }
  return out;
}

/// Matrix of L_{k,p0} on the p-basis of degree d (columns: images of p_μ),
/// indices ordered as partitions_of(d).
inline Matrix<RatFunc> operator_matrix(int d, const RatFunc& k, const RatFunc& p0) {
  if (d < 1) throw std::invalid_argument("operator_matrix: degree must be >= 1");
  auto index = partitions_of(d);
  auto m = zero_matrix<RatFunc>(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) {
    PExpr img = apply_L_inf(PExpr::basis(index[j]), k, p0);
    for (std::size_t i = 0; i < index.size(); ++i) m[i][j] = img.coefficient(index[i]);
  }
  return m;
}

/// The same operator in the monomial basis.
inline Matrix<RatFunc> operator_matrix_m(int d, const RatFunc& k, const RatFunc& p0) {
  symfunc::BasisChange bc(d);
  return matmul(matmul(bc.p_to_m, operator_matrix(d, k, p0)), bc.m_to_p);
}

/// True when the m-basis matrix only maps m_ν into span{m_μ : μ ≤ ν}.
inline bool is_dominance_triangular(int d, const Matrix<RatFunc>& mm) {
  auto index = partitions_of(d);
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      if (!mm[i][j].is_zero() && !dominance_leq(index[i], index[j])) return false;
  return true;
}

/// θ: p_μ -> k^{-ℓ(μ)} p_μ. theta(theta(x, k), 1/k) == x.
inline PExpr theta(const PExpr& x, const RatFunc& k) {
  if (k.is_zero()) throw std::domain_error("theta: k = 0");
  RatFunc kinv = k.inverse();
  return x.map_coefficients([&](const Partition& mu, const RatFunc& c) { return c * kinv.pow(mu.length()); });
}

struct JackFunction {
  Partition lambda;
  RatFunc k;
  MExpr m_expansion;
  PExpr p_expansion;
  RatFunc eigenvalue;  // depends on p0 only through -k |λ| p0
};

class SingularJack : public std::domain_error {
 public:
  SingularJack(const Partition& lambda, const Partition& mu, const RatFunc& k)
      : std::domain_error("jack: eigenvalues of " + lambda.str() + " and " + mu.str() + " collide at k = " +
                          k.str()),
        colliding(mu) {}
  Partition colliding;
};

/// Degree-d data shared by all Jack functions of that degree and parameter.
class JackSystem {
 public:
  JackSystem(int d, RatFunc k)
      : d_(d), k_(std::move(k)), bc_(d), mm_(matmul(matmul(bc_.p_to_m, operator_matrix(d, k_, sym(kP0))), bc_.m_to_p)) {}

  int degree() const { return d_; }
  const RatFunc& k() const { return k_; }
  const Matrix<RatFunc>& m_matrix() const { return mm_; }
  const symfunc::BasisChange& basis() const { return bc_; }

  /// Monic P = m_λ + Σ_{μ<λ} u_μ m_μ with L P = e P. Solved from the top of
  /// the dominance order down; the result is checked against the full matrix.
  JackFunction jack(const Partition& lambda) const {
    const auto& index = bc_.index;
    std::size_t top = bc_.position(lambda);
    std::vector<RatFunc> u(index.size(), RatFunc(0));
    u[top] = RatFunc(1);
    const RatFunc e = mm_[top][top];
    // index is in decreasing lex order, a linear extension of dominance, so
    // every ν > μ is visited before μ.
    for (std::size_t i = top + 1; i < index.size(); ++i) {
      if (!dominance_leq(index[i], lambda)) continue;
      RatFunc rhs;
      for (std::size_t j = top; j < i; ++j)
        if (!u[j].is_zero() && !mm_[i][j].is_zero()) rhs += mm_[i][j] * u[j];
      RatFunc gap = e - mm_[i][i];
      if (gap.is_zero()) throw SingularJack(lambda, index[i], k_);
      u[i] = rhs / gap;
    }
    MExpr m(d_);
    for (std::size_t i = 0; i < index.size(); ++i) m.add(index[i], u[i]);
    for (std::size_t i = 0; i < index.size(); ++i) {
      RatFunc row;
      for (std::size_t j = 0; j < index.size(); ++j)
        if (!u[j].is_zero() && !mm_[i][j].is_zero()) row += mm_[i][j] * u[j];
      if (!equal(row, e * u[i])) throw std::logic_error("jack: eigen-equation fails for " + lambda.str());
    }
    PExpr p = bc_.convert<PExpr>(m, bc_.m_to_p);
    return {lambda, k_, m, p, e};
  }

 private:
  int d_;
  RatFunc k_;
  symfunc::BasisChange bc_;
  Matrix<RatFunc> mm_;
};

inline JackFunction jack(const Partition& lambda, const RatFunc& k) {
  if (lambda.empty()) {
    MExpr m(0);
    m.add(lambda, RatFunc(1));
    PExpr p(0);
    p.add(lambda, RatFunc(1));
    return {lambda, k, m, p, RatFunc(0)};
  }
  return JackSystem(lambda.weight(), k).jack(lambda);
}

/// The scalar c with θ(P(λ, k)) = c P(λ', 1/k); throws if none exists.
inline RatFunc macdonald_duality(const Partition& lambda, const RatFunc& k) {
  PExpr lhs = theta(jack(lambda, k).p_expansion, k);
  PExpr target = jack(transpose(lambda), k.inverse()).p_expansion;
  if (target.is_zero()) throw std::logic_error("macdonald_duality: empty target");
  const auto& [mu0, t0] = *target.terms().begin();
  RatFunc c = lhs.coefficient(mu0) / t0;
  if (!(lhs == c * target))
    throw std::logic_error("macdonald_duality: θ(P(" + lambda.str() + ")) is not proportional to P(" +
                           transpose(lambda).str() + ", 1/k)");
  return c;
}

struct ConjugationReport {
  int degree = 0;
  bool holds = false;          // θ L_{k,p0} θ^{-1} = k L_{1/k, k p0}
  bool printed_holds = false;  // ... = k L_{1/k, p0/k}
  std::string lhs_d1, rhs_d1, printed_rhs_d1;
};

/// Verifies the θ-conjugation symmetry of L on the degree-d component with k
/// and p0 symbolic. The p0 argument on the right is k p0; the variant with
/// p0/k is evaluated as well and reported separately.
inline ConjugationReport check_conjugation(int d) {
  const RatFunc k = sym(kK), p0 = sym(kP0);
  auto index = partitions_of(d);
  auto m = operator_matrix(d, k, p0);
  auto rhs = operator_matrix(d, k.inverse(), k * p0);
  auto printed = operator_matrix(d, k.inverse(), p0 / k);
  ConjugationReport rep{d, true, true, {}, {}, {}};
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) {
      // (θ M θ^{-1})_{ij} = k^{-ℓ(i)} M_{ij} k^{ℓ(j)}
      RatFunc conj = m[i][j] * k.pow(index[j].length() - index[i].length());
      if (!equal(conj, k * rhs[i][j])) rep.holds = false;
      if (!equal(conj, k * printed[i][j])) rep.printed_holds = false;
    }
  auto m1 = operator_matrix(1, k, p0);
  rep.lhs_d1 = m1[0][0].str();
  rep.rhs_d1 = (k * operator_matrix(1, k.inverse(), k * p0)[0][0]).str();
  rep.printed_rhs_d1 = (k * operator_matrix(1, k.inverse(), p0 / k)[0][0]).str();
  return rep;
}

/// L^{(N)}_k = Σ (z_i ∂_i)^2 - k Σ_{i<j} (z_i+z_j)/(z_i-z_j) (z_i ∂_i - z_j ∂_j)
/// on symmetric polynomials; the divided differences are exact divisions.
inline NPoly apply_L_N(const NPoly& f, const RatFunc& k, int n) {
  if (!k.is_polynomial()) throw std::invalid_argument("apply_L_N: k must be a polynomial");
  if (f.n != n) throw std::invalid_argument("apply_L_N: variable count mismatch");
  using symfunc::var;
  MultiPoly kp = k.num() * k.den().constant_value().inverse();
  std::vector<MultiPoly> euler(n + 1);
  MultiPoly diag;
  for (int i = 1; i <= n; ++i) {
    euler[i] = f.poly.euler(var(i));
    diag += euler[i].euler(var(i));
  }
  MultiPoly pair;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MultiPoly zi = MultiPoly::symbol(var(i)), zj = MultiPoly::symbol(var(j));
      auto q = MultiPoly::divide(euler[i] - euler[j], zi - zj);
      if (!q) throw std::invalid_argument("apply_L_N: input is not symmetric");
      pair += (zi + zj) * *q;
    }
  return {n, diag - kp * pair};
}

struct DiagramCheck {
  bool holds = false;
  NPoly lhs, rhs;
};

/// φ_N ∘ L_{k, p0=N} = L^{(N)}_k ∘ φ_N on p_μ.
inline DiagramCheck check_diagram(const Partition& mu, const RatFunc& k, int n) {
  PExpr x = PExpr::basis(mu);
  NPoly lhs = symfunc::phi_N(apply_L_inf(x, k, RatFunc(n)), n);
  NPoly rhs = apply_L_N(symfunc::phi_N(x, n), k, n);
  return {lhs == rhs, lhs, rhs};
}

}  // namespace negdim::jack
