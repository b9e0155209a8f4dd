#pragma once

// Homogeneous symmetric functions in the power-sum (p) and monomial (m)
// bases, their finite-N images, and the basis change between p and m.

#include "negdim/linalg.hpp"
#include "negdim/partitions.hpp"
#include "negdim/ratfunc.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace negdim::symfunc {

struct PowerSumBasis {
  static constexpr const char* prefix = "p";
};
struct MonomialBasis {
  static constexpr const char* prefix = "m";
};

/// A homogeneous element Σ c_μ b_μ of fixed degree, coefficients in ℚ(k, p0).
template <class Basis>
class Graded {
 public:
  using TermMap = std::map<Partition, RatFunc, std::greater<>>;

  explicit Graded(int degree = 0) : degree_(degree) {}

  static Graded basis(const Partition& mu) {
    Graded g(mu.weight());
    g.add(mu, RatFunc(1));
    return g;
  }

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RatFunc coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RatFunc(0) : it->second;
  }

  void add(const Partition& mu, const RatFunc& c) {
    if (mu.weight() != degree_)
      throw std::invalid_argument("Graded: index " + mu.str() + " has the wrong weight");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Graded& operator+=(const Graded& o) {
    check_degree(o);
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    check_degree(o);
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const RatFunc& c, const Graded& x) {
    Graded r(x.degree_);
    for (const auto& [mu, v] : x.terms_) r.add(mu, c * v);
    return r;
  }

  /// Applies f to every coefficient.
  template <class F>
  Graded map_coefficients(F&& f) const {
    Graded r(degree_);
    for (const auto& [mu, v] : terms_) r.add(mu, f(mu, v));
    return r;
  }

  friend bool operator==(const Graded& a, const Graded& b) {
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [mu, c] : a.terms_)
      if (!equal(c, b.coefficient(mu))) return false;
    return true;
  }

  /// e.g. "(k + 1)*p[2,1] - 3*p[1,1,1]"
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
      std::string basis = std::string(Basis::prefix) + "[" + mu.str() + "]";
      std::string coef;
      if (c.is_constant()) {
        Rational v = c.constant_value();
        if (!first) s += v.sign() < 0 ? " - " : " + ";
        else if (v.sign() < 0) s += "-";
        Rational a = v.abs();
        coef = a.is_one() ? "" : a.str() + "*";
      } else {
        if (!first) s += " + ";
        coef = "(" + c.str() + ")*";
      }
      s += coef + basis;
      first = false;
    }
    return s;
  }

 private:
  void check_degree(const Graded& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("Graded: degree mismatch");
  }

  int degree_;
  TermMap terms_;
};

using PExpr = Graded<PowerSumBasis>;
using MExpr = Graded<MonomialBasis>;

namespace detail {

// Number of ways to distribute the parts of mu over the entries of target so
// that every entry is hit exactly: the coefficient of z^target in p_mu.
inline long distribute(const std::vector<int>& mu, std::size_t next, std::vector<int>& remaining) {
  if (next == mu.size()) {
    for (int r : remaining)
      if (r != 0) return 0;
    return 1;
  }
  long total = 0;
  for (auto& r : remaining) {
    if (r < mu[next]) continue;
    r -= mu[next];
    total += distribute(mu, next + 1, remaining);
    r += mu[next];
  }
  return total;
}

}  // namespace detail

/// Columns μ: p_μ = Σ_λ A[λ][μ] m_λ, indices ordered as partitions_of(d).
inline Matrix<Rational> p_to_m_matrix(int d) {
  auto parts = partitions_of(d);
  auto a = zero_matrix<Rational>(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> rem = parts[i].parts();
      a[i][j] = Rational(detail::distribute(parts[j].parts(), 0, rem));
    }
  return a;
}

/// Basis change tables for one degree, computed once.
struct BasisChange {
  int degree;
  std::vector<Partition> index;  // partitions_of(degree)
  Matrix<Rational> p_to_m;
  Matrix<Rational> m_to_p;

  explicit BasisChange(int d)
      : degree(d), index(partitions_of(d)), p_to_m(p_to_m_matrix(d)), m_to_p(invert(p_to_m)) {}

  std::size_t position(const Partition& mu) const {
    for (std::size_t i = 0; i < index.size(); ++i)
      if (index[i] == mu) return i;
    throw std::invalid_argument("BasisChange: partition " + mu.str() + " not of degree " + std::to_string(degree));
  }

  template <class Out, class In>
  Out convert(const In& x, const Matrix<Rational>& t) const {
    if (x.degree() != degree) throw std::invalid_argument("BasisChange: degree mismatch");
    Out out(degree);
    for (const auto& [mu, c] : x.terms()) {
      std::size_t j = position(mu);
      for (std::size_t i = 0; i < index.size(); ++i)
        if (!t[i][j].is_zero()) out.add(index[i], RatFunc(t[i][j]) * c);
    }
    return out;
  }
};

inline MExpr p_to_m(const PExpr& x) {
  BasisChange bc(x.degree());
  return bc.convert<MExpr>(x, bc.p_to_m);
}

inline PExpr m_to_p(const MExpr& x) {
  BasisChange bc(x.degree());
  return bc.convert<PExpr>(x, bc.m_to_p);
}

/// A symmetric polynomial in z1..zN; other symbols (e.g. k) are coefficients.
struct NPoly {
  int n = 1;
  MultiPoly poly;

  friend bool operator==(const NPoly&, const NPoly&) = default;
};

inline std::string var(int i) { return "z" + std::to_string(i); }

inline MultiPoly power_sum(int l, int n) {
  MultiPoly s;
  for (int i = 1; i <= n; ++i) s += MultiPoly::symbol(var(i), l);
  return s;
}

/// φ_N: p_l -> z1^l + ... + zN^l. Coefficients must be polynomial.
inline NPoly phi_N(const PExpr& x, int n) {
  if (n < 1) throw std::invalid_argument("phi_N: N must be positive");
  std::vector<MultiPoly> sums(x.degree() + 1);
  for (int l = 1; l <= x.degree(); ++l) sums[l] = power_sum(l, n);
  MultiPoly acc;
  for (const auto& [mu, c] : x.terms()) {
    if (!c.is_polynomial()) throw std::invalid_argument("phi_N: coefficient " + c.str() + " is not polynomial");
    MultiPoly t = c.num() * c.den().constant_value().inverse();
    for (int part : mu.parts()) t *= sums[part];
    acc += t;
  }
  return {n, acc};
}

inline bool is_symmetric(const NPoly& f) {
  for (int i = 1; i < f.n; ++i)
    if (!(f.poly.rename({{var(i), var(i + 1)}, {var(i + 1), var(i)}}) == f.poly)) return false;
  return true;
}

}  // namespace negdim::symfunc
