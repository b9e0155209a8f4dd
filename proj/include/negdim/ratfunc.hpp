#pragma once

// Rational functions num/den in named symbols over the rationals.
//
// Canonical form: gcd(num, den) = 1, den primitive (coprime integer
// coefficients) with positive leading coefficient in grlex order.

#include "negdim/multipoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace negdim {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}          // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}           // NOLINT(google-explicit-constructor)
  RatFunc(const MultiPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc symbol(const std::string& name) { return RatFunc(MultiPoly::symbol(name)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  std::vector<std::string> symbols() const { return MultiPoly::merged(num_.symbols(), den_.symbols()); }
  bool has_symbol(const std::string& s) const { return num_.has_symbol(s) || den_.has_symbol(s); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, 1); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, -1); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial())
      return raw(a.num_ * b.num_ * (a.den_.constant_value() * b.den_.constant_value()).inverse(),
                 MultiPoly(1));
    // Cross-cancel before multiplying to keep the final gcd small.
    MultiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    MultiPoly n = MultiPoly::divide_exact(a.num_, g1) * MultiPoly::divide_exact(b.num_, g2);
    MultiPoly d = MultiPoly::divide_exact(a.den_, g2) * MultiPoly::divide_exact(b.den_, g1);
    RatFunc r = raw(std::move(n), std::move(d));
    r.fix_den_sign();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
    RatFunc r = raw(den_, num_);
    r.fix_den_sign();
    return r;
  }

  RatFunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(e), den_.pow(e));
  }

  /// Exact equality by cross-multiplication.
  friend bool equal(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return equal(a, b); }

  /// Simultaneous substitution of symbols by rational functions.
  RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const {
    return RatFunc(sub_poly(num_, bindings)) / sub_poly(den_, bindings);
  }

  RatFunc substitute(const std::string& s, const RatFunc& value) const { return substitute({{s, value}}); }

  Rational evaluate(const std::map<std::string, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("RatFunc::evaluate: denominator vanishes");
    return num_.evaluate(point) / d;
  }

  RatFunc rename(const std::map<std::string, std::string>& names) const {
    return RatFunc(num_.rename(names), den_.rename(names));
  }

  /// "num" when the denominator is 1, "(num)/(den)" otherwise.
  std::string str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  /// Re-establishes the canonical form (idempotent).
  RatFunc normalized() const {
    RatFunc r = *this;
    r.normalize();
    return r;
  }

 private:
  static RatFunc raw(MultiPoly n, MultiPoly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sign > 0 ? b : -b;
    MultiPoly bn = sign > 0 ? b.num_ : -b.num_;
    if (a.den_ == b.den_) {
      if (a.is_polynomial()) return raw(a.num_ + bn, a.den_);
      return RatFunc(a.num_ + bn, a.den_);
    }
    if (a.is_polynomial() && b.is_polynomial())
      return raw(a.num_ * a.den_.constant_value().inverse() + bn * b.den_.constant_value().inverse(),
                 MultiPoly(1));
    if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ * a.den_.constant_value().inverse() + bn, b.den_);
    if (b.is_polynomial()) return RatFunc(a.num_ + bn * a.den_ * b.den_.constant_value().inverse(), a.den_);
    return RatFunc(a.num_ * b.den_ + bn * a.den_, a.den_ * b.den_);
  }

  void fix_den_sign() {
    Rational c = den_.rational_content();
    if (den_.leading_coefficient().sign() < 0) c = -c;
    if (!c.is_one()) {
      Rational inv = c.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    if (!den_.is_constant()) {
      MultiPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = MultiPoly::divide_exact(num_, g);
        den_ = MultiPoly::divide_exact(den_, g);
      }
    }
    fix_den_sign();
  }

  // Substitutes into a polynomial, clearing denominators per symbol so that
  // only polynomial arithmetic and one final normalization are needed.
  static RatFunc sub_poly(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings) {
    std::map<std::string, MultiPoly> numer;
    MultiPoly common(1);
    for (const auto& s : p.symbols()) {
      auto it = bindings.find(s);
      if (it == bindings.end()) continue;
      int d = p.degree_in(s);
      const RatFunc& b = it->second;
      if (b.is_polynomial()) {
        numer[s] = b.num_ * b.den_.constant_value().inverse();
        continue;
      }
      common *= b.den_.pow(d);
    }
    if (common.is_constant()) return RatFunc(p.substitute(numer));
    // Homogenize: c * prod (P_s/Q_s)^e_s = c * prod P_s^e_s Q_s^(d_s-e_s) / prod Q_s^d_s.
    MultiPoly acc;
    std::map<std::string, int> maxdeg;
    for (const auto& s : p.symbols()) maxdeg[s] = p.degree_in(s);
    const auto& syms = p.symbols();
    for (const auto& [e, c] : p.terms()) {
      MultiPoly t(c);
      for (std::size_t j = 0; j < syms.size(); ++j) {
        auto it = bindings.find(syms[j]);
        if (it == bindings.end()) {
          t *= MultiPoly::symbol(syms[j], e[j]);
        } else if (it->second.is_polynomial()) {
          t *= numer[syms[j]].pow(e[j]);
        } else {
          t *= it->second.num_.pow(e[j]) * it->second.den_.pow(maxdeg[syms[j]] - e[j]);
        }
      }
      acc += t;
    }
    return RatFunc(acc, common);
  }

  MultiPoly num_;
  MultiPoly den_;
};

inline RatFunc sym(const std::string& name) { return RatFunc::symbol(name); }

}  // namespace negdim
