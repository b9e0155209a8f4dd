#pragma once

// Sparse multivariate polynomials over the rationals in named symbols.
//
// Representation: a sorted symbol list plus a map from exponent vectors to
// nonzero coefficients. Terms are ordered graded-lexicographically, leading
// (largest) term first. Symbols that do not occur in any term are pruned, so
// two equal polynomials always compare structurally equal.

#include "negdim/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace negdim {

using Exponents = std::vector<int>;

/// Graded-lex "greater": higher total degree first, then lexicographically
/// larger exponent vector (symbol order = alphabetical).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MultiPoly symbol(const std::string& name, int power = 1) {
    if (power < 0) throw std::invalid_argument("MultiPoly::symbol: negative power");
    if (power == 0) return MultiPoly(1);
    MultiPoly p;
    p.syms_ = {name};
    p.terms_.emplace(Exponents{power}, Rational(1));
    return p;
  }

  /// Builds from raw data; zero coefficients are dropped and symbols sorted.
  static MultiPoly from_terms(std::vector<std::string> syms,
                              const std::vector<std::pair<Exponents, Rational>>& terms) {
    std::vector<std::size_t> order(syms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return syms[a] < syms[b]; });
    MultiPoly p;
    for (auto i : order) p.syms_.push_back(syms[i]);
    for (std::size_t i = 1; i < p.syms_.size(); ++i)
      if (p.syms_[i] == p.syms_[i - 1]) throw std::invalid_argument("MultiPoly: duplicate symbol");
    for (const auto& [e, c] : terms) {
      if (e.size() != syms.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
      Exponents ne(e.size());
      for (std::size_t j = 0; j < order.size(); ++j) ne[j] = e[order[j]];
      p.add_term(ne, c);
    }
    p.prune();
    return p;
  }

  const std::vector<std::string>& symbols() const { return syms_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return syms_.empty(); }
  bool has_symbol(const std::string& s) const {
    return std::binary_search(syms_.begin(), syms_.end(), s);
  }

  /// Value of a constant polynomial.
  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  /// Coefficient of the monomial with all exponents zero.
  Rational constant_term() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Exponents(syms_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading coefficient of zero");
    return terms_.begin()->second;
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
  }

  int degree_in(const std::string& s) const {
    int idx = index_of(s);
    if (terms_.empty()) return -1;
    if (idx < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
  }

  /// Coefficients of powers of `s`, as polynomials in the other symbols.
  std::vector<MultiPoly> split_by(const std::string& s) const {
    int idx = index_of(s);
    if (idx < 0) return {*this};
    std::vector<std::string> rest;
    for (const auto& n : syms_)
      if (n != s) rest.push_back(n);
    std::vector<MultiPoly> out(degree_in(s) + 1);
    for (auto& o : out) o.syms_ = rest;
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      ne.reserve(e.size() - 1);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (static_cast<int>(j) != idx) ne.push_back(e[j]);
      out[e[idx]].terms_.emplace(std::move(ne), c);
    }
    for (auto& o : out) o.prune();
    return out;
  }

  MultiPoly coeff_in(const std::string& s, int power) const {
    auto parts = split_by(s);
    return power < static_cast<int>(parts.size()) ? parts[power] : MultiPoly();
  }

  /// Inverse of split_by.
  static MultiPoly from_coeffs(const std::string& s, const std::vector<MultiPoly>& coeffs) {
    MultiPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) r += coeffs[i] * symbol(s, static_cast<int>(i));
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return combine(o, Rational(1)); }
  MultiPoly& operator-=(const MultiPoly& o) { return combine(o, Rational(-1)); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c) {
    if (c.is_zero()) return *this = MultiPoly();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    auto syms = merged(a.syms_, b.syms_);
    auto ma = a.remap(syms), mb = b.remap(syms);
    MultiPoly r;
    r.syms_ = std::move(syms);
    Exponents e(r.syms_.size());
    for (const auto& [ea, ca] : ma) {
      for (const auto& [eb, cb] : mb) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
        r.add_term(e, ca * cb);
      }
    }
    r.prune();
    return r;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.syms_ == b.syms_ && a.terms_ == b.terms_;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    if (a.is_zero()) return MultiPoly();
    if (b.is_constant()) return a * b.constant_value().inverse();
    auto syms = merged(a.syms_, b.syms_);
    MultiPoly r = a.with_symbols(syms), d = b.with_symbols(syms), q;
    q.syms_ = syms;
    const auto& [lead_e, lead_c] = *d.terms_.begin();
    Exponents t(syms.size());
    while (!r.is_zero()) {
      const auto& [re, rc] = *r.terms_.begin();
      for (std::size_t j = 0; j < t.size(); ++j) {
        t[j] = re[j] - lead_e[j];
        if (t[j] < 0) return std::nullopt;
      }
      Rational c = rc / lead_c;
      q.add_term(t, c);
      for (const auto& [de, dc] : d.terms_) {
        Exponents e(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) e[j] = t[j] + de[j];
        r.add_term(e, -(c * dc));
      }
    }
    q.prune();
    return q;
  }

  static MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide(a, b);
    if (!q) throw std::domain_error("MultiPoly: inexact division");
    return *q;
  }

  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational rational_content() const {
    if (terms_.empty()) return 1;
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
      g = gcd(g, c.num());
      l = lcm(l, c.den());
    }
    return Rational(g, l).abs();
  }

  /// p scaled to coprime integer coefficients with positive leading coefficient.
  MultiPoly primitive() const {
    if (terms_.empty()) return {};
    Rational c = rational_content();
    if (leading_coefficient().sign() < 0) c = -c;
    return *this * c.inverse();
  }

  /// Replaces symbols by polynomials, simultaneously.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
    std::vector<std::vector<MultiPoly>> powers(syms_.size());
    std::vector<int> maxdeg(syms_.size(), 0);
    for (const auto& [e, c] : terms_)
      for (std::size_t j = 0; j < e.size(); ++j) maxdeg[j] = std::max(maxdeg[j], e[j]);
    for (std::size_t j = 0; j < syms_.size(); ++j) {
      auto it = bindings.find(syms_[j]);
      MultiPoly base = it == bindings.end() ? symbol(syms_[j]) : it->second;
      powers[j].push_back(MultiPoly(1));
      for (int d = 1; d <= maxdeg[j]; ++d) powers[j].push_back(powers[j].back() * base);
    }
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      MultiPoly t(c);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j]) t *= powers[j][e[j]];
      r += t;
    }
    return r;
  }

  /// Full evaluation; every symbol must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals;
    for (const auto& s : syms_) {
      auto it = point.find(s);
      if (it == point.end()) throw std::invalid_argument("MultiPoly::evaluate: unbound symbol " + s);
      vals.push_back(it->second);
    }
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j]) t *= vals[j].pow(e[j]);
      r += t;
    }
    return r;
  }

  /// Multiplies every term by (exponent of s); this is s * d/ds.
  MultiPoly euler(const std::string& s) const {
    int idx = index_of(s);
    if (idx < 0) return {};
    MultiPoly r;
    r.syms_ = syms_;
    for (const auto& [e, c] : terms_)
      if (e[idx]) r.terms_.emplace(e, c * Rational(e[idx]));
    r.prune();
    return r;
  }

  /// Renames symbols (a permutation or injective relabeling).
  MultiPoly rename(const std::map<std::string, std::string>& names) const {
    std::vector<std::string> ns;
    for (const auto& s : syms_) {
      auto it = names.find(s);
      ns.push_back(it == names.end() ? s : it->second);
    }
    std::vector<std::pair<Exponents, Rational>> t(terms_.begin(), terms_.end());
    return from_terms(ns, t);
  }

  /// Canonical text: leading term first, `*` between factors, `^` for powers.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = c.sign() < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      Rational a = c.abs();
      bool mono = false;
      for (int x : e) mono = mono || x > 0;
      if (!mono) {
        os << a.str();
        continue;
      }
      bool need_star = false;
      if (!a.is_one()) {
        os << a.str();
        need_star = true;
      }
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!e[j]) continue;
        if (need_star) os << "*";
        os << syms_[j];
        if (e[j] > 1) os << "^" << e[j];
        need_star = true;
      }
    }
    return os.str();
  }

  static std::vector<std::string> merged(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  int index_of(const std::string& s) const {
    auto it = std::lower_bound(syms_.begin(), syms_.end(), s);
    return (it != syms_.end() && *it == s) ? static_cast<int>(it - syms_.begin()) : -1;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap remap(const std::vector<std::string>& target) const {
    if (target == syms_) return terms_;
    std::vector<std::size_t> pos(syms_.size());
    for (std::size_t j = 0; j < syms_.size(); ++j)
      pos[j] = std::lower_bound(target.begin(), target.end(), syms_[j]) - target.begin();
    TermMap out;
    for (const auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t j = 0; j < e.size(); ++j) ne[pos[j]] = e[j];
      out.emplace(std::move(ne), c);
    }
    return out;
  }

  MultiPoly with_symbols(const std::vector<std::string>& target) const {
    MultiPoly p;
    p.syms_ = target;
    p.terms_ = remap(target);
    return p;
  }

  MultiPoly& combine(const MultiPoly& o, const Rational& sign) {
    if (o.is_zero()) return *this;
    if (o.syms_ != syms_) {
      auto syms = merged(syms_, o.syms_);
      if (syms != syms_) {
        terms_ = remap(syms);
        syms_ = syms;
      }
      for (const auto& [e, c] : o.remap(syms_)) add_term(e, sign * c);
    } else {
      for (const auto& [e, c] : o.terms_) add_term(e, sign * c);
    }
    prune();
    return *this;
  }

  // Drops symbols that no longer occur. Removing an all-zero column keeps the
  // grlex order of the remaining vectors intact.
  void prune() {
    if (terms_.empty()) {
      syms_.clear();
      return;
    }
    std::vector<bool> used(syms_.size(), false);
    for (const auto& [e, c] : terms_)
      for (std::size_t j = 0; j < e.size(); ++j) used[j] = used[j] || e[j] != 0;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> ns;
    for (std::size_t j = 0; j < syms_.size(); ++j)
      if (used[j]) ns.push_back(syms_[j]);
    TermMap nt;
    for (auto& [e, c] : terms_) {
      Exponents ne;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (used[j]) ne.push_back(e[j]);
      nt.emplace_hint(nt.end(), std::move(ne), c);
    }
    syms_ = std::move(ns);
    terms_ = std::move(nt);
  }

  std::vector<std::string> syms_;
  TermMap terms_;
};

namespace detail {

inline MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in v.
inline MultiPoly content_in(const MultiPoly& p, const std::string& v) {
  MultiPoly g;
  for (const auto& c : p.split_by(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd_impl(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& p, const std::string& v) {
  return MultiPoly::divide_exact(p, content_in(p, v)).primitive();
}

// Sparse pseudo-remainder of a by b with respect to v.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, const std::string& v) {
  int db = b.degree_in(v);
  MultiPoly lb = b.coeff_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    MultiPoly la = a.coeff_in(v, da);
    a = lb * a - la * MultiPoly::symbol(v, da - db) * b;
  }
  return a;
}

inline MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  auto all = MultiPoly::merged(a.symbols(), b.symbols());
  const std::string& v = all.front();
  if (!a.has_symbol(v)) return gcd_impl(a, content_in(b, v));
  if (!b.has_symbol(v)) return gcd_impl(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly g = gcd_impl(ca, cb);
  MultiPoly pa = MultiPoly::divide_exact(a, ca).primitive();
  MultiPoly pb = MultiPoly::divide_exact(b, cb).primitive();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = MultiPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  if (!pb.is_constant()) pb = primitive_part_in(pb, v);
  return (g * pb).primitive();
}

}  // namespace detail

/// Greatest common divisor, normalized to coprime integer coefficients with a
/// positive leading coefficient (gcd(0, 0) = 0).
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return detail::gcd_impl(a, b); }

}  // namespace negdim
