#pragma once

#include "negdim/ratfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace negdim {

/// Truncated Taylor expansion in one variable; coefficients live in the
/// field of rational functions of the remaining symbols.
struct FormalSeries {
  std::string variable;
  std::vector<RatFunc> coefficients;  // indices 0..order

  int order() const { return static_cast<int>(coefficients.size()) - 1; }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;
};

inline FormalSeries series_expand(const RatFunc& f, const std::string& variable, int order) {
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  auto num = f.num().split_by(variable);
  auto den = f.den().split_by(variable);
  if (den.empty() || den[0].is_zero())
    throw std::domain_error("series_expand: pole at " + variable + " = 0");
  RatFunc d0inv = RatFunc(den[0]).inverse();
  FormalSeries s{variable, {}};
  s.coefficients.reserve(order + 1);
  for (int j = 0; j <= order; ++j) {
    RatFunc c = j < static_cast<int>(num.size()) ? RatFunc(num[j]) : RatFunc();
    for (int i = 1; i <= j && i < static_cast<int>(den.size()); ++i)
      if (!den[i].is_zero()) c -= RatFunc(den[i]) * s.coefficients[j - i];
    s.coefficients.push_back(c * d0inv);
  }
  return s;
}

/// Cauchy product truncated to the shorter order.
inline FormalSeries cauchy_product(const FormalSeries& a, const FormalSeries& b) {
  if (a.variable != b.variable) throw std::invalid_argument("cauchy_product: variable mismatch");
  int order = std::min(a.order(), b.order());
  FormalSeries r{a.variable, {}};
  for (int j = 0; j <= order; ++j) {
    RatFunc c;
    for (int i = 0; i <= j; ++i) c += a.coefficients[i] * b.coefficients[j - i];
    r.coefficients.push_back(c);
  }
  return r;
}

}  // namespace negdim
