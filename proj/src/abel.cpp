#include "abel.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "halfplane/error.hpp"

namespace halfplane::detail {

CompositeRule composite_gauss(double length, double panel, std::size_t budget) {
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  const auto panels = static_cast<std::size_t>(std::ceil(length / panel));
  if (panels == 0 || panels > budget) {
    throw Error(Errc::non_convergent, "Abel quadrature: panel budget exceeded");
  }
  const double width = length / static_cast<double>(panels);
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();

  CompositeRule rule;
  rule.nodes.reserve(panels * 20);
  rule.weights.reserve(panels * 20);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(mid - half * x[i]);
      rule.weights.push_back(half * w[i]);
      rule.nodes.push_back(mid + half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
  }
  return rule;
}

Extrapolated extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                                 int order) {
  const auto n = eps.size();
  if (n == 0 || values.size() != n) {
    throw Error(Errc::invalid_argument, "extrapolate_to_zero: size mismatch");
  }
  if (order < 0 || static_cast<std::size_t>(order) >= n) order = static_cast<int>(n) - 1;
  // smallest eps last in a decreasing schedule
  const std::size_t first = n - static_cast<std::size_t>(order) - 1;
  std::vector<double> t(values.begin() + first, values.end());
  std::vector<double> e(eps.begin() + first, eps.end());

  // Neville: after pass j, t[i] holds the degree-j interpolant through
  // points i..i+j evaluated at 0.
  double previous = t.back();
  for (std::size_t j = 1; j < t.size(); ++j) {
    if (j + 1 == t.size()) previous = t[1];
    for (std::size_t i = 0; i + j < t.size(); ++i) {
      t[i] = (e[i + j] * t[i] - e[i] * t[i + 1]) / (e[i + j] - e[i]);
    }
  }
  return {t[0], std::abs(t[0] - previous)};
}

std::vector<double> damped_sums(const CompositeRule& rule, std::span<const double> h,
                                std::span<const double> eps) {
  std::vector<double> sums(eps.size(), 0.0);
  for (std::size_t k = 0; k < eps.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      s += rule.weights[i] * h[i] * std::exp(-eps[k] * rule.nodes[i]);
    }
    sums[k] = s;
  }
  return sums;
}

}  // namespace halfplane::detail
