#pragma once

// Internal helpers for Abel-damped oscillatory integrals.

#include <cstddef>
#include <span>
#include <vector>

namespace halfplane::detail {

/// Composite Gauss-Legendre rule on [0, length] with panels of width `panel`.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws non_convergent when the panel count exceeds `budget`.
CompositeRule composite_gauss(double length, double panel, std::size_t budget);

struct Extrapolated {
  double value = 0.0;
  double error = 0.0;  // |difference between the two highest-order extrapolants|
};

/// Neville extrapolation of (eps_i, value_i) to eps = 0 with a polynomial of
/// degree `order` through the `order + 1` smallest eps values.
Extrapolated extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                                 int order);

/// sum_i w_i h_i exp(-eps l_i) for each eps.
std::vector<double> damped_sums(const CompositeRule& rule, std::span<const double> h,
                                std::span<const double> eps);

}  // namespace halfplane::detail
