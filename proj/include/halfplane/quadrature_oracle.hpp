#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "halfplane/params.hpp"

namespace halfplane {

// Independent numerical evaluation of the current-density closed forms.
//
// Conditionally convergent oscillatory l-integrals are regularized by an Abel
// factor exp(-eps l) and extrapolated to eps -> 0 with Neville's polynomial
// scheme. The damping values are given in units of the distance x from the
// boundary (eps = eps_schedule[i] * x), which keeps eps/x dimensionless.

struct RegularizationScheme {
  double lambda_cutoff = 1e4;  // v-integration runs over (1/Lambda, Lambda)
  double l_max = 0.0;          // 0: chosen so that exp(-eps_min l_max) = e^-45
  std::vector<double> eps_schedule{0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  int extrapolation_order = -1;  // polynomial degree, -1: eps_schedule.size() - 1
  double quad_rel_tol = 1e-10;
  double quad_abs_tol = 1e-14;
  double abel_rel_tol = 1e-4;  // NonConvergent when extrapolants disagree by 10x this
  std::size_t panel_budget = 100000;

  /// Throws Error(invalid_argument) when the invariants do not hold.
  void validate() const;
};

struct OracleValue {
  double value = 0.0;
  double error = 0.0;  // quadrature or extrapolation error estimate
};

/// Edge-state j^2 at x by adaptive Gauss-Kronrod over the occupied momenta
/// {lambda(k) > 0, E(k) < -|m|} with measure dk/pi.
/// Throws cpt_invariant_boundary, out_of_domain (x <= 0), non_convergent.
OracleValue oracle_edge_current(const ModelParams& p, double x, const RegularizationScheme& scheme);

struct CancellationReport {
  double cutoff = 0.0;
  // (i) symmetric P1 + P2 and pure-log P3 integrals
  double p1_p2_integral = 0.0;
  std::complex<double> p3_integral;
  std::complex<double> p3_expected;  // 2 ln(Lambda) * P3 coefficient
  // (ii) integral of 1/(v - v3) over (1/Lambda, Lambda)
  std::complex<double> log_numeric;
  std::complex<double> log_exact;       // Log(Lambda - v3) - Log(1/Lambda - v3)
  std::complex<double> log_asymptotic;  // ln Lambda - Log(-v3)
  std::complex<double> log_decomposed;  // ln Lambda + ln|(1+g)/(1-g)| - i arg(m+il) + i pi Theta(g^2-1)
  double asymptotic_bound = 0.0;        // admissible O(1/Lambda) gap
  bool symmetric_ok = false;
  bool p3_ok = false;
  bool log_ok = false;
  bool branch_ok = false;

  bool passed() const noexcept { return symmetric_ok && p3_ok && log_ok && branch_ok; }
};

/// Throws cpt_invariant_boundary, invalid_momentum (l <= 0).
CancellationReport oracle_p3_p4_cancellations(const ModelParams& p, double l,
                                              const RegularizationScheme& scheme);

struct BranchCutReport {
  double abel_value = 0.0;     // eps -> 0 limit of the damped real-axis integral
  double abel_error = 0.0;
  double contour_value = 0.0;  // pi * int_m^inf t exp(-2tx) dt, by quadrature
  double elementary = 0.0;     // pi exp(-2mx) (m/(2x) + 1/(4x^2))
  double rel_diff = 0.0;       // |abel - contour| / |contour|
};

/// int_0^inf 2 Re[i l Log(sqrt((m+il)/(m-il))) e^{-2ilx}] dl, evaluated both on
/// the real axis (Abel) and by the shifted contour. Requires m > 0, x > 0.
BranchCutReport oracle_branch_cut_integral(double m, double x, const RegularizationScheme& scheme);

/// Smooth x > 0 part of the bulk j^2 from the v-substituted integrand: the
/// P4 pole term is integrated over (1/Lambda, Lambda) for every l,
/// the ln(Lambda) piece is removed, and the Abel-damped l-integral with
/// measure dl/(2 pi^2) is extrapolated to eps -> 0.
/// Requires m >= 0 and gamma not in {0, +-1, Infinity}.
OracleValue oracle_bulk_current(const ModelParams& p, double x, const RegularizationScheme& scheme);

/// Abel limit of int_0^inf l sin(2lx) dl at x > 0 (expected 0): the kernel of
/// the ln(Lambda) delta' terms.
OracleValue oracle_delta_prime_kernel(double x, const RegularizationScheme& scheme);

/// int_{-K}^{K} k/E dk at fixed l for the symmetric k-range (expected 0).
double oracle_odd_term(const ModelParams& p, double l, double k_cutoff,
                       const RegularizationScheme& scheme);

}  // namespace halfplane
