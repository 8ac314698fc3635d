#pragma once

#include <optional>
#include <span>
#include <vector>

#include "halfplane/params.hpp"
#include "halfplane/spectrum.hpp"

namespace halfplane {

// Vacuum expectation values of the current j^2 (parallel to the boundary)
// for the Dirac sea filled up to E_F = -m. All closed forms are evaluated for
// m >= 0; negative masses go through the y-reflection duality, which flips
// the sign of j^2.

/// Pointwise j^2 of one negative-energy bulk mode:
/// k/E - Re((f/g) e^{-2ilx})/E with g = m - E + gamma(k - il), f = (k - il) g*.
/// Throws cpt_invariant_boundary at gamma = +-1, invalid_momentum for l <= 0.
double bulk_integrand_j2(const ModelParams& p, double l, double k, double x);

/// U_k^dagger sigma^2 U_k = 2 gamma lambda/(1+gamma^2) e^{-2 lambda x}.
/// Throws no_edge_state where lambda(k) <= 0.
double edge_integrand_j2(const ModelParams& p, double k, double x);

/// c2 v^2 + c1 v + c0
struct Quadratic {
  cplx c2;
  cplx c1;
  cplx c0;
  cplx operator()(cplx v) const { return (c2 * v + c1) * v + c0; }
};

/// Partial-fraction data of -(f/g) dk/(E dv) after k = a (v - 1/v)/2:
///   P1 = a/2, P2 = -(a/2) v^-2, P3 = p3 / v, P4 = p4 / (v - v3).
struct PartialFractionData {
  double a = 0.0;  // sqrt(l^2 + m^2)
  double l = 0.0;
  cplx v3;
  cplx v4;
  /// (a/2)(gamma+1)(v-v3)(v-v4); absent at gamma = Infinity.
  std::optional<Quadratic> d1;
  /// (a/2)(1/gamma+1)(v-v3)(v+v4) = v g(v)/gamma; absent at gamma = 0, Infinity.
  std::optional<Quadratic> d2;
  cplx p3;  // i l (gamma+1)/(gamma-1)
  cplx p4;  // -4 i l gamma/(gamma^2-1)

  double P1(double) const { return 0.5 * a; }
  double P2(double v) const { return -0.5 * a / (v * v); }
  cplx P3(double v) const { return p3 / v; }
  cplx P4(double v) const { return p4 / (v - v3); }
  cplx sum(double v) const { return P1(v) + P2(v) + P3(v) + P4(v); }
};

/// Throws cpt_invariant_boundary at gamma = +-1, invalid_momentum for l <= 0.
PartialFractionData partial_fractions(const ModelParams& p, double l);

/// -(f/g)(dk/dv)/E evaluated directly from the original (l, k) variables at
/// k = a (v - 1/v)/2. The partial-fraction sum must reproduce it.
cplx partial_fraction_target(const ModelParams& p, double l, double v);

/// v = exp(asinh(k/a)) and its inverse k = a (v - 1/v)/2.
double v_substitution(double k, double a);
double v_substitution_inverse(double v, double a);

/// Coefficients of the distributional and 1/x^2 pieces of <j^2>:
///   c_log_delta_prime * ln(Lambda) * delta'(x) + c_delta_prime * delta'(x)
///   + c_inv_x2 / x^2.
struct SingularPart {
  double c_log_delta_prime = 0.0;
  double c_delta_prime = 0.0;
  double c_inv_x2 = 0.0;
};

/// Depends on gamma only. Throws cpt_invariant_boundary at gamma = +-1.
SingularPart singular_part(const ModelParams& p);

struct BulkClosedForm {
  double smooth = 0.0;               // value at x > 0
  double delta_prime_log = 0.0;      // coefficient of delta'(x), including ln(Lambda)
  double delta_prime_dipole = 0.0;   // Lambda-independent coefficient of delta'(x)
};

/// Bulk j^2 at x > 0 for m >= 0, with its delta' coefficients.
/// Throws cpt_invariant_boundary (gamma = +-1), out_of_domain (x <= 0, m < 0,
/// Lambda <= 1).
BulkClosedForm closed_form_bulk_j2(const ModelParams& p, double x, double lambda_cutoff);

/// Edge-state j^2 at x > 0 for m >= 0. Same errors as the bulk form.
double closed_form_edge_j2(const ModelParams& p, double x);

/// <j^2> split into bulk and edge smooth parts and the singular coefficients.
/// regular(x) = total(x) - c_inv_x2/x^2.
class CurrentDecomposition {
 public:
  explicit CurrentDecomposition(const ModelParams& p);

  const ModelParams& params() const noexcept { return params_; }
  const SingularPart& singular() const noexcept { return singular_; }

  double bulk_smooth(double x) const;
  double edge_smooth(double x) const;
  double total(double x) const { return bulk_smooth(x) + edge_smooth(x); }
  double regular(double x) const;

 private:
  ModelParams params_;
  ModelParams evaluated_;  // m >= 0 representative
  double sign_ = 1.0;
  SingularPart singular_;
};

/// Throws cpt_invariant_boundary at gamma = +-1.
CurrentDecomposition total_decomposition(const ModelParams& p);

/// One row of a current profile.
struct ProfileRow {
  double x = 0.0;
  double j2_bulk_smooth = 0.0;
  double j2_edge_smooth = 0.0;
  double j2_total = 0.0;
  double j2_regular = 0.0;
  double c_x2_over_x2 = 0.0;
};

/// Log-spaced (geometric = true) or uniform grid of `points` values in
/// [x_min, x_max]. Requires 0 < x_min < x_max and points >= 2.
std::vector<double> x_grid(double x_min, double x_max, std::size_t points, bool geometric = true);

std::vector<ProfileRow> profile(const CurrentDecomposition& decomposition,
                                std::span<const double> xs);

struct J1Sample {
  double l = 0.0;  // bulk transverse momentum (> 0)
  double k = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Evaluates u^dagger sigma^1 u for negative-energy bulk modes and
/// U^dagger sigma^1 U for existing edge modes at the samples; true iff all
/// vanish to 1e-12.
bool j1_identically_zero_check(const ModelParams& p, std::span<const J1Sample> samples);

/// psi^dagger sigma^mu psi for mu = 1, 2.
double spinor_j1(const SpinorValue& psi) noexcept;
double spinor_j2(const SpinorValue& psi) noexcept;

}  // namespace halfplane
