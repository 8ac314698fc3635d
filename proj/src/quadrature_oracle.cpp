#include "halfplane/quadrature_oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "abel.hpp"
#include "halfplane/current_density.hpp"
#include "halfplane/error.hpp"
#include "halfplane/spectrum.hpp"

namespace halfplane {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr unsigned kMaxDepth = 30;

// Absolute Abel truncation: exp(-eps_min * l_max) = e^-45.
constexpr double kAbelTail = 45.0;

template <class F>
OracleValue gauss_kronrod(F f, double a, double b, const RegularizationScheme& scheme,
                          const char* where) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double error = 0.0;
  double l1 = 0.0;
  const double value = GK::integrate(f, a, b, kMaxDepth, scheme.quad_rel_tol, &error, &l1);
  const double allowed = std::max(10.0 * scheme.quad_rel_tol * l1, scheme.quad_abs_tol);
  if (!std::isfinite(value) || error > allowed) {
    throw Error(Errc::non_convergent, std::string(where) + ": quadrature tolerance not met");
  }
  return {value, error};
}

// Complex integral as two real ones.
template <class F>
cplx gauss_kronrod_complex(F f, double a, double b, const RegularizationScheme& scheme,
                           const char* where) {
  const double re = gauss_kronrod([&](double t) { return f(t).real(); }, a, b, scheme, where).value;
  const double im = gauss_kronrod([&](double t) { return f(t).imag(); }, a, b, scheme, where).value;
  return {re, im};
}

// int_{1/Lambda}^{Lambda} g(v) dv in t = ln v, split where the integrand peaks.
template <class F>
cplx log_scale_integral(F g, double cutoff, double peak, const RegularizationScheme& scheme,
                        const char* where) {
  const double T = std::log(cutoff);
  const auto in_t = [&](double t) {
    const double v = std::exp(t);
    return g(v) * v;
  };
  if (peak > 1.0 / cutoff && peak < cutoff) {
    const double tp = std::log(peak);
    return gauss_kronrod_complex(in_t, -T, tp, scheme, where) +
           gauss_kronrod_complex(in_t, tp, T, scheme, where);
  }
  return gauss_kronrod_complex(in_t, -T, T, scheme, where);
}

struct AbelSetup {
  std::vector<double> eps;
  detail::CompositeRule rule;
};

AbelSetup abel_setup(double x, const RegularizationScheme& scheme) {
  AbelSetup s;
  for (double e : scheme.eps_schedule) s.eps.push_back(e * x);
  const double l_max = scheme.l_max > 0.0 ? scheme.l_max : kAbelTail / s.eps.back();
  // half period of cos(2 l x)
  s.rule = detail::composite_gauss(l_max, pi / (2.0 * x), scheme.panel_budget);
  return s;
}

OracleValue abel_limit(const AbelSetup& setup, std::span<const double> h,
                       const RegularizationScheme& scheme, const char* where) {
  const std::vector<double> sums = detail::damped_sums(setup.rule, h, setup.eps);
  const auto ex = detail::extrapolate_to_zero(setup.eps, sums, scheme.extrapolation_order);
  const double scale = std::max(std::abs(ex.value), scheme.quad_abs_tol);
  if (!std::isfinite(ex.value) || ex.error > 10.0 * scheme.abel_rel_tol * scale) {
    throw Error(Errc::non_convergent, std::string(where) + ": eps extrapolation unstable");
  }
  return {ex.value, ex.error};
}

// Solution set of c1 k + c0 > 0 as an interval.
struct HalfLine {
  double lo = -inf;
  double hi = inf;
  bool empty = false;
};

HalfLine positive_set(double c1, double c0) {
  HalfLine h;
  if (c1 > 0.0) {
    h.lo = -c0 / c1;
  } else if (c1 < 0.0) {
    h.hi = -c0 / c1;
  } else {
    h.empty = !(c0 > 0.0);
  }
  return h;
}

void check_oracle_x(double x, const char* where) {
  if (!(x > 0.0)) throw Error(Errc::out_of_domain, std::string(where) + ": x must be positive");
}

}  // namespace

void RegularizationScheme::validate() const {
  if (!(lambda_cutoff > 1.0)) throw Error(Errc::invalid_argument, "scheme: cutoff must exceed 1");
  if (l_max < 0.0) throw Error(Errc::invalid_argument, "scheme: l_max must be non-negative");
  if (eps_schedule.empty()) throw Error(Errc::invalid_argument, "scheme: empty eps schedule");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    if (!(eps_schedule[i] > 0.0) || (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1]))) {
      throw Error(Errc::invalid_argument, "scheme: eps schedule must be positive and decreasing");
    }
  }
  if (extrapolation_order >= static_cast<int>(eps_schedule.size())) {
    throw Error(Errc::invalid_argument, "scheme: extrapolation order needs more eps values");
  }
  if (!(quad_rel_tol > 0.0) || !(quad_abs_tol > 0.0) || !(abel_rel_tol > 0.0)) {
    throw Error(Errc::invalid_argument, "scheme: tolerances must be positive");
  }
  if (panel_budget == 0) throw Error(Errc::invalid_argument, "scheme: zero panel budget");
}

OracleValue oracle_edge_current(const ModelParams& p, double x, const RegularizationScheme& scheme) {
  scheme.validate();
  check_oracle_x(x, "oracle_edge_current");
  if (p.is_cpt_invariant_bc()) {
    throw Error(Errc::cpt_invariant_boundary, "oracle_edge_current: gamma = +-1 is excluded");
  }
  // lambda(k) = -c k + v m and E(k) = v k + c m with c = (1 - g^2)/(1 + g^2).
  // The sea is filled up to the lower gap edge -|m|, which is where the
  // reflection duality puts the Fermi level for m < 0.
  const double v = edge_velocity(p.gamma);
  double c = -1.0;
  if (p.gamma.is_finite()) {
    const double g = p.gamma.value();
    c = (1.0 - g * g) / (1.0 + g * g);
  }
  const double fermi = -std::abs(p.m);
  const HalfLine decaying = positive_set(-c, v * p.m);
  // E < E_F  <=>  E_F - E > 0; a flat band at E_F gets weight Theta(0) = 1/2.
  double weight = 1.0;
  HalfLine occupied = positive_set(-v, fermi - c * p.m);
  if (v == 0.0 && c * p.m == fermi) {
    occupied = HalfLine{};
    weight = 0.5;
  }
  const double lo = std::max(decaying.lo, occupied.lo);
  const double hi = std::min(decaying.hi, occupied.hi);
  if (decaying.empty || occupied.empty || !(lo < hi)) return {0.0, 0.0};

  const auto integrand = [&](double k) {
    if (!edge_mode_at_k(p, k)) return 0.0;
    return weight * edge_integrand_j2(p, k, x) / pi;
  };
  return gauss_kronrod(integrand, lo, hi, scheme, "oracle_edge_current");
}

CancellationReport oracle_p3_p4_cancellations(const ModelParams& p, double l,
                                              const RegularizationScheme& scheme) {
  scheme.validate();
  const PartialFractionData pf = partial_fractions(p, l);
  const double cutoff = scheme.lambda_cutoff;
  const double log_cutoff = std::log(cutoff);
  const char* where = "oracle_p3_p4_cancellations";

  CancellationReport r;
  r.cutoff = cutoff;

  r.p1_p2_integral =
      log_scale_integral([&](double v) { return cplx(pf.P1(v) + pf.P2(v)); }, cutoff, 0.0, scheme,
                         where)
          .real();
  r.symmetric_ok = std::abs(r.p1_p2_integral) <= 1e-10 * std::max(1.0, pf.a);

  r.p3_integral = log_scale_integral([&](double v) { return pf.P3(v); }, cutoff, 0.0, scheme, where);
  r.p3_expected = 2.0 * log_cutoff * pf.p3;
  r.p3_ok = std::abs(r.p3_integral - r.p3_expected) <= 1e-10 * std::max(1.0, std::abs(r.p3_expected));

  const cplx v3 = pf.v3;
  r.log_numeric = log_scale_integral([&](double v) { return 1.0 / (v - v3); }, cutoff,
                                     std::abs(v3.real()) > 0.0 ? v3.real() : 0.0, scheme, where);
  r.log_exact = std::log(cutoff - v3) - std::log(1.0 / cutoff - v3);
  r.log_ok = std::abs(r.log_numeric - r.log_exact) <= 1e-10 * std::max(1.0, std::abs(r.log_exact));

  r.log_asymptotic = log_cutoff - std::log(-v3);
  const double abs_v3 = std::abs(v3);
  r.asymptotic_bound = 2.0 * (abs_v3 + 1.0 / abs_v3) / cutoff;
  if (p.m >= 0.0) {
    double real_log = 0.0;
    double branch = 0.0;
    if (!p.gamma.is_infinite()) {
      const double g = p.gamma.value();
      real_log = std::log(std::abs((1.0 + g) / (1.0 - g)));
      branch = std::abs(g) > 1.0 ? pi : 0.0;
    } else {
      branch = pi;
    }
    const double phase = std::atan2(l, p.m);
    r.log_decomposed = cplx(log_cutoff + real_log, -phase + branch);
  } else {
    r.log_decomposed = r.log_asymptotic;
  }
  r.branch_ok = std::abs(r.log_numeric - r.log_asymptotic) <= r.asymptotic_bound &&
                std::abs(r.log_decomposed - r.log_asymptotic) <= 1e-12 * std::abs(r.log_asymptotic);
  return r;
}

BranchCutReport oracle_branch_cut_integral(double m, double x, const RegularizationScheme& scheme) {
  scheme.validate();
  if (!(m > 0.0)) throw Error(Errc::out_of_domain, "oracle_branch_cut_integral: m must be positive");
  check_oracle_x(x, "oracle_branch_cut_integral");

  const AbelSetup setup = abel_setup(x, scheme);
  std::vector<double> h(setup.rule.nodes.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double l = setup.rule.nodes[i];
    const cplx log_term = std::log(std::sqrt(cplx(m, l) / cplx(m, -l)));
    h[i] = 2.0 * (cplx(0.0, l) * log_term * std::exp(cplx(0.0, -2.0 * l * x))).real();
  }
  const OracleValue abel = abel_limit(setup, h, scheme, "oracle_branch_cut_integral");

  BranchCutReport r;
  r.abel_value = abel.value;
  r.abel_error = abel.error;
  r.contour_value =
      pi * gauss_kronrod([&](double t) { return t * std::exp(-2.0 * t * x); }, m, inf, scheme,
                         "oracle_branch_cut_integral")
               .value;
  r.elementary = pi * std::exp(-2.0 * m * x) * (m / (2.0 * x) + 1.0 / (4.0 * x * x));
  r.rel_diff = std::abs(r.abel_value - r.contour_value) / std::abs(r.contour_value);
  return r;
}

OracleValue oracle_bulk_current(const ModelParams& p, double x, const RegularizationScheme& scheme) {
  scheme.validate();
  check_oracle_x(x, "oracle_bulk_current");
  if (p.m < 0.0) throw Error(Errc::out_of_domain, "oracle_bulk_current: m must be non-negative");
  if (p.is_cpt_invariant_bc()) {
    throw Error(Errc::cpt_invariant_boundary, "oracle_bulk_current: gamma = +-1 is excluded");
  }
  if (p.gamma.is_infinite() || p.gamma.value() == 0.0) {
    throw Error(Errc::out_of_domain, "oracle_bulk_current: gamma must be finite and nonzero");
  }

  const double cutoff = scheme.lambda_cutoff;
  const double log_cutoff = std::log(cutoff);
  const AbelSetup setup = abel_setup(x, scheme);
  std::vector<double> h(setup.rule.nodes.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double l = setup.rule.nodes[i];
    const PartialFractionData pf = partial_fractions(p, l);
    // P1 + P2 integrate to zero on the symmetric range and P3 to a pure
    // ln(Lambda) delta' term; only the P4 pole carries x > 0 information. Its
    // v-integral at finite Lambda is the exact log below, which
    // oracle_p3_p4_cancellations checks against adaptive quadrature.
    const cplx pole = pf.p4 * (std::log(cutoff - pf.v3) - std::log(1.0 / cutoff - pf.v3));
    const cplx finite = pole - pf.p4 * log_cutoff;
    h[i] = (finite * std::exp(cplx(0.0, -2.0 * l * x))).real() / (2.0 * pi * pi);
  }
  return abel_limit(setup, h, scheme, "oracle_bulk_current");
}

OracleValue oracle_delta_prime_kernel(double x, const RegularizationScheme& scheme) {
  scheme.validate();
  check_oracle_x(x, "oracle_delta_prime_kernel");
  const AbelSetup setup = abel_setup(x, scheme);
  std::vector<double> h(setup.rule.nodes.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double l = setup.rule.nodes[i];
    h[i] = l * std::sin(2.0 * l * x);
  }
  // The limit is zero, so judge stability against the undamped scale 1/x^2.
  RegularizationScheme relaxed = scheme;
  relaxed.quad_abs_tol = std::max(scheme.quad_abs_tol, 1.0 / (x * x));
  return abel_limit(setup, h, relaxed, "oracle_delta_prime_kernel");
}

double oracle_odd_term(const ModelParams& p, double l, double k_cutoff,
                       const RegularizationScheme& scheme) {
  scheme.validate();
  if (!(l > 0.0) || !(k_cutoff > 0.0)) {
    throw Error(Errc::invalid_argument, "oracle_odd_term: l and cutoff must be positive");
  }
  const auto odd = [&](double k) { return k / -std::sqrt(k * k + l * l + p.m * p.m); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(odd, -k_cutoff, k_cutoff,
                                                                       kMaxDepth,
                                                                       scheme.quad_rel_tol, &error);
}

}  // namespace halfplane
