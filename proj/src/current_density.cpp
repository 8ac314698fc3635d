#include "halfplane/current_density.hpp"

#include <cmath>
#include <numbers>

#include "halfplane/error.hpp"

namespace halfplane {

namespace {

using std::numbers::pi;
constexpr cplx I{0.0, 1.0};

void reject_cpt_invariant(const ModelParams& p, const char* where) {
  if (p.is_cpt_invariant_bc()) {
    throw Error(Errc::cpt_invariant_boundary, std::string(where) + ": gamma = +-1 is excluded");
  }
}

void check_closed_form_domain(const ModelParams& p, double x, const char* where) {
  reject_cpt_invariant(p, where);
  if (!(x > 0.0)) throw Error(Errc::out_of_domain, std::string(where) + ": x must be positive");
  if (p.m < 0.0) {
    throw Error(Errc::out_of_domain, std::string(where) + ": m < 0, use the reflection dual");
  }
}

// gamma/(gamma^2 - 1); 0 at Infinity.
double gamma_ratio(const ProjectiveReal& gamma) {
  if (gamma.is_infinite()) return 0.0;
  const double g = gamma.value();
  if (std::abs(g) > 1.0) return 1.0 / (g - 1.0 / g);
  return g / (g * g - 1.0);
}

double heaviside_outside_unit(const ProjectiveReal& gamma) {
  return gamma.is_infinite() || std::abs(gamma.value()) > 1.0 ? 1.0 : 0.0;
}

// f/g of the bulk j^2 integrand for negative E.
cplx f_over_g(const ModelParams& p, double l, double k, double E) {
  const cplx kl(k, -l);
  if (p.gamma.is_infinite()) return std::conj(kl);
  const double g = p.gamma.value();
  const cplx denom = p.m - E + g * kl;
  return kl * std::conj(denom) / denom;
}

double bulk_smooth_value(const ModelParams& p, double x) {
  const double q = gamma_ratio(p.gamma);
  const double inv2x2 = 0.5 / (x * x);
  return q / (2.0 * pi) * (inv2x2 + p.m / x) * std::exp(-2.0 * p.m * x) -
         q / pi * inv2x2 * heaviside_outside_unit(p.gamma);
}

}  // namespace

double spinor_j1(const SpinorValue& psi) noexcept {
  return 2.0 * (std::conj(psi.c1) * psi.c2).real();
}

double spinor_j2(const SpinorValue& psi) noexcept {
  return 2.0 * (std::conj(psi.c1) * psi.c2).imag();
}

double bulk_integrand_j2(const ModelParams& p, double l, double k, double x) {
  reject_cpt_invariant(p, "bulk_integrand_j2");
  if (!(l > 0.0)) throw Error(Errc::invalid_momentum, "bulk_integrand_j2: l must be positive");
  const double E = -std::sqrt(k * k + l * l + p.m * p.m);
  const cplx osc = f_over_g(p, l, k, E) * std::exp(cplx(0.0, -2.0 * l * x));
  return k / E - osc.real() / E;
}

double edge_integrand_j2(const ModelParams& p, double k, double x) {
  const auto mode = edge_mode_at_k(p, k);
  if (!mode) throw Error(Errc::no_edge_state, "edge_integrand_j2: no edge state at this k");
  if (p.gamma.is_infinite()) return 0.0;
  const double g = p.gamma.value();
  return 2.0 * g * mode->lambda / (1.0 + g * g) * std::exp(-2.0 * mode->lambda * x);
}

PartialFractionData partial_fractions(const ModelParams& p, double l) {
  reject_cpt_invariant(p, "partial_fractions");
  if (!(l > 0.0)) throw Error(Errc::invalid_momentum, "partial_fractions: l must be positive");

  PartialFractionData d;
  d.l = l;
  d.a = std::hypot(l, p.m);
  d.v4 = cplx(p.m, -l) / d.a;
  const cplx unit(p.m, l);  // (m + il)

  if (p.gamma.is_infinite()) {
    d.v3 = unit / d.a;
    d.p3 = I * l;
    d.p4 = 0.0;
    return d;
  }

  const double g = p.gamma.value();
  d.v3 = unit / d.a * ((g - 1.0) / (g + 1.0));
  d.p3 = I * l * ((g + 1.0) / (g - 1.0));
  d.p4 = -4.0 * I * l * gamma_ratio(p.gamma);

  const double half_a = 0.5 * d.a;
  d.d1 = Quadratic{half_a * (g + 1.0), -half_a * (g + 1.0) * (d.v3 + d.v4),
                   half_a * (g + 1.0) * d.v3 * d.v4};
  if (g != 0.0) {
    const double lead = half_a * (1.0 / g + 1.0);
    d.d2 = Quadratic{lead, -lead * (d.v3 - d.v4), -lead * d.v3 * d.v4};
  }
  return d;
}

cplx partial_fraction_target(const ModelParams& p, double l, double v) {
  const double a = std::hypot(l, p.m);
  const double k = v_substitution_inverse(v, a);
  const double E = -std::sqrt(k * k + l * l + p.m * p.m);
  const double dk_dv = 0.5 * a * (1.0 + 1.0 / (v * v));
  return -f_over_g(p, l, k, E) * dk_dv / E;
}

double v_substitution(double k, double a) {
  if (!(a > 0.0)) throw Error(Errc::invalid_argument, "v_substitution: a must be positive");
  return std::exp(std::asinh(k / a));
}

double v_substitution_inverse(double v, double a) {
  if (!(a > 0.0) || !(v > 0.0)) {
    throw Error(Errc::invalid_argument, "v_substitution_inverse: a and v must be positive");
  }
  return 0.5 * a * (v - 1.0 / v);
}

SingularPart singular_part(const ModelParams& p) {
  reject_cpt_invariant(p, "singular_part");
  SingularPart s;
  if (p.gamma.is_infinite()) {
    s.c_log_delta_prime = -1.0 / (2.0 * pi);
    return s;
  }
  const double g = p.gamma.value();
  const double g2 = g * g;
  const double q = gamma_ratio(p.gamma);
  s.c_log_delta_prime = std::abs(g) > 1.0 ? -(1.0 + 1.0 / g2) / (2.0 * pi * (1.0 - 1.0 / g2))
                                          : -(g2 + 1.0) / (2.0 * pi * (g2 - 1.0));
  s.c_delta_prime = q / pi * std::log(std::abs((1.0 + g) / (1.0 - g)));
  s.c_inv_x2 = -std::abs(q) / (4.0 * pi) * (std::abs(g) > 1.0 ? 1.0 : -1.0);
  return s;
}

BulkClosedForm closed_form_bulk_j2(const ModelParams& p, double x, double lambda_cutoff) {
  check_closed_form_domain(p, x, "closed_form_bulk_j2");
  if (!(lambda_cutoff > 1.0)) {
    throw Error(Errc::out_of_domain, "closed_form_bulk_j2: cutoff must exceed 1");
  }
  const SingularPart s = singular_part(p);
  return {bulk_smooth_value(p, x), s.c_log_delta_prime * std::log(lambda_cutoff), s.c_delta_prime};
}

double closed_form_edge_j2(const ModelParams& p, double x) {
  check_closed_form_domain(p, x, "closed_form_edge_j2");
  if (p.gamma.is_infinite()) return 0.0;
  const double g = p.gamma.value();
  const double q = gamma_ratio(p.gamma);
  const double inv2x2 = 0.5 / (x * x);
  double bracket = inv2x2 * heaviside_outside_unit(p.gamma);
  if (g > 0.0) bracket -= (inv2x2 + p.m / (g * x)) * std::exp(-2.0 * p.m * x / g);
  return q / pi * bracket;
}

CurrentDecomposition::CurrentDecomposition(const ModelParams& p)
    : params_(p), evaluated_(p.m < 0.0 ? reflection_dual(p) : p), sign_(p.m < 0.0 ? -1.0 : 1.0),
      singular_(singular_part(p)) {}

double CurrentDecomposition::bulk_smooth(double x) const {
  return sign_ * closed_form_bulk_j2(evaluated_, x, 2.0).smooth;
}

double CurrentDecomposition::edge_smooth(double x) const {
  return sign_ * closed_form_edge_j2(evaluated_, x);
}

double CurrentDecomposition::regular(double x) const {
  return total(x) - singular_.c_inv_x2 / (x * x);
}

CurrentDecomposition total_decomposition(const ModelParams& p) {
  return CurrentDecomposition(p);
}

std::vector<double> x_grid(double x_min, double x_max, std::size_t points, bool geometric) {
  if (!(x_min > 0.0) || !(x_max > x_min) || points < 2) {
    throw Error(Errc::invalid_argument, "x_grid: need 0 < x_min < x_max and at least 2 points");
  }
  std::vector<double> xs(points);
  const double steps = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / steps;
    xs[i] = geometric ? x_min * std::pow(x_max / x_min, t) : x_min + (x_max - x_min) * t;
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

std::vector<ProfileRow> profile(const CurrentDecomposition& decomposition,
                                std::span<const double> xs) {
  std::vector<ProfileRow> rows;
  rows.reserve(xs.size());
  const double c = decomposition.singular().c_inv_x2;
  for (double x : xs) {
    if (!rows.empty() && !(x > rows.back().x)) {
      throw Error(Errc::invalid_argument, "profile: x values must be strictly increasing");
    }
    ProfileRow row;
    row.x = x;
    row.j2_bulk_smooth = decomposition.bulk_smooth(x);
    row.j2_edge_smooth = decomposition.edge_smooth(x);
    row.j2_total = row.j2_bulk_smooth + row.j2_edge_smooth;
    row.c_x2_over_x2 = c / (x * x);
    row.j2_regular = row.j2_total - row.c_x2_over_x2;
    rows.push_back(row);
  }
  return rows;
}

bool j1_identically_zero_check(const ModelParams& p, std::span<const J1Sample> samples) {
  const auto vanishes = [](const SpinorValue& psi) {
    const double scale = std::max(1.0, std::norm(psi.c1) + std::norm(psi.c2));
    return std::abs(spinor_j1(psi)) <= 1e-12 * scale;
  };
  for (const J1Sample& s : samples) {
    const BulkMode bulk = bulk_mode(p, s.l, s.k, Branch::negative);
    if (!vanishes(eval_bulk(bulk, p, s.x, s.y))) return false;
    if (const auto edge = edge_mode_at_k(p, s.k)) {
      if (!vanishes(eval_edge(*edge, p, s.x, s.y))) return false;
    }
  }
  return true;
}

}  // namespace halfplane
