#include "halfplane/spectrum.hpp"

#include <cmath>

#include "halfplane/error.hpp"

namespace halfplane {

namespace {

constexpr cplx I{0.0, 1.0};

// (1-g^2)/(1+g^2) and 2g/(1+g^2), written to stay finite for large |g|.
double mass_weight(double g) {
  if (std::abs(g) > 1.0) {
    const double r = 1.0 / (g * g);
    return (r - 1.0) / (r + 1.0);
  }
  return (1.0 - g * g) / (1.0 + g * g);
}

}  // namespace

BulkMode bulk_mode(const ModelParams& p, double l, double k, Branch branch) {
  if (!(l > 0.0)) throw Error(Errc::invalid_momentum, "bulk_mode: l must be positive");
  const double abs_e = std::sqrt(k * k + l * l + p.m * p.m);
  BulkMode mode;
  mode.l = l;
  mode.k = k;
  mode.E = branch == Branch::positive ? abs_e : -abs_e;
  mode.rho = cplx(k, l) / (p.m - mode.E);
  if (p.gamma.is_infinite()) {
    mode.phase = std::conj(mode.rho) / mode.rho;
  } else {
    const double g = p.gamma.value();
    mode.phase = (1.0 + g * std::conj(mode.rho)) / (1.0 + g * mode.rho);
  }
  return mode;
}

SpinorValue eval_bulk(const BulkMode& mode, const ModelParams& p, double x, double y) {
  const double norm = std::sqrt((mode.E - p.m) / (4.0 * mode.E));
  const cplx in = std::exp(I * (mode.l * x + mode.k * y));
  const cplx out = std::exp(I * (-mode.l * x + mode.k * y));
  const cplx c1 = mode.phase * I * mode.rho * in - I * std::conj(mode.rho) * out;
  const cplx c2 = mode.phase * in - out;
  return {c1 * norm, c2 * norm};
}

std::optional<EdgeMode> edge_mode_at_k(const ModelParams& p, double k) {
  EdgeMode mode;
  mode.k = k;
  if (p.gamma.is_infinite()) {
    mode.E = -p.m;
    mode.lambda = k;
  } else if (p.is_cpt_invariant_bc()) {
    const double g = p.gamma.value();
    mode.E = g * k;
    mode.lambda = g * p.m;
  } else {
    const double g = p.gamma.value();
    const double v = edge_velocity(p.gamma);
    const double c = mass_weight(g);
    mode.E = v * k + c * p.m;
    mode.lambda = -c * k + v * p.m;
  }
  if (!(mode.lambda > 0.0)) return std::nullopt;
  return mode;
}

SpinorValue eval_edge(const EdgeMode& mode, const ModelParams& p, double x, double y) {
  const cplx wave = std::exp(cplx(-mode.lambda * x, mode.k * y));
  if (p.gamma.is_infinite()) {
    return {cplx(0.0), -std::sqrt(mode.lambda) * wave};
  }
  const double g = p.gamma.value();
  const double norm = std::sqrt(mode.lambda / (1.0 + g * g));
  return {I * norm * wave, -g * norm * wave};
}

DefectMode defect_mode(const ModelParams& p, double mu, double k, int sign) {
  if (!(mu > 0.0)) throw Error(Errc::invalid_deficiency, "defect_mode: mu must be positive");
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "defect_mode: sign must be +-1");
  DefectMode mode;
  mode.mu = mu;
  mode.k = k;
  mode.sign = sign;
  mode.lambda = std::sqrt(mu * mu + k * k + p.m * p.m);
  mode.s = I * (k + mode.lambda) / cplx(p.m, sign * mu);
  return mode;
}

SpinorValue eval_defect(const DefectMode& mode, double x, double y) {
  const cplx wave = std::exp(cplx(-mode.lambda * x, mode.k * y));
  return {wave, mode.s * wave};
}

int edge_conductivity(const ModelParams& p) noexcept {
  if (!gap_crossing(p)) return 0;
  return p.m > 0.0 ? 1 : -1;
}

bool gap_crossing(const ModelParams& p) noexcept {
  if (p.gamma.is_infinite()) return false;
  return p.m * p.gamma.value() > 0.0;
}

namespace {

// Second-order derivative along one axis at index `i` of a line of length n.
template <class Get>
cplx line_derivative(Get get, std::size_t i, std::size_t n, double h) {
  if (i == 0) return (-3.0 * get(0) + 4.0 * get(1) - get(2)) / (2.0 * h);
  if (i == n - 1) return (3.0 * get(n - 1) - 4.0 * get(n - 2) + get(n - 3)) / (2.0 * h);
  return (get(i + 1) - get(i - 1)) / (2.0 * h);
}

}  // namespace

SpinorGrid apply_dirac_fd(const SpinorGrid& field, const ModelParams& p) {
  if (field.nx < 3 || field.ny < 3) {
    throw Error(Errc::grid_too_small, "apply_dirac_fd: need at least 3 points per axis");
  }
  if (!(field.h > 0.0)) throw Error(Errc::invalid_argument, "apply_dirac_fd: h must be positive");
  if (field.values.size() != field.nx * field.ny) {
    throw Error(Errc::invalid_argument, "apply_dirac_fd: value count does not match grid");
  }

  SpinorGrid out{field.nx, field.ny, field.x0, field.y0, field.h,
                 std::vector<SpinorValue>(field.values.size())};
  const double m = p.m;
  for (std::size_t i = 0; i < field.nx; ++i) {
    for (std::size_t j = 0; j < field.ny; ++j) {
      const auto along_x = [&](auto comp) {
        return line_derivative([&](std::size_t a) { return field.at(a, j).*comp; }, i, field.nx,
                               field.h);
      };
      const auto along_y = [&](auto comp) {
        return line_derivative([&](std::size_t b) { return field.at(i, b).*comp; }, j, field.ny,
                               field.h);
      };
      const cplx dx1 = along_x(&SpinorValue::c1);
      const cplx dx2 = along_x(&SpinorValue::c2);
      const cplx dy1 = along_y(&SpinorValue::c1);
      const cplx dy2 = along_y(&SpinorValue::c2);
      const SpinorValue& psi = field.at(i, j);
      out.at(i, j) = {-I * dx2 - dy2 + m * psi.c1, -I * dx1 + dy1 - m * psi.c2};
    }
  }
  return out;
}

double relative_residual(const SpinorGrid& field, const SpinorGrid& applied, cplx eigenvalue) {
  if (field.values.size() != applied.values.size()) {
    throw Error(Errc::invalid_argument, "relative_residual: grid size mismatch");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = 0; n < field.values.size(); ++n) {
    const SpinorValue& psi = field.values[n];
    const SpinorValue& hpsi = applied.values[n];
    num += std::norm(hpsi.c1 - eigenvalue * psi.c1) + std::norm(hpsi.c2 - eigenvalue * psi.c2);
    den += std::norm(psi.c1) + std::norm(psi.c2);
  }
  return std::sqrt(num / den);
}

}  // namespace halfplane
