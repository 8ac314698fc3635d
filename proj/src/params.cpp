#include "halfplane/params.hpp"

#include <cmath>

#include "halfplane/error.hpp"

namespace halfplane {

std::pair<double, double> ModelParams::gap() const noexcept {
  return {-std::abs(m), std::abs(m)};
}

double edge_velocity(const ProjectiveReal& gamma) noexcept {
  if (gamma.is_infinite()) return 0.0;
  const double g = gamma.value();
  // 2/(g + 1/g) for large |g| keeps the ratio exact without overflow.
  if (std::abs(g) > 1.0) return 2.0 / (g + 1.0 / g);
  return 2.0 * g / (1.0 + g * g);
}

BoundaryCharacter boundary_character(const ProjectiveReal& gamma) noexcept {
  BoundaryCharacter bc;
  bc.v_edge = edge_velocity(gamma);
  if (bc.v_edge > 0.0) bc.epsilon = 1;
  if (bc.v_edge < 0.0) bc.epsilon = -1;

  if (gamma.is_infinite()) {
    // (1+g)/(1-g) -> -1
    bc.eta = -1;
    bc.theta = 0.0;
    return bc;
  }
  const double g = gamma.value();
  if (g == 1.0 || g == -1.0) return bc;
  const double ratio = (1.0 + g) / (1.0 - g);
  bc.eta = ratio > 0.0 ? 1 : -1;
  // log1p form keeps full precision near g = 0
  bc.theta = std::abs(g) < 1.0 ? std::log1p(g) - std::log1p(-g) : std::log(std::abs(ratio));
  return bc;
}

ProjectiveReal gamma_from_rapidity(int eta, double theta) {
  if (eta == 1) return ProjectiveReal(std::tanh(0.5 * theta));
  if (eta == -1) {
    if (theta == 0.0) return ProjectiveReal::infinity();
    return ProjectiveReal(1.0 / std::tanh(0.5 * theta));
  }
  throw Error(Errc::invalid_argument, "signature must be +1 or -1");
}

ProjectiveReal boost(const ProjectiveReal& gamma, double chi) {
  const BoundaryCharacter bc = boundary_character(gamma);
  if (!bc.eta || !bc.theta) {
    throw Error(Errc::boost_undefined, "boost: signature undefined at gamma = +-1");
  }
  return gamma_from_rapidity(*bc.eta, *bc.theta + chi);
}

ModelParams reflection_dual(const ModelParams& p) noexcept {
  return {-p.m, p.gamma.inv().neg()};
}

ModelParams cpt_dual(const ModelParams& p) noexcept {
  return {p.m, p.gamma.inv()};
}

ModelParams halfplane_dual(const ModelParams& p) noexcept {
  return {-p.m, p.gamma.inv()};
}

}  // namespace halfplane
