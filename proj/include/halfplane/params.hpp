#pragma once

#include <optional>
#include <utility>

#include "halfplane/projective.hpp"

namespace halfplane {

/// One fermion species: mass m (inverse length, any sign) and boundary
/// parameter gamma in psi_2(0,y) = i*gamma*psi_1(0,y).
struct ModelParams {
  double m = 0.0;
  ProjectiveReal gamma;

  /// gamma = +1 or -1. These boundaries get special-case edge handling and
  /// are rejected by the current-density code.
  bool is_cpt_invariant_bc() const noexcept { return gamma.equals(1.0) || gamma.equals(-1.0); }
  /// Bulk spectral gap (-|m|, |m|).
  std::pair<double, double> gap() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Lorentz-invariant description of a boundary condition.
///
/// eta is the signature sgn((1-gamma)/(1+gamma)) and theta the rapidity with
/// eta*exp(theta) = (1+gamma)/(1-gamma). Both are absent at gamma = +-1, where
/// the rapidity is infinite. epsilon = sgn(v_edge) is absent when v_edge = 0.
struct BoundaryCharacter {
  double v_edge = 0.0;
  std::optional<int> eta;
  std::optional<double> theta;
  std::optional<int> epsilon;
};

/// 2*gamma/(1+gamma^2); 0 at Infinity.
double edge_velocity(const ProjectiveReal& gamma) noexcept;

BoundaryCharacter boundary_character(const ProjectiveReal& gamma) noexcept;

/// Inverse of the (eta, theta) parametrization: (1+g)/(1-g) = eta*exp(theta).
/// eta = -1, theta = 0 gives Infinity. Throws invalid_argument unless eta = +-1.
ProjectiveReal gamma_from_rapidity(int eta, double theta);

/// Boost parallel to the boundary: keeps eta, adds chi to theta.
/// Throws Error(boost_undefined) for gamma = +-1.
ProjectiveReal boost(const ProjectiveReal& gamma, double chi);

/// y-reflection: (m, gamma) -> (-m, -1/gamma).
ModelParams reflection_dual(const ModelParams& p) noexcept;
/// CPT: (m, gamma) -> (m, 1/gamma). Maps positive-energy states to negative.
ModelParams cpt_dual(const ModelParams& p) noexcept;
/// Complementary half plane: (m, gamma) -> (-m, 1/gamma).
ModelParams halfplane_dual(const ModelParams& p) noexcept;

}  // namespace halfplane
