#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "halfplane/params.hpp"

namespace halfplane {

using cplx = std::complex<double>;

/// Two-component spinor value (psi_1, psi_2).
struct SpinorValue {
  cplx c1;
  cplx c2;
};

enum class Branch { positive, negative };

/// Scattering eigenfunction with transverse momentum l > 0 and longitudinal
/// momentum k. rho = (k + i l)/(m - E); phase = e^{i phi} fixes the boundary
/// condition.
struct BulkMode {
  double l = 0.0;
  double k = 0.0;
  double E = 0.0;
  cplx rho;
  cplx phase;
};

/// Boundary-localized eigenfunction exp(-lambda x + i k y) chi.
struct EdgeMode {
  double k = 0.0;
  double E = 0.0;
  double lambda = 0.0;
};

/// Element of the deficiency space N_sign(k): exp(-lambda x + i k y) (1, s)
/// with H psi = sign * i * mu * psi.
struct DefectMode {
  double mu = 0.0;
  double k = 0.0;
  int sign = 1;
  double lambda = 0.0;
  cplx s;
};

/// Throws Error(invalid_momentum) for l <= 0.
BulkMode bulk_mode(const ModelParams& p, double l, double k, Branch branch);

/// u_lk(x, y) with the sqrt((E-m)/(4E)) normalization for the measure
/// dk dl / (2 pi^2).
SpinorValue eval_bulk(const BulkMode& mode, const ModelParams& p, double x, double y);

/// Edge state at longitudinal momentum k, or nullopt when lambda(k) <= 0.
///
/// gamma = +-1 takes the dedicated rule E = gamma k, lambda = gamma m;
/// gamma = Infinity uses E = -m, lambda = k (CPT image of gamma = 0).
std::optional<EdgeMode> edge_mode_at_k(const ModelParams& p, double k);

/// U_k(x, y) = sqrt(lambda/(1+gamma^2)) (i, -gamma) exp(-lambda x + i k y),
/// normalized for the measure dk/pi.
SpinorValue eval_edge(const EdgeMode& mode, const ModelParams& p, double x, double y);

/// Throws Error(invalid_deficiency) for mu <= 0 and invalid_argument unless
/// sign = +-1.
DefectMode defect_mode(const ModelParams& p, double mu, double k, int sign);
SpinorValue eval_defect(const DefectMode& mode, double x, double y);

/// Edge conductivity in units of e^2/h: sgn(m) if m*gamma > 0, else 0.
int edge_conductivity(const ModelParams& p) noexcept;
/// True iff some edge energies lie inside the bulk gap (m*gamma > 0).
bool gap_crossing(const ModelParams& p) noexcept;

/// Spinor field sampled on a uniform grid; x index major.
struct SpinorGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double h = 0.0;
  std::vector<SpinorValue> values;

  SpinorValue& at(std::size_t i, std::size_t j) { return values[i * ny + j]; }
  const SpinorValue& at(std::size_t i, std::size_t j) const { return values[i * ny + j]; }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
  double y(std::size_t j) const { return y0 + static_cast<double>(j) * h; }
};

template <class Field>
SpinorGrid sample_grid(Field&& field, std::size_t nx, std::size_t ny, double x0, double y0,
                       double h) {
  SpinorGrid grid{nx, ny, x0, y0, h, std::vector<SpinorValue>(nx * ny)};
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) grid.at(i, j) = field(grid.x(i), grid.y(j));
  }
  return grid;
}

/// Second-order finite-difference H = -i s1 d_x - i s2 d_y + m s3.
/// Central differences inside, one-sided second-order stencils on the edges
/// (including the x = 0 row). Throws Error(grid_too_small) below 3x3.
SpinorGrid apply_dirac_fd(const SpinorGrid& field, const ModelParams& p);

/// ||H_h psi - eigenvalue psi|| / ||psi|| in the discrete l2 norm.
double relative_residual(const SpinorGrid& field, const SpinorGrid& applied, cplx eigenvalue);

}  // namespace halfplane
