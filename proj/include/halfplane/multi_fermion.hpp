#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "halfplane/params.hpp"

namespace halfplane {

/// N fermion species distinguished by their boundary parameters.
/// Species add independently; gamma = +-1 is not admitted.
class FermionSystem {
 public:
  /// Throws invalid_argument for an empty list and cpt_invariant_boundary
  /// when some gamma is +-1.
  explicit FermionSystem(std::vector<ProjectiveReal> gammas);

  std::span<const ProjectiveReal> gammas() const noexcept { return gammas_; }
  std::size_t size() const noexcept { return gammas_.size(); }
  std::vector<BoundaryCharacter> characters() const;

  /// Some gamma is 0 or Infinity (flat edge dispersion).
  bool has_flat_edge_species() const noexcept;

  FermionSystem merged(const FermionSystem& other) const;

 private:
  std::vector<ProjectiveReal> gammas_;
};

/// Divergence bookkeeping summed over species:
///   r_log    = sum (g^2+1)/(g^2-1)                 (ln Lambda delta')
///   r_x2     = sum |g|/(g^2-1)                     (1/x^2)
///   r_dipole = sum g/(pi(g^2-1)) ln|(1+g)/(1-g)|   (dipolar delta')
///   r_plus/r_minus = sum eta exp(+-epsilon theta), absent when some v = 0.
/// With every epsilon defined, r_plus = -r_log - 2 r_x2 and
/// r_minus = -r_log + 2 r_x2.
struct ResidualReport {
  double r_log = 0.0;
  double r_x2 = 0.0;
  double r_dipole = 0.0;
  std::optional<double> r_plus;
  std::optional<double> r_minus;
  /// sums of absolute summands, the natural scale for "vanishes"
  double scale_log = 0.0;
  double scale_x2 = 0.0;
  double scale_dipole = 0.0;
  double scale_rapidity = 0.0;
  bool flat_edge_species = false;

  bool divergences_cancel(double tol = 1e-10) const noexcept;
  bool dipole_cancels(double tol = 1e-10) const noexcept;
  std::optional<bool> rapidity_form_cancels(double tol = 1e-10) const noexcept;
};

ResidualReport residuals(const FermionSystem& sys);

struct RapidityEquivalence {
  bool gamma_form_zero = false;
  bool rapidity_form_zero = false;
  /// max deviation from r_plus = -r_log - 2 r_x2, r_minus = -r_log + 2 r_x2,
  /// relative to the residual scale
  double identity_defect = 0.0;

  bool consistent() const noexcept { return gamma_form_zero == rapidity_form_zero; }
};

/// Throws undefined_epsilon when some edge velocity vanishes.
RapidityEquivalence rapidity_equivalence(const FermionSystem& sys, double tol = 1e-10);
bool rapidity_equivalence_check(const FermionSystem& sys, double tol = 1e-10);

/// {gamma, -1/gamma}. Throws degenerate_pair for gamma in {0, +-1, Infinity}.
FermionSystem conjugate_pair(const ProjectiveReal& gamma);

struct BoostScanEntry {
  double chi = 0.0;
  std::vector<ProjectiveReal> gammas;  // boosted parameters
  bool signs_preserved = false;        // every epsilon unchanged (and defined)
  bool cancels = false;                // rapidity form, or gamma form when some v = 0
  ResidualReport report;
};

/// Boosts every species by each chi. Requires a system whose divergences
/// cancel (invalid_argument otherwise).
std::vector<BoostScanEntry> boost_invariance_scan(const FermionSystem& sys,
                                                  std::span<const double> chis);

enum ResidualTarget : unsigned {
  target_log = 1u,
  target_x2 = 2u,
  target_dipole = 4u,
};

struct SolveOptions {
  unsigned targets = target_log | target_x2;
  std::vector<double> theta_starts{-3.0, -1.5, -0.5, 0.5, 1.5, 3.0};
  double damping = 0.5;      // backtracking factor
  double tolerance = 1e-12;  // max |residual| at convergence
  int max_iterations = 200;
  double dedup_tolerance = 1e-8;
  std::size_t max_free = 4;  // multistart size grows as (2 * starts)^free
};

/// Searches the free boundary parameters of an n-species system (with
/// `fixed` prescribed) for zeros of the targeted residuals. Free species are
/// parametrized by (eta, theta); the multistart lattice is deterministic and
/// solutions are returned sorted and deduplicated. An empty result means no
/// solution was found.
std::vector<FermionSystem> solve_system(std::size_t n, std::span<const ProjectiveReal> fixed,
                                        const SolveOptions& options = {});

}  // namespace halfplane
