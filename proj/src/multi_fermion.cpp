#include "halfplane/multi_fermion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "halfplane/error.hpp"

namespace halfplane {

namespace {

using std::numbers::pi;

struct Summands {
  double log = 0.0;
  double x2 = 0.0;
  double dipole = 0.0;
};

Summands gamma_summands(const ProjectiveReal& gamma) {
  if (gamma.is_infinite()) return {1.0, 0.0, 0.0};
  const double g = gamma.value();
  if (std::abs(g) > 1.0) {
    const double r = 1.0 / (g * g);
    const double q = 1.0 / (g - 1.0 / g);  // g/(g^2-1)
    return {(1.0 + r) / (1.0 - r), std::abs(q), q / pi * std::log(std::abs((1.0 + g) / (1.0 - g)))};
  }
  const double d = g * g - 1.0;
  return {(g * g + 1.0) / d, std::abs(g) / d, g / (pi * d) * std::log(std::abs((1.0 + g) / (1.0 - g)))};
}

// Same summands in rapidity variables; smooth except |sinh| at theta = 0.
Summands rapidity_summands(int eta, double theta) {
  return {-eta * std::cosh(theta), -eta * std::abs(std::sinh(theta)) / 2.0,
          -eta * theta * std::sinh(theta) / (2.0 * pi)};
}

Summands rapidity_derivatives(int eta, double theta) {
  const double sign = theta > 0.0 ? 1.0 : (theta < 0.0 ? -1.0 : 0.0);
  return {-eta * std::sinh(theta), -eta * sign * std::cosh(theta) / 2.0,
          -eta * (std::sinh(theta) + theta * std::cosh(theta)) / (2.0 * pi)};
}

bool near_zero(double value, double scale, double tol) {
  return std::abs(value) <= tol * std::max(1.0, scale);
}

// Total order on the projective line with Infinity last.
bool projective_less(const ProjectiveReal& a, const ProjectiveReal& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

bool projective_close(const ProjectiveReal& a, const ProjectiveReal& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol * std::max(1.0, std::abs(b.value()));
}

}  // namespace

FermionSystem::FermionSystem(std::vector<ProjectiveReal> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty()) throw Error(Errc::invalid_argument, "FermionSystem: no species");
  for (const auto& g : gammas_) {
    if (g.equals(1.0) || g.equals(-1.0)) {
      throw Error(Errc::cpt_invariant_boundary, "FermionSystem: gamma = +-1 is excluded");
    }
  }
}

std::vector<BoundaryCharacter> FermionSystem::characters() const {
  std::vector<BoundaryCharacter> out;
  out.reserve(gammas_.size());
  for (const auto& g : gammas_) out.push_back(boundary_character(g));
  return out;
}

bool FermionSystem::has_flat_edge_species() const noexcept {
  return std::any_of(gammas_.begin(), gammas_.end(),
                     [](const ProjectiveReal& g) { return g.is_infinite() || g.equals(0.0); });
}

FermionSystem FermionSystem::merged(const FermionSystem& other) const {
  std::vector<ProjectiveReal> all = gammas_;
  all.insert(all.end(), other.gammas_.begin(), other.gammas_.end());
  return FermionSystem(std::move(all));
}

bool ResidualReport::divergences_cancel(double tol) const noexcept {
  return near_zero(r_log, scale_log, tol) && near_zero(r_x2, scale_x2, tol);
}

bool ResidualReport::dipole_cancels(double tol) const noexcept {
  return near_zero(r_dipole, scale_dipole, tol);
}

std::optional<bool> ResidualReport::rapidity_form_cancels(double tol) const noexcept {
  if (!r_plus || !r_minus) return std::nullopt;
  return near_zero(*r_plus, scale_rapidity, tol) && near_zero(*r_minus, scale_rapidity, tol);
}

ResidualReport residuals(const FermionSystem& sys) {
  ResidualReport r;
  for (const auto& g : sys.gammas()) {
    const Summands s = gamma_summands(g);
    r.r_log += s.log;
    r.r_x2 += s.x2;
    r.r_dipole += s.dipole;
    r.scale_log += std::abs(s.log);
    r.scale_x2 += std::abs(s.x2);
    r.scale_dipole += std::abs(s.dipole);
  }
  r.flat_edge_species = sys.has_flat_edge_species();

  double plus = 0.0;
  double minus = 0.0;
  for (const BoundaryCharacter& c : sys.characters()) {
    // gamma = +-1 is excluded, so eta and theta exist
    if (!c.epsilon) return r;
    const double t = *c.epsilon * *c.theta;
    plus += *c.eta * std::exp(t);
    minus += *c.eta * std::exp(-t);
    r.scale_rapidity += std::exp(t) + std::exp(-t);
  }
  r.r_plus = plus;
  r.r_minus = minus;
  return r;
}

RapidityEquivalence rapidity_equivalence(const FermionSystem& sys, double tol) {
  const ResidualReport r = residuals(sys);
  if (!r.r_plus) {
    throw Error(Errc::undefined_epsilon, "rapidity form needs every edge velocity nonzero");
  }
  RapidityEquivalence eq;
  eq.gamma_form_zero = r.divergences_cancel(tol);
  eq.rapidity_form_zero = *r.rapidity_form_cancels(tol);
  const double scale = std::max(1.0, r.scale_rapidity);
  eq.identity_defect = std::max(std::abs(*r.r_plus + r.r_log + 2.0 * r.r_x2),
                                std::abs(*r.r_minus + r.r_log - 2.0 * r.r_x2)) /
                       scale;
  return eq;
}

bool rapidity_equivalence_check(const FermionSystem& sys, double tol) {
  const RapidityEquivalence eq = rapidity_equivalence(sys, tol);
  return eq.consistent() && eq.identity_defect <= tol;
}

FermionSystem conjugate_pair(const ProjectiveReal& gamma) {
  if (gamma.is_infinite() || gamma.equals(0.0) || gamma.equals(1.0) || gamma.equals(-1.0)) {
    throw Error(Errc::degenerate_pair, "conjugate_pair: gamma must avoid 0, +-1 and Infinity");
  }
  return FermionSystem({gamma, gamma.inv().neg()});
}

std::vector<BoostScanEntry> boost_invariance_scan(const FermionSystem& sys,
                                                  std::span<const double> chis) {
  if (!residuals(sys).divergences_cancel()) {
    throw Error(Errc::invalid_argument, "boost_invariance_scan: divergences do not cancel");
  }
  const std::vector<BoundaryCharacter> before = sys.characters();
  std::vector<BoostScanEntry> out;
  out.reserve(chis.size());
  for (double chi : chis) {
    BoostScanEntry e;
    e.chi = chi;
    for (const auto& g : sys.gammas()) e.gammas.push_back(boost(g, chi));
    const FermionSystem boosted(e.gammas);
    const std::vector<BoundaryCharacter> after = boosted.characters();
    e.signs_preserved = true;
    for (std::size_t i = 0; i < after.size(); ++i) {
      if (!after[i].epsilon || after[i].epsilon != before[i].epsilon) e.signs_preserved = false;
    }
    e.report = residuals(boosted);
    e.cancels = e.report.rapidity_form_cancels().value_or(e.report.divergences_cancel());
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct Targets {
  bool log;
  bool x2;
  bool dipole;
  int count() const { return int(log) + int(x2) + int(dipole); }
};

Eigen::VectorXd target_vector(const Summands& s, const Targets& t) {
  Eigen::VectorXd v(t.count());
  int i = 0;
  if (t.log) v(i++) = s.log;
  if (t.x2) v(i++) = s.x2;
  if (t.dipole) v(i++) = s.dipole;
  return v;
}

struct NewtonResult {
  Eigen::VectorXd theta;
  bool converged = false;
};

NewtonResult gauss_newton(const std::vector<int>& eta, Eigen::VectorXd theta, const Summands& fixed,
                          const Targets& targets, const SolveOptions& opt) {
  const auto n = static_cast<Eigen::Index>(eta.size());
  const auto residual = [&](const Eigen::VectorXd& th) {
    Summands total = fixed;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Summands s = rapidity_summands(eta[i], th(i));
      total.log += s.log;
      total.x2 += s.x2;
      total.dipole += s.dipole;
    }
    return target_vector(total, targets);
  };

  Eigen::VectorXd f = residual(theta);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (f.lpNorm<Eigen::Infinity>() <= opt.tolerance) return {theta, true};
    Eigen::MatrixXd jac(targets.count(), n);
    for (Eigen::Index i = 0; i < n; ++i) jac.col(i) = target_vector(rapidity_derivatives(eta[i], theta(i)), targets);
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite()) break;

    double scale = 1.0;
    bool improved = false;
    while (scale > 1e-12) {
      const Eigen::VectorXd trial = theta + scale * step;
      const Eigen::VectorXd ft = residual(trial);
      if (ft.allFinite() && ft.norm() < f.norm()) {
        theta = trial;
        f = ft;
        improved = true;
        break;
      }
      scale *= opt.damping;
    }
    if (!improved) break;
  }
  return {theta, f.lpNorm<Eigen::Infinity>() <= opt.tolerance};
}

}  // namespace

std::vector<FermionSystem> solve_system(std::size_t n, std::span<const ProjectiveReal> fixed,
                                        const SolveOptions& options) {
  if (n == 0 || fixed.size() >= n) {
    throw Error(Errc::invalid_argument, "solve_system: need 0 <= #fixed < n");
  }
  const std::size_t free = n - fixed.size();
  if (free > options.max_free) {
    throw Error(Errc::invalid_argument, "solve_system: too many free species for the multistart");
  }
  const Targets targets{(options.targets & target_log) != 0, (options.targets & target_x2) != 0,
                        (options.targets & target_dipole) != 0};
  if (targets.count() == 0) throw Error(Errc::invalid_argument, "solve_system: no target residual");
  if (options.theta_starts.empty()) throw Error(Errc::invalid_argument, "solve_system: no starts");

  Summands fixed_sum;
  for (const auto& g : fixed) {
    if (g.equals(1.0) || g.equals(-1.0)) {
      throw Error(Errc::cpt_invariant_boundary, "solve_system: gamma = +-1 is excluded");
    }
    const Summands s = gamma_summands(g);
    fixed_sum.log += s.log;
    fixed_sum.x2 += s.x2;
    fixed_sum.dipole += s.dipole;
  }

  const std::size_t starts = options.theta_starts.size();
  std::size_t start_count = 1;
  for (std::size_t i = 0; i < free; ++i) start_count *= starts;

  std::vector<std::vector<ProjectiveReal>> found;
  for (std::size_t signs = 0; signs < (std::size_t{1} << free); ++signs) {
    std::vector<int> eta(free);
    for (std::size_t i = 0; i < free; ++i) eta[i] = (signs >> i) & 1u ? -1 : 1;
    for (std::size_t s = 0; s < start_count; ++s) {
      Eigen::VectorXd theta(static_cast<Eigen::Index>(free));
      std::size_t rest = s;
      for (std::size_t i = 0; i < free; ++i) {
        theta(static_cast<Eigen::Index>(i)) = options.theta_starts[rest % starts];
        rest /= starts;
      }
      NewtonResult result = gauss_newton(eta, theta, fixed_sum, targets, options);
      if (!result.converged) continue;

      std::vector<ProjectiveReal> gammas(fixed.begin(), fixed.end());
      for (std::size_t i = 0; i < free; ++i) {
        double t = result.theta(static_cast<Eigen::Index>(i));
        // A double root at theta = 0 (gamma = 0 or Infinity) only resolves to
        // sqrt(tolerance).
        if (std::abs(t) < std::sqrt(options.tolerance)) t = 0.0;
        gammas.push_back(gamma_from_rapidity(eta[i], t));
      }
      std::sort(gammas.begin(), gammas.end(), projective_less);
      if (std::any_of(gammas.begin(), gammas.end(),
                      [](const ProjectiveReal& g) { return g.equals(1.0) || g.equals(-1.0); })) {
        continue;
      }
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const auto& other) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!projective_close(gammas[i], other[i], options.dedup_tolerance)) return false;
        }
        return true;
      });
      if (!duplicate) found.push_back(std::move(gammas));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), projective_less);
  });
  std::vector<FermionSystem> out;
  out.reserve(found.size());
  for (auto& g : found) out.emplace_back(std::move(g));
  return out;
}

}  // namespace halfplane
