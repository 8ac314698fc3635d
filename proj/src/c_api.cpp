#include "halfplane/halfplane.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "halfplane/current_density.hpp"
#include "halfplane/error.hpp"
#include "halfplane/multi_fermion.hpp"
#include "halfplane/params.hpp"
#include "halfplane/quadrature_oracle.hpp"
#include "halfplane/spectrum.hpp"

struct hp_model {
  halfplane::ModelParams params;
};

struct hp_scheme {
  halfplane::RegularizationScheme scheme;
};

struct hp_decomposition {
  halfplane::CurrentDecomposition decomposition;
};

struct hp_system {
  halfplane::FermionSystem system;
};

struct hp_solution_set {
  std::size_t n = 0;
  std::vector<halfplane::FermionSystem> solutions;
};

namespace {

using namespace halfplane;

thread_local std::string last_error;

hp_status to_status(Errc code) {
  switch (code) {
    case Errc::ok: return HP_OK;
    case Errc::invalid_argument: return HP_INVALID_ARGUMENT;
    case Errc::boost_undefined: return HP_BOOST_UNDEFINED;
    case Errc::invalid_momentum: return HP_INVALID_MOMENTUM;
    case Errc::cpt_invariant_boundary: return HP_CPT_INVARIANT_BOUNDARY;
    case Errc::invalid_deficiency: return HP_INVALID_DEFICIENCY;
    case Errc::grid_too_small: return HP_GRID_TOO_SMALL;
    case Errc::out_of_domain: return HP_OUT_OF_DOMAIN;
    case Errc::no_edge_state: return HP_NO_EDGE_STATE;
    case Errc::non_convergent: return HP_NON_CONVERGENT;
    case Errc::degenerate_pair: return HP_DEGENERATE_PAIR;
    case Errc::undefined_epsilon: return HP_UNDEFINED_EPSILON;
  }
  return HP_INTERNAL_ERROR;
}

hp_status fail(hp_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
hp_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HP_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HP_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(HP_INTERNAL_ERROR, "unknown error");
  }
}

#define HP_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(HP_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

ProjectiveReal from_c(hp_gamma g) {
  return g.is_infinite ? ProjectiveReal::infinity() : ProjectiveReal(g.value);
}

hp_gamma to_c(const ProjectiveReal& g) {
  if (g.is_infinite()) return {1, 0.0};
  return {0, g.value()};
}

hp_residuals to_c(const ResidualReport& r) {
  hp_residuals out{};
  out.r_log = r.r_log;
  out.r_x2 = r.r_x2;
  out.r_dipole = r.r_dipole;
  out.has_rapidity = r.r_plus.has_value() ? 1 : 0;
  out.r_plus = r.r_plus.value_or(0.0);
  out.r_minus = r.r_minus.value_or(0.0);
  out.scale_log = r.scale_log;
  out.scale_x2 = r.scale_x2;
  out.scale_dipole = r.scale_dipole;
  out.scale_rapidity = r.scale_rapidity;
  out.flat_edge_species = r.flat_edge_species ? 1 : 0;
  out.divergences_cancel = r.divergences_cancel() ? 1 : 0;
  out.dipole_cancels = r.dipole_cancels() ? 1 : 0;
  return out;
}

void to_c(std::complex<double> z, double (&out)[2]) {
  out[0] = z.real();
  out[1] = z.imag();
}

const RegularizationScheme& scheme_or_default(const hp_scheme* scheme) {
  static const RegularizationScheme defaults;
  return scheme ? scheme->scheme : defaults;
}

// Applies a change only if the resulting scheme validates.
template <class F>
hp_status update_scheme(hp_scheme* scheme, F&& change) {
  HP_REQUIRE(scheme);
  return guarded([&] {
    RegularizationScheme next = scheme->scheme;
    change(next);
    next.validate();
    scheme->scheme = std::move(next);
  });
}

}  // namespace

extern "C" {

const char* hp_status_string(hp_status status) {
  switch (status) {
    case HP_OK: return "ok";
    case HP_INTERNAL_ERROR: return "internal_error";
    default: break;
  }
  if (status > HP_OK && status < HP_INTERNAL_ERROR) {
    return to_string(static_cast<Errc>(static_cast<int>(status)));
  }
  return "unknown_status";
}

const char* hp_last_error(void) { return last_error.c_str(); }

hp_status hp_gamma_parse(const char* text, hp_gamma* out) {
  HP_REQUIRE(text && out);
  return guarded([&] { *out = to_c(ProjectiveReal::parse(text)); });
}

hp_status hp_gamma_format(hp_gamma gamma, char* buffer, size_t size) {
  HP_REQUIRE(buffer && size > 0);
  return guarded([&] {
    const std::string s = from_c(gamma).to_string();
    if (s.size() + 1 > size) throw Error(Errc::invalid_argument, "hp_gamma_format: buffer too small");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
  });
}

hp_status hp_boundary_character(hp_gamma gamma, hp_character* out) {
  HP_REQUIRE(out);
  return guarded([&] {
    const BoundaryCharacter c = boundary_character(from_c(gamma));
    *out = hp_character{c.v_edge,
                        c.eta.has_value(),
                        c.eta.value_or(0),
                        c.theta.has_value(),
                        c.theta.value_or(0.0),
                        c.epsilon.has_value(),
                        c.epsilon.value_or(0)};
  });
}

hp_status hp_gamma_from_rapidity(int eta, double theta, hp_gamma* out) {
  HP_REQUIRE(out);
  return guarded([&] { *out = to_c(gamma_from_rapidity(eta, theta)); });
}

hp_status hp_boost(hp_gamma gamma, double chi, hp_gamma* out) {
  HP_REQUIRE(out);
  return guarded([&] { *out = to_c(boost(from_c(gamma), chi)); });
}

hp_status hp_model_create(double m, hp_gamma gamma, hp_model** out) {
  HP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (!std::isfinite(m)) throw Error(Errc::invalid_argument, "mass must be finite");
    *out = new hp_model{ModelParams{m, from_c(gamma)}};
  });
}

void hp_model_destroy(hp_model* model) { delete model; }

hp_status hp_model_get(const hp_model* model, double* m, hp_gamma* gamma) {
  HP_REQUIRE(model && m && gamma);
  *m = model->params.m;
  *gamma = to_c(model->params.gamma);
  return HP_OK;
}

hp_status hp_model_dual(const hp_model* model, hp_dual_kind kind, hp_model** out) {
  HP_REQUIRE(model && out);
  *out = nullptr;
  return guarded([&] {
    ModelParams d;
    switch (kind) {
      case HP_DUAL_REFLECTION: d = reflection_dual(model->params); break;
      case HP_DUAL_CPT: d = cpt_dual(model->params); break;
      case HP_DUAL_HALFPLANE: d = halfplane_dual(model->params); break;
      default: throw Error(Errc::invalid_argument, "hp_model_dual: unknown duality");
    }
    *out = new hp_model{d};
  });
}

hp_status hp_model_is_cpt_invariant(const hp_model* model, int* out) {
  HP_REQUIRE(model && out);
  *out = model->params.is_cpt_invariant_bc() ? 1 : 0;
  return HP_OK;
}

hp_status hp_edge_mode(const hp_model* model, double k, int* exists, double* energy,
                       double* lambda) {
  HP_REQUIRE(model && exists && energy && lambda);
  return guarded([&] {
    const ModelParams& p = model->params;
    const std::optional<EdgeMode> mode = edge_mode_at_k(p, k);
    if (mode) {
      *exists = 1;
      *energy = mode->E;
      *lambda = mode->lambda;
      return;
    }
    // Continue the linear dispersion past the existence threshold.
    double v = 0.0;
    double c = -1.0;
    if (p.gamma.is_finite()) {
      const double g = p.gamma.value();
      v = 2.0 * g / (1.0 + g * g);
      c = (1.0 - g * g) / (1.0 + g * g);
    }
    *exists = 0;
    *energy = v * k + c * p.m;
    *lambda = -c * k + v * p.m;
  });
}

hp_status hp_edge_conductivity(const hp_model* model, int* sigma) {
  HP_REQUIRE(model && sigma);
  *sigma = edge_conductivity(model->params);
  return HP_OK;
}

hp_status hp_gap_crossing(const hp_model* model, int* crosses) {
  HP_REQUIRE(model && crosses);
  *crosses = gap_crossing(model->params) ? 1 : 0;
  return HP_OK;
}

hp_status hp_singular_part_of(const hp_model* model, hp_singular_part* out) {
  HP_REQUIRE(model && out);
  return guarded([&] {
    const SingularPart s = singular_part(model->params);
    *out = hp_singular_part{s.c_log_delta_prime, s.c_delta_prime, s.c_inv_x2};
  });
}

hp_status hp_closed_form_bulk(const hp_model* model, double x, double lambda_cutoff,
                              hp_bulk_closed_form* out) {
  HP_REQUIRE(model && out);
  return guarded([&] {
    const BulkClosedForm b = closed_form_bulk_j2(model->params, x, lambda_cutoff);
    *out = hp_bulk_closed_form{b.smooth, b.delta_prime_log, b.delta_prime_dipole};
  });
}

hp_status hp_closed_form_edge(const hp_model* model, double x, double* out) {
  HP_REQUIRE(model && out);
  return guarded([&] { *out = closed_form_edge_j2(model->params, x); });
}

hp_status hp_decomposition_create(const hp_model* model, hp_decomposition** out) {
  HP_REQUIRE(model && out);
  *out = nullptr;
  return guarded([&] { *out = new hp_decomposition{total_decomposition(model->params)}; });
}

void hp_decomposition_destroy(hp_decomposition* decomposition) { delete decomposition; }

hp_status hp_decomposition_singular(const hp_decomposition* decomposition, hp_singular_part* out) {
  HP_REQUIRE(decomposition && out);
  const SingularPart& s = decomposition->decomposition.singular();
  *out = hp_singular_part{s.c_log_delta_prime, s.c_delta_prime, s.c_inv_x2};
  return HP_OK;
}

hp_status hp_decomposition_profile(const hp_decomposition* decomposition, const double* xs,
                                   size_t count, hp_profile_row* rows) {
  HP_REQUIRE(decomposition && (count == 0 || (xs && rows)));
  return guarded([&] {
    const std::vector<ProfileRow> r = profile(decomposition->decomposition, {xs, count});
    for (std::size_t i = 0; i < r.size(); ++i) {
      rows[i] = hp_profile_row{r[i].x,       r[i].j2_bulk_smooth, r[i].j2_edge_smooth,
                               r[i].j2_total, r[i].j2_regular,     r[i].c_x2_over_x2};
    }
  });
}

hp_status hp_x_grid(double x_min, double x_max, size_t points, int geometric, double* out) {
  HP_REQUIRE(out);
  return guarded([&] {
    const std::vector<double> g = x_grid(x_min, x_max, points, geometric != 0);
    std::copy(g.begin(), g.end(), out);
  });
}

hp_status hp_scheme_create(hp_scheme** out) {
  HP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new hp_scheme{}; });
}

void hp_scheme_destroy(hp_scheme* scheme) { delete scheme; }

hp_status hp_scheme_set_cutoff(hp_scheme* scheme, double lambda_cutoff) {
  return update_scheme(scheme, [&](RegularizationScheme& s) { s.lambda_cutoff = lambda_cutoff; });
}

hp_status hp_scheme_set_l_max(hp_scheme* scheme, double l_max) {
  return update_scheme(scheme, [&](RegularizationScheme& s) { s.l_max = l_max; });
}

hp_status hp_scheme_set_eps(hp_scheme* scheme, const double* eps, size_t count) {
  HP_REQUIRE(eps || count == 0);
  return update_scheme(scheme, [&](RegularizationScheme& s) {
    s.eps_schedule.assign(eps, eps + count);
    if (s.extrapolation_order >= static_cast<int>(count)) s.extrapolation_order = -1;
  });
}

hp_status hp_scheme_set_tolerances(hp_scheme* scheme, double quad_rel_tol, double abel_rel_tol) {
  return update_scheme(scheme, [&](RegularizationScheme& s) {
    s.quad_rel_tol = quad_rel_tol;
    s.abel_rel_tol = abel_rel_tol;
  });
}

hp_status hp_oracle_edge(const hp_model* model, double x, const hp_scheme* scheme,
                         hp_oracle_value* out) {
  HP_REQUIRE(model && out);
  return guarded([&] {
    const OracleValue v = oracle_edge_current(model->params, x, scheme_or_default(scheme));
    *out = hp_oracle_value{v.value, v.error};
  });
}

hp_status hp_oracle_bulk(const hp_model* model, double x, const hp_scheme* scheme,
                         hp_oracle_value* out) {
  HP_REQUIRE(model && out);
  return guarded([&] {
    const OracleValue v = oracle_bulk_current(model->params, x, scheme_or_default(scheme));
    *out = hp_oracle_value{v.value, v.error};
  });
}

hp_status hp_oracle_branch_cut(double m, double x, const hp_scheme* scheme, hp_branch_cut* out) {
  HP_REQUIRE(out);
  return guarded([&] {
    const BranchCutReport r = oracle_branch_cut_integral(m, x, scheme_or_default(scheme));
    *out = hp_branch_cut{r.abel_value, r.abel_error, r.contour_value, r.elementary, r.rel_diff};
  });
}

hp_status hp_oracle_p3_p4(const hp_model* model, double l, const hp_scheme* scheme,
                          hp_cancellation* out) {
  HP_REQUIRE(model && out);
  return guarded([&] {
    const CancellationReport r = oracle_p3_p4_cancellations(model->params, l, scheme_or_default(scheme));
    hp_cancellation c{};
    c.cutoff = r.cutoff;
    c.p1_p2_integral = r.p1_p2_integral;
    to_c(r.p3_integral, c.p3_integral);
    to_c(r.p3_expected, c.p3_expected);
    to_c(r.log_numeric, c.log_numeric);
    to_c(r.log_exact, c.log_exact);
    to_c(r.log_asymptotic, c.log_asymptotic);
    to_c(r.log_decomposed, c.log_decomposed);
    c.asymptotic_bound = r.asymptotic_bound;
    c.symmetric_ok = r.symmetric_ok;
    c.p3_ok = r.p3_ok;
    c.log_ok = r.log_ok;
    c.branch_ok = r.branch_ok;
    *out = c;
  });
}

hp_status hp_oracle_delta_prime_kernel(double x, const hp_scheme* scheme, hp_oracle_value* out) {
  HP_REQUIRE(out);
  return guarded([&] {
    const OracleValue v = oracle_delta_prime_kernel(x, scheme_or_default(scheme));
    *out = hp_oracle_value{v.value, v.error};
  });
}

hp_status hp_system_create(const hp_gamma* gammas, size_t count, hp_system** out) {
  HP_REQUIRE(out && (gammas || count == 0));
  *out = nullptr;
  return guarded([&] {
    std::vector<ProjectiveReal> g;
    g.reserve(count);
    for (std::size_t i = 0; i < count; ++i) g.push_back(from_c(gammas[i]));
    *out = new hp_system{FermionSystem(std::move(g))};
  });
}

void hp_system_destroy(hp_system* system) { delete system; }

size_t hp_system_size(const hp_system* system) { return system ? system->system.size() : 0; }

hp_status hp_system_gammas(const hp_system* system, hp_gamma* gammas) {
  HP_REQUIRE(system && gammas);
  const auto g = system->system.gammas();
  for (std::size_t i = 0; i < g.size(); ++i) gammas[i] = to_c(g[i]);
  return HP_OK;
}

hp_status hp_system_residuals(const hp_system* system, hp_residuals* out) {
  HP_REQUIRE(system && out);
  return guarded([&] { *out = to_c(residuals(system->system)); });
}

hp_status hp_system_rapidity_check(const hp_system* system, double tol, hp_rapidity_check* out) {
  HP_REQUIRE(system && out);
  return guarded([&] {
    const RapidityEquivalence r = rapidity_equivalence(system->system, tol);
    *out = hp_rapidity_check{r.gamma_form_zero, r.rapidity_form_zero, r.identity_defect,
                             r.consistent()};
  });
}

hp_status hp_conjugate_pair(hp_gamma gamma, hp_system** out) {
  HP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new hp_system{conjugate_pair(from_c(gamma))}; });
}

hp_status hp_system_boost_scan(const hp_system* system, const double* chis, size_t count,
                               hp_boost_entry* entries) {
  HP_REQUIRE(system && (count == 0 || (chis && entries)));
  return guarded([&] {
    const std::vector<BoostScanEntry> scan = boost_invariance_scan(system->system, {chis, count});
    for (std::size_t i = 0; i < scan.size(); ++i) {
      entries[i] = hp_boost_entry{scan[i].chi, scan[i].signs_preserved, scan[i].cancels,
                                  to_c(scan[i].report)};
    }
  });
}

hp_status hp_solve_system(size_t n, const hp_gamma* fixed, size_t fixed_count, unsigned targets,
                          hp_solution_set** out) {
  HP_REQUIRE(out && (fixed || fixed_count == 0));
  *out = nullptr;
  return guarded([&] {
    std::vector<ProjectiveReal> f;
    for (std::size_t i = 0; i < fixed_count; ++i) f.push_back(from_c(fixed[i]));
    SolveOptions options;
    if (targets != 0) options.targets = targets;
    auto set = std::make_unique<hp_solution_set>();
    set->n = n;
    set->solutions = solve_system(n, f, options);
    *out = set.release();
  });
}

void hp_solution_set_destroy(hp_solution_set* set) { delete set; }

size_t hp_solution_set_count(const hp_solution_set* set) {
  return set ? set->solutions.size() : 0;
}

hp_status hp_solution_set_get(const hp_solution_set* set, size_t index, hp_gamma* gammas) {
  HP_REQUIRE(set && gammas);
  if (index >= set->solutions.size()) return fail(HP_INVALID_ARGUMENT, "solution index out of range");
  const auto g = set->solutions[index].gammas();
  for (std::size_t i = 0; i < g.size(); ++i) gammas[i] = to_c(g[i]);
  return HP_OK;
}

}  // extern "C"
