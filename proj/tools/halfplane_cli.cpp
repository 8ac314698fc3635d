// halfplane: command-line front end for the half-plane Dirac fermion library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfplane/halfplane.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRejected = 3;

constexpr const char* kUnits =
    "Natural units: hbar = c = 1. Lengths and momenta are in units fixed by the mass m;\n"
    "j^2 is the vacuum current parallel to the boundary, conductivities are in e^2/h.";

// Library failure carrying the status that produced it.
struct StatusError : std::runtime_error {
  hp_status status;
  StatusError(hp_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(hp_status status, const char* what) {
  if (status != HP_OK) {
    throw StatusError(status, std::string(what) + ": " + hp_status_string(status) + ": " +
                                  hp_last_error());
  }
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Model = std::unique_ptr<hp_model, Deleter<hp_model, hp_model_destroy>>;
using Scheme = std::unique_ptr<hp_scheme, Deleter<hp_scheme, hp_scheme_destroy>>;
using Decomposition =
    std::unique_ptr<hp_decomposition, Deleter<hp_decomposition, hp_decomposition_destroy>>;
using System = std::unique_ptr<hp_system, Deleter<hp_system, hp_system_destroy>>;
using SolutionSet =
    std::unique_ptr<hp_solution_set, Deleter<hp_solution_set, hp_solution_set_destroy>>;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string gamma_text(hp_gamma g) {
  char buf[40];
  check(hp_gamma_format(g, buf, sizeof buf), "format gamma");
  return buf;
}

json gamma_json(hp_gamma g) {
  if (g.is_infinite) return "inf";
  return g.value;
}

json optional_json(int has, double value) { return has ? json(value) : json(nullptr); }

hp_gamma parse_gamma(const std::string& text) {
  hp_gamma g;
  if (hp_gamma_parse(text.c_str(), &g) != HP_OK) {
    throw StatusError(HP_INVALID_ARGUMENT, "cannot parse gamma '" + text + "'");
  }
  return g;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<hp_gamma> parse_gamma_list(const std::string& text) {
  std::vector<hp_gamma> out;
  for (const auto& s : split(text)) out.push_back(parse_gamma(s));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw StatusError(HP_INVALID_ARGUMENT, "cannot parse number '" + s + "'");
    out.push_back(v);
  }
  return out;
}

bool is_unit(hp_gamma g) { return !g.is_infinite && (g.value == 1.0 || g.value == -1.0); }

Model make_model(double m, hp_gamma g) {
  hp_model* raw = nullptr;
  check(hp_model_create(m, g, &raw), "model");
  return Model(raw);
}

// Writes text to path through a temporary file and rename, or to stdout when
// path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

struct CommonModel {
  double m = 1.0;
  std::string gamma = "2";
};

void add_model_options(CLI::App* cmd, CommonModel& model) {
  cmd->add_option("--m", model.m, "Mass m")->capture_default_str();
  cmd->add_option("--gamma", model.gamma, "Boundary parameter gamma (number or inf)")
      ->capture_default_str();
}

// ---- spectrum ----------------------------------------------------------

struct SpectrumArgs {
  CommonModel model;
  double k_min = -2.0;
  double k_max = 2.0;
  int points = 41;
  std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
  if (a.points < 2 || !(a.k_min < a.k_max)) {
    throw StatusError(HP_INVALID_ARGUMENT, "spectrum: need --points >= 2 and --k-min < --k-max");
  }
  const hp_gamma g = parse_gamma(a.model.gamma);
  const Model model = make_model(a.model.m, g);
  hp_character c;
  check(hp_boundary_character(g, &c), "boundary character");
  int sigma = 0;
  check(hp_edge_conductivity(model.get(), &sigma), "edge conductivity");

  std::string text;
  text += "# m=" + num(a.model.m) + "\n";
  text += "# gamma=" + gamma_text(g) + "\n";
  text += "# v_edge=" + num(c.v_edge) + "\n";
  text += "# eta=" + (c.has_eta ? std::to_string(c.eta) : std::string("undefined")) + "\n";
  text += "# theta=" + (c.has_theta ? num(c.theta) : std::string("undefined")) + "\n";
  text += "# sigma_edge=" + std::string(sigma > 0 ? "+" : "") + std::to_string(sigma) + "\n";
  text += "k,E_edge,lambda,exists\n";
  for (int i = 0; i < a.points; ++i) {
    const double k = i + 1 == a.points
                         ? a.k_max
                         : a.k_min + (a.k_max - a.k_min) * static_cast<double>(i) / (a.points - 1);
    int exists = 0;
    double e = 0.0;
    double lambda = 0.0;
    check(hp_edge_mode(model.get(), k, &exists, &e, &lambda), "edge mode");
    text += num(k) + "," + num(e) + "," + num(lambda) + "," + (exists ? "true" : "false") + "\n";
  }
  emit(a.out, text);
  return kExitOk;
}

// ---- profile -----------------------------------------------------------

struct ProfileArgs {
  CommonModel model;
  double x_min = 0.1;
  double x_max = 5.0;
  int points = 50;
  bool linear = false;
  double lambda_cutoff = 1e4;
  std::string out;
  std::string sidecar;
};

int run_profile(const ProfileArgs& a) {
  if (a.points < 2) throw StatusError(HP_INVALID_ARGUMENT, "profile: need --points >= 2");
  if (!(a.lambda_cutoff > 1.0)) throw StatusError(HP_INVALID_ARGUMENT, "profile: need --lambda > 1");
  const hp_gamma g = parse_gamma(a.model.gamma);
  const Model model = make_model(a.model.m, g);
  hp_decomposition* raw = nullptr;
  check(hp_decomposition_create(model.get(), &raw), "decomposition");
  const Decomposition decomposition(raw);

  std::vector<double> xs(static_cast<std::size_t>(a.points));
  check(hp_x_grid(a.x_min, a.x_max, xs.size(), a.linear ? 0 : 1, xs.data()), "x grid");
  std::vector<hp_profile_row> rows(xs.size());
  check(hp_decomposition_profile(decomposition.get(), xs.data(), xs.size(), rows.data()), "profile");
  hp_singular_part s;
  check(hp_decomposition_singular(decomposition.get(), &s), "singular part");

  std::string csv = "x,j2_bulk_smooth,j2_edge_smooth,j2_total,j2_regular,c_x2_over_x2\n";
  for (const auto& r : rows) {
    csv += num(r.x) + "," + num(r.j2_bulk_smooth) + "," + num(r.j2_edge_smooth) + "," +
           num(r.j2_total) + "," + num(r.j2_regular) + "," + num(r.c_x2_over_x2) + "\n";
  }

  json side;
  side["m"] = a.model.m;
  side["gamma"] = gamma_json(g);
  side["lambda_cutoff"] = a.lambda_cutoff;
  side["singular_part"] = {{"c_log_delta_prime", s.c_log_delta_prime},
                           {"c_delta_prime", s.c_delta_prime},
                           {"c_inv_x2", s.c_inv_x2}};
  side["delta_prime_coefficient"] = s.c_log_delta_prime * std::log(a.lambda_cutoff) + s.c_delta_prime;
  side["grid"] = {{"x_min", a.x_min}, {"x_max", a.x_max}, {"points", a.points},
                  {"spacing", a.linear ? "linear" : "geometric"}};
  side["columns"] = {"x", "j2_bulk_smooth", "j2_edge_smooth", "j2_total", "j2_regular",
                     "c_x2_over_x2"};

  std::string sidecar = a.sidecar;
  if (sidecar.empty() && !a.out.empty()) sidecar = a.out + ".json";
  emit(a.out, csv);
  if (!sidecar.empty()) emit(sidecar, side.dump(2) + "\n");
  return kExitOk;
}

// ---- oracle ------------------------------------------------------------

struct OracleArgs {
  CommonModel model;
  std::string what = "edge";
  double x = 1.0;
  double l = 1.0;
  std::optional<double> v_cutoff;
  std::optional<double> l_max;
  std::string eps;
  std::optional<double> tol;
  std::string out;
};

struct Comparison {
  std::string quantity;
  double reference = 0.0;
  double candidate = 0.0;
  double tolerance = 0.0;
  bool relative = true;
  std::string note;
};

std::string comparison_table(const std::vector<Comparison>& rows, bool& all_pass) {
  std::string text = "quantity,reference,candidate,abs_dev,rel_dev,tolerance,verdict,note\n";
  all_pass = true;
  for (const auto& r : rows) {
    const double dev = std::abs(r.candidate - r.reference);
    const double rel = r.reference != 0.0 ? dev / std::abs(r.reference) : (dev == 0.0 ? 0.0 : INFINITY);
    const bool pass = std::isfinite(r.candidate) && (r.relative ? rel <= r.tolerance : dev <= r.tolerance);
    all_pass = all_pass && pass;
    text += r.quantity + "," + num(r.reference) + "," + num(r.candidate) + "," + num(dev) + "," +
            num(rel) + "," + num(r.tolerance) + "," + (pass ? "PASS" : "FAIL") + "," + r.note + "\n";
  }
  return text;
}

Scheme make_scheme(const OracleArgs& a) {
  hp_scheme* raw = nullptr;
  check(hp_scheme_create(&raw), "scheme");
  Scheme scheme(raw);
  if (a.v_cutoff) check(hp_scheme_set_cutoff(scheme.get(), *a.v_cutoff), "--v-cutoff");
  if (a.l_max) check(hp_scheme_set_l_max(scheme.get(), *a.l_max), "--l-max");
  if (!a.eps.empty()) {
    const std::vector<double> eps = parse_double_list(a.eps);
    check(hp_scheme_set_eps(scheme.get(), eps.data(), eps.size()), "--eps");
  }
  return scheme;
}

std::vector<Comparison> oracle_edge(const OracleArgs& a, const hp_scheme* scheme) {
  const Model model = make_model(a.model.m, parse_gamma(a.model.gamma));
  hp_decomposition* raw = nullptr;
  check(hp_decomposition_create(model.get(), &raw), "decomposition");
  const Decomposition decomposition(raw);
  hp_profile_row row;
  check(hp_decomposition_profile(decomposition.get(), &a.x, 1, &row), "closed form");
  hp_oracle_value v;
  check(hp_oracle_edge(model.get(), a.x, scheme, &v), "edge oracle");
  return {{"j2_edge", row.j2_edge_smooth, v.value, a.tol.value_or(1e-8), true,
           "adaptive Gauss-Kronrod over occupied edge momenta"}};
}

std::vector<Comparison> oracle_bulk(const OracleArgs& a, const hp_scheme* scheme) {
  const Model model = make_model(a.model.m, parse_gamma(a.model.gamma));
  hp_decomposition* raw = nullptr;
  check(hp_decomposition_create(model.get(), &raw), "decomposition");
  const Decomposition decomposition(raw);
  hp_profile_row row;
  check(hp_decomposition_profile(decomposition.get(), &a.x, 1, &row), "closed form");

  // The pipeline runs at m >= 0; negative masses use the y-reflection dual,
  // under which j^2 changes sign.
  hp_oracle_value v;
  std::string note = "Abel-extrapolated pipeline";
  if (a.model.m < 0.0) {
    hp_model* dual = nullptr;
    check(hp_model_dual(model.get(), HP_DUAL_REFLECTION, &dual), "dual");
    const Model reflected(dual);
    check(hp_oracle_bulk(reflected.get(), a.x, scheme, &v), "bulk oracle");
    v.value = -v.value;
    note += " via reflection dual";
  } else {
    check(hp_oracle_bulk(model.get(), a.x, scheme, &v), "bulk oracle");
  }
  return {{"j2_bulk_smooth", row.j2_bulk_smooth, v.value, a.tol.value_or(1e-2), true, note}};
}

std::vector<Comparison> oracle_branch_cut(const OracleArgs& a, const hp_scheme* scheme) {
  hp_branch_cut r;
  check(hp_oracle_branch_cut(a.model.m, a.x, scheme, &r), "branch-cut oracle");
  const double tol = a.tol.value_or(1e-4);
  return {{"abel_vs_contour", r.contour_value, r.abel_value, tol, true, "real axis vs shifted contour"},
          {"elementary_vs_contour", r.contour_value, r.elementary, tol, true, "closed elementary form"}};
}

std::vector<Comparison> oracle_p3p4(const OracleArgs& a, const hp_scheme* scheme) {
  const Model model = make_model(a.model.m, parse_gamma(a.model.gamma));
  hp_cancellation c;
  check(hp_oracle_p3_p4(model.get(), a.l, scheme, &c), "P3/P4 oracle");
  const double tol = a.tol.value_or(1e-10);
  const auto modulus = [](const double (&z)[2]) { return std::hypot(z[0], z[1]); };
  const auto diff = [](const double (&z)[2], const double (&w)[2]) {
    return std::hypot(z[0] - w[0], z[1] - w[1]);
  };
  return {
      {"p1_p2_integral", 0.0, c.p1_p2_integral, tol, false, "symmetric terms integrate to zero"},
      {"p3_integral", modulus(c.p3_expected), modulus(c.p3_expected) + diff(c.p3_integral, c.p3_expected),
       tol, true, "pure log of the cutoff"},
      {"p4_log_finite_cutoff", modulus(c.log_exact), modulus(c.log_exact) + diff(c.log_numeric, c.log_exact),
       tol, true, "numeric vs exact antiderivative"},
      {"p4_log_asymptotic", 0.0, diff(c.log_numeric, c.log_asymptotic), c.asymptotic_bound, false,
       "O(1/cutoff) gap to the large-cutoff form"},
      {"p4_log_branch", modulus(c.log_asymptotic),
       modulus(c.log_asymptotic) + diff(c.log_decomposed, c.log_asymptotic), 1e-12, true,
       "real log, phase and branch term"}};
}

int run_oracle(const OracleArgs& a) {
  const Scheme scheme = make_scheme(a);
  std::vector<Comparison> rows;
  try {
    if (a.what == "edge") {
      rows = oracle_edge(a, scheme.get());
    } else if (a.what == "bulk") {
      rows = oracle_bulk(a, scheme.get());
    } else if (a.what == "branch-cut") {
      rows = oracle_branch_cut(a, scheme.get());
    } else {
      rows = oracle_p3p4(a, scheme.get());
    }
  } catch (const StatusError& e) {
    if (e.status != HP_NON_CONVERGENT) throw;
    emit(a.out, "quantity,reference,candidate,abs_dev,rel_dev,tolerance,verdict,note\n" + a.what +
                    ",nan,nan,nan,nan,nan,FAIL,non-convergent\n");
    std::cerr << "halfplane: " << e.what() << "\n";
    return kExitFail;
  }
  bool pass = false;
  const std::string table = comparison_table(rows, pass);
  emit(a.out, table);
  return pass ? kExitOk : kExitFail;
}

// ---- constraints -------------------------------------------------------

struct ConstraintArgs {
  std::string gammas;
  int solve = 0;
  std::string fix;
  std::string boost;
  std::string targets = "log,x2";
  std::string out;
};

json residual_json(const hp_residuals& r) {
  json j;
  j["r_log"] = r.r_log;
  j["r_x2"] = r.r_x2;
  j["r_dipole"] = r.r_dipole;
  j["r_plus"] = optional_json(r.has_rapidity, r.r_plus);
  j["r_minus"] = optional_json(r.has_rapidity, r.r_minus);
  j["divergences_cancel"] = r.divergences_cancel != 0;
  j["dipole_cancels"] = r.dipole_cancels != 0;
  j["flat_edge_species"] = r.flat_edge_species != 0;
  return j;
}

json system_report(const std::vector<hp_gamma>& gammas, const hp_system* system) {
  json j;
  j["gammas"] = json::array();
  for (const auto& g : gammas) j["gammas"].push_back(gamma_json(g));
  j["characters"] = json::array();
  for (const auto& g : gammas) {
    hp_character c;
    check(hp_boundary_character(g, &c), "boundary character");
    j["characters"].push_back({{"gamma", gamma_json(g)},
                               {"v_edge", c.v_edge},
                               {"eta", c.has_eta ? json(c.eta) : json(nullptr)},
                               {"theta", optional_json(c.has_theta, c.theta)},
                               {"epsilon", c.has_epsilon ? json(c.epsilon) : json(nullptr)}});
  }
  hp_residuals r;
  check(hp_system_residuals(system, &r), "residuals");
  j["residuals"] = residual_json(r);
  if (r.has_rapidity) {
    hp_rapidity_check rc;
    check(hp_system_rapidity_check(system, 1e-10, &rc), "rapidity check");
    j["rapidity_check"] = {{"gamma_form_zero", rc.gamma_form_zero != 0},
                           {"rapidity_form_zero", rc.rapidity_form_zero != 0},
                           {"identity_defect", rc.identity_defect},
                           {"consistent", rc.consistent != 0}};
  } else {
    j["rapidity_check"] = nullptr;
  }
  j["verdict"] = r.divergences_cancel ? "CANCELS" : "DIVERGENT";
  return j;
}

System make_system(const std::vector<hp_gamma>& gammas) {
  hp_system* raw = nullptr;
  check(hp_system_create(gammas.data(), gammas.size(), &raw), "system");
  return System(raw);
}

unsigned parse_targets(const std::string& text) {
  unsigned t = 0;
  for (const auto& s : split(text)) {
    if (s == "log") {
      t |= HP_TARGET_LOG;
    } else if (s == "x2") {
      t |= HP_TARGET_X2;
    } else if (s == "dipole") {
      t |= HP_TARGET_DIPOLE;
    } else {
      throw StatusError(HP_INVALID_ARGUMENT, "unknown target '" + s + "'");
    }
  }
  if (t == 0) throw StatusError(HP_INVALID_ARGUMENT, "no solve target given");
  return t;
}

int run_constraints(const ConstraintArgs& a) {
  json report;
  if (a.solve > 0) {
    const std::vector<hp_gamma> fixed = parse_gamma_list(a.fix);
    for (const auto& g : fixed) {
      if (is_unit(g)) throw StatusError(HP_CPT_INVARIANT_BOUNDARY, "gamma = +-1 is not admitted");
    }
    const unsigned targets = parse_targets(a.targets);
    hp_solution_set* raw = nullptr;
    check(hp_solve_system(static_cast<size_t>(a.solve), fixed.data(), fixed.size(), targets, &raw),
          "solve");
    const SolutionSet set(raw);
    report["n"] = a.solve;
    report["fixed"] = json::array();
    for (const auto& g : fixed) report["fixed"].push_back(gamma_json(g));
    report["targets"] = split(a.targets);
    report["solutions"] = json::array();
    for (size_t i = 0; i < hp_solution_set_count(set.get()); ++i) {
      std::vector<hp_gamma> gammas(static_cast<std::size_t>(a.solve));
      check(hp_solution_set_get(set.get(), i, gammas.data()), "solution");
      const System system = make_system(gammas);
      report["solutions"].push_back(system_report(gammas, system.get()));
    }
    report["status"] = report["solutions"].empty() ? "no_solution_found" : "ok";
  } else {
    const std::vector<hp_gamma> gammas = parse_gamma_list(a.gammas);
    if (gammas.empty()) throw StatusError(HP_INVALID_ARGUMENT, "constraints: need --gammas or --solve");
    for (const auto& g : gammas) {
      if (is_unit(g)) throw StatusError(HP_CPT_INVARIANT_BOUNDARY, "gamma = +-1 is not admitted");
    }
    const System system = make_system(gammas);
    report = system_report(gammas, system.get());
    if (!a.boost.empty()) {
      const std::vector<double> chis = parse_double_list(a.boost);
      std::vector<hp_boost_entry> entries(chis.size());
      check(hp_system_boost_scan(system.get(), chis.data(), chis.size(), entries.data()), "boost scan");
      report["boost_scan"] = json::array();
      for (const auto& e : entries) {
        json gs = json::array();
        for (const auto& g : gammas) {
          hp_gamma b;
          check(hp_boost(g, e.chi, &b), "boost");
          gs.push_back(gamma_json(b));
        }
        report["boost_scan"].push_back({{"chi", e.chi},
                                        {"gammas", gs},
                                        {"signs_preserved", e.signs_preserved != 0},
                                        {"cancels", e.cancels != 0},
                                        {"residuals", residual_json(e.residuals)}});
      }
    }
  }
  emit(a.out, report.dump(2) + "\n");
  return kExitOk;
}

// ---- dual --------------------------------------------------------------

struct DualArgs {
  CommonModel model;
  std::string out;
};

int run_dual(const DualArgs& a) {
  const Model model = make_model(a.model.m, parse_gamma(a.model.gamma));
  std::string text = "map,m,gamma,sigma_edge,v_edge,c_log_delta_prime,c_delta_prime,c_inv_x2\n";
  const auto row = [&](const char* name, const hp_model* mdl) {
    double m = 0.0;
    hp_gamma g;
    check(hp_model_get(mdl, &m, &g), "model");
    int sigma = 0;
    check(hp_edge_conductivity(mdl, &sigma), "edge conductivity");
    hp_character c;
    check(hp_boundary_character(g, &c), "boundary character");
    int unit = 0;
    check(hp_model_is_cpt_invariant(mdl, &unit), "model");
    std::string singular = ",,";
    if (!unit) {
      hp_singular_part s;
      check(hp_singular_part_of(mdl, &s), "singular part");
      singular = num(s.c_log_delta_prime) + "," + num(s.c_delta_prime) + "," + num(s.c_inv_x2);
    }
    text += std::string(name) + "," + num(m) + "," + gamma_text(g) + "," + std::to_string(sigma) +
            "," + num(c.v_edge) + "," + singular + "\n";
  };
  row("identity", model.get());
  const std::pair<const char*, hp_dual_kind> maps[] = {{"reflection", HP_DUAL_REFLECTION},
                                                       {"cpt", HP_DUAL_CPT},
                                                       {"halfplane", HP_DUAL_HALFPLANE}};
  for (const auto& [name, kind] : maps) {
    hp_model* raw = nullptr;
    check(hp_model_dual(model.get(), kind, &raw), "dual");
    const Model d(raw);
    row(name, d.get());
  }
  emit(a.out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("Half-plane Dirac fermions: edge spectra, vacuum currents and "
                           "multi-species constraints.\n") +
               kUnits};
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  auto* s = app.add_subcommand("spectrum", "Edge dispersion table (CSV with a '#' header block)");
  add_model_options(s, spectrum.model);
  s->add_option("--k-min", spectrum.k_min, "Smallest momentum")->capture_default_str();
  s->add_option("--k-max", spectrum.k_max, "Largest momentum")->capture_default_str();
  s->add_option("--points", spectrum.points, "Number of k samples")->capture_default_str();
  s->add_option("-o,--out", spectrum.out, "Output file (default stdout)");

  ProfileArgs profile;
  auto* p = app.add_subcommand(
      "profile", "Current profile j^2(x) as CSV with a JSON sidecar of the singular coefficients");
  add_model_options(p, profile.model);
  p->add_option("--x-min", profile.x_min, "Smallest distance from the boundary")->capture_default_str();
  p->add_option("--x-max", profile.x_max, "Largest distance")->capture_default_str();
  p->add_option("--points", profile.points, "Number of x samples")->capture_default_str();
  p->add_flag("--linear", profile.linear, "Equidistant grid instead of geometric");
  p->add_option("--lambda", profile.lambda_cutoff, "Cutoff for the reported ln(Lambda) coefficient")
      ->capture_default_str();
  p->add_option("-o,--out", profile.out, "Output CSV (default stdout)");
  p->add_option("--sidecar", profile.sidecar, "JSON sidecar path (default <out>.json)");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Closed forms against independent quadrature (exit 1 on FAIL)");
  add_model_options(o, oracle.model);
  o->add_option("--what", oracle.what, "edge | bulk | branch-cut | p3p4")
      ->check(CLI::IsMember({"edge", "bulk", "branch-cut", "p3p4"}))
      ->capture_default_str();
  o->add_option("--x", oracle.x, "Distance from the boundary")->capture_default_str();
  o->add_option("--l", oracle.l, "Normal momentum for p3p4")->capture_default_str();
  o->add_option("--v-cutoff", oracle.v_cutoff, "Cutoff Lambda of the v-integration");
  o->add_option("--l-max", oracle.l_max, "Upper end of the l-integration (0: automatic)");
  o->add_option("--eps", oracle.eps, "Abel damping values in units of x, comma separated, decreasing");
  o->add_option("--tol", oracle.tol,
                "Pass tolerance (defaults: edge 1e-8, bulk 1e-2, branch-cut 1e-4, p3p4 1e-10)");
  o->add_option("-o,--out", oracle.out, "Output file (default stdout)");

  ConstraintArgs constraints;
  auto* c = app.add_subcommand("constraints", "Multi-species divergence cancellation report (JSON)");
  c->add_option("--gammas", constraints.gammas, "Comma-separated boundary parameters");
  c->add_option("--solve", constraints.solve, "Search N-species systems with cancelling divergences");
  c->add_option("--fix", constraints.fix, "Prescribed gammas for --solve, comma separated");
  c->add_option("--targets", constraints.targets, "Residuals to zero for --solve: log,x2,dipole")
      ->capture_default_str();
  c->add_option("--boost", constraints.boost, "Comma-separated boost rapidities to scan");
  c->add_option("-o,--out", constraints.out, "Output file (default stdout)");

  DualArgs dual;
  auto* d = app.add_subcommand("dual", "Parameters and invariants under the three dualities (CSV)");
  add_model_options(d, dual.model);
  d->add_option("-o,--out", dual.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (s->parsed()) return run_spectrum(spectrum);
    if (p->parsed()) return run_profile(profile);
    if (o->parsed()) return run_oracle(oracle);
    if (c->parsed()) return run_constraints(constraints);
    if (d->parsed()) return run_dual(dual);
  } catch (const StatusError& e) {
    std::cerr << "halfplane: " << e.what() << "\n";
    return e.status == HP_CPT_INVARIANT_BOUNDARY ? kExitRejected : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "halfplane: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
