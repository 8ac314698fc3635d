#ifndef HALFPLANE_H
#define HALFPLANE_H

/* C interface to the half-plane Dirac fermion library.
 *
 * Every fallible call returns an hp_status; on failure a message describing
 * the last error of the calling thread is available from hp_last_error().
 * Objects behind opaque handles are created by *_create functions and released
 * by the matching *_destroy (which accept NULL). Natural units: hbar = c = 1,
 * conductivities in e^2/h. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(HALFPLANE_BUILDING)
#define HP_API __declspec(dllexport)
#else
#define HP_API __declspec(dllimport)
#endif
#else
#define HP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
  HP_OK = 0,
  HP_INVALID_ARGUMENT,
  HP_BOOST_UNDEFINED,
  HP_INVALID_MOMENTUM,
  HP_CPT_INVARIANT_BOUNDARY,
  HP_INVALID_DEFICIENCY,
  HP_GRID_TOO_SMALL,
  HP_OUT_OF_DOMAIN,
  HP_NO_EDGE_STATE,
  HP_NON_CONVERGENT,
  HP_DEGENERATE_PAIR,
  HP_UNDEFINED_EPSILON,
  HP_INTERNAL_ERROR
} hp_status;

HP_API const char* hp_status_string(hp_status status);
/* Message of the last failed call on this thread ("" if none). */
HP_API const char* hp_last_error(void);

/* Point of the projective real line. */
typedef struct hp_gamma {
  int is_infinite;
  double value; /* ignored when is_infinite */
} hp_gamma;

/* Accepts decimal numbers and inf, infinity, +inf, -inf (case-insensitive). */
HP_API hp_status hp_gamma_parse(const char* text, hp_gamma* out);
/* "%.17g" or "inf"; writes at most size bytes including the terminator. */
HP_API hp_status hp_gamma_format(hp_gamma gamma, char* buffer, size_t size);

typedef struct hp_character {
  double v_edge;
  int has_eta; /* 0 at gamma = +-1 */
  int eta;
  int has_theta;
  double theta;
  int has_epsilon; /* 0 when v_edge = 0 */
  int epsilon;
} hp_character;

HP_API hp_status hp_boundary_character(hp_gamma gamma, hp_character* out);
HP_API hp_status hp_gamma_from_rapidity(int eta, double theta, hp_gamma* out);
HP_API hp_status hp_boost(hp_gamma gamma, double chi, hp_gamma* out);

/* ---- model ------------------------------------------------------------ */

typedef struct hp_model hp_model;

typedef enum hp_dual_kind {
  HP_DUAL_REFLECTION = 0, /* (m, g) -> (-m, -1/g) */
  HP_DUAL_CPT,            /* (m, g) -> (m, 1/g)   */
  HP_DUAL_HALFPLANE       /* (m, g) -> (-m, 1/g)  */
} hp_dual_kind;

HP_API hp_status hp_model_create(double m, hp_gamma gamma, hp_model** out);
HP_API void hp_model_destroy(hp_model* model);
HP_API hp_status hp_model_get(const hp_model* model, double* m, hp_gamma* gamma);
HP_API hp_status hp_model_dual(const hp_model* model, hp_dual_kind kind, hp_model** out);
HP_API hp_status hp_model_is_cpt_invariant(const hp_model* model, int* out);

/* ---- spectrum --------------------------------------------------------- */

/* *exists = 0 when lambda(k) <= 0; E and lambda are written regardless. */
HP_API hp_status hp_edge_mode(const hp_model* model, double k, int* exists, double* energy,
                              double* lambda);
HP_API hp_status hp_edge_conductivity(const hp_model* model, int* sigma);
HP_API hp_status hp_gap_crossing(const hp_model* model, int* crosses);

/* ---- current density -------------------------------------------------- */

typedef struct hp_singular_part {
  double c_log_delta_prime; /* coefficient of ln(Lambda) delta'(x) */
  double c_delta_prime;     /* dipolar delta'(x) */
  double c_inv_x2;          /* 1/x^2 tail */
} hp_singular_part;

typedef struct hp_bulk_closed_form {
  double smooth;
  double delta_prime_log; /* includes ln(Lambda) */
  double delta_prime_dipole;
} hp_bulk_closed_form;

typedef struct hp_profile_row {
  double x;
  double j2_bulk_smooth;
  double j2_edge_smooth;
  double j2_total;
  double j2_regular;
  double c_x2_over_x2;
} hp_profile_row;

typedef struct hp_decomposition hp_decomposition;

HP_API hp_status hp_singular_part_of(const hp_model* model, hp_singular_part* out);
HP_API hp_status hp_closed_form_bulk(const hp_model* model, double x, double lambda_cutoff,
                                     hp_bulk_closed_form* out);
HP_API hp_status hp_closed_form_edge(const hp_model* model, double x, double* out);

HP_API hp_status hp_decomposition_create(const hp_model* model, hp_decomposition** out);
HP_API void hp_decomposition_destroy(hp_decomposition* decomposition);
HP_API hp_status hp_decomposition_singular(const hp_decomposition* decomposition,
                                           hp_singular_part* out);
/* xs must be strictly increasing; rows has room for count entries. */
HP_API hp_status hp_decomposition_profile(const hp_decomposition* decomposition, const double* xs,
                                          size_t count, hp_profile_row* rows);
HP_API hp_status hp_x_grid(double x_min, double x_max, size_t points, int geometric, double* out);

/* ---- quadrature oracle ------------------------------------------------ */

typedef struct hp_scheme hp_scheme;

typedef struct hp_oracle_value {
  double value;
  double error;
} hp_oracle_value;

typedef struct hp_branch_cut {
  double abel_value;
  double abel_error;
  double contour_value;
  double elementary;
  double rel_diff;
} hp_branch_cut;

typedef struct hp_cancellation {
  double cutoff;
  double p1_p2_integral;
  double p3_integral[2]; /* re, im */
  double p3_expected[2];
  double log_numeric[2];
  double log_exact[2];
  double log_asymptotic[2];
  double log_decomposed[2];
  double asymptotic_bound;
  int symmetric_ok;
  int p3_ok;
  int log_ok;
  int branch_ok;
} hp_cancellation;

HP_API hp_status hp_scheme_create(hp_scheme** out);
HP_API void hp_scheme_destroy(hp_scheme* scheme);
HP_API hp_status hp_scheme_set_cutoff(hp_scheme* scheme, double lambda_cutoff);
/* 0 selects the automatic l_max. */
HP_API hp_status hp_scheme_set_l_max(hp_scheme* scheme, double l_max);
/* Damping values in units of x, strictly decreasing. */
HP_API hp_status hp_scheme_set_eps(hp_scheme* scheme, const double* eps, size_t count);
HP_API hp_status hp_scheme_set_tolerances(hp_scheme* scheme, double quad_rel_tol,
                                          double abel_rel_tol);

HP_API hp_status hp_oracle_edge(const hp_model* model, double x, const hp_scheme* scheme,
                                hp_oracle_value* out);
HP_API hp_status hp_oracle_bulk(const hp_model* model, double x, const hp_scheme* scheme,
                                hp_oracle_value* out);
HP_API hp_status hp_oracle_branch_cut(double m, double x, const hp_scheme* scheme,
                                      hp_branch_cut* out);
HP_API hp_status hp_oracle_p3_p4(const hp_model* model, double l, const hp_scheme* scheme,
                                 hp_cancellation* out);
HP_API hp_status hp_oracle_delta_prime_kernel(double x, const hp_scheme* scheme,
                                              hp_oracle_value* out);

/* ---- multi-fermion constraints ---------------------------------------- */

typedef struct hp_system hp_system;
typedef struct hp_solution_set hp_solution_set;

typedef struct hp_residuals {
  double r_log;
  double r_x2;
  double r_dipole;
  int has_rapidity; /* 0 when some edge velocity vanishes */
  double r_plus;
  double r_minus;
  double scale_log;
  double scale_x2;
  double scale_dipole;
  double scale_rapidity;
  int flat_edge_species;
  int divergences_cancel; /* at relative tolerance 1e-10 */
  int dipole_cancels;
} hp_residuals;

typedef struct hp_rapidity_check {
  int gamma_form_zero;
  int rapidity_form_zero;
  double identity_defect;
  int consistent;
} hp_rapidity_check;

typedef struct hp_boost_entry {
  double chi;
  int signs_preserved;
  int cancels;
  hp_residuals residuals;
} hp_boost_entry;

enum { HP_TARGET_LOG = 1, HP_TARGET_X2 = 2, HP_TARGET_DIPOLE = 4 };

HP_API hp_status hp_system_create(const hp_gamma* gammas, size_t count, hp_system** out);
HP_API void hp_system_destroy(hp_system* system);
HP_API size_t hp_system_size(const hp_system* system);
/* gammas has room for hp_system_size entries. */
HP_API hp_status hp_system_gammas(const hp_system* system, hp_gamma* gammas);
HP_API hp_status hp_system_residuals(const hp_system* system, hp_residuals* out);
HP_API hp_status hp_system_rapidity_check(const hp_system* system, double tol,
                                          hp_rapidity_check* out);
HP_API hp_status hp_conjugate_pair(hp_gamma gamma, hp_system** out);
/* entries has room for count values; boosted parameters follow from hp_boost. */
HP_API hp_status hp_system_boost_scan(const hp_system* system, const double* chis, size_t count,
                                      hp_boost_entry* entries);

/* targets: bitwise or of HP_TARGET_*; 0 selects log and x2. */
HP_API hp_status hp_solve_system(size_t n, const hp_gamma* fixed, size_t fixed_count,
                                 unsigned targets, hp_solution_set** out);
HP_API void hp_solution_set_destroy(hp_solution_set* set);
HP_API size_t hp_solution_set_count(const hp_solution_set* set);
/* gammas has room for n entries of solution i. */
HP_API hp_status hp_solution_set_get(const hp_solution_set* set, size_t index, hp_gamma* gammas);

#ifdef __cplusplus
}
#endif

#endif
