/*
 * deltascatter C API.
 *
 * Scattering of a unit plane wave e^{iy} incident from the left on a finite
 * array of Dirac delta sites, in dimensionless units y = kx, xi = V~/k.
 *
 * Objects are opaque handles created by ds_*_create / ds_solve_* and released
 * with the matching ds_*_destroy. Every fallible call returns a ds_status;
 * on failure ds_last_error() returns a message for the calling thread.
 * Handles are immutable after creation and may be shared between threads.
 */
#ifndef DELTASCATTER_H
#define DELTASCATTER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DELTASCATTER_BUILDING)
#    define DS_API __declspec(dllexport)
#  else
#    define DS_API __declspec(dllimport)
#  endif
#else
#  define DS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_INVALID_ARGUMENT = 1,
  DS_ERR_DOMAIN = 2,     /* E <= 0, k <= 0, mass <= 0, non-finite input */
  DS_ERR_ORDERING = 3,   /* positions not strictly increasing */
  DS_ERR_SINGULAR = 4,   /* boundary system numerically singular */
  DS_ERR_DEGENERATE = 5, /* transfer matrix with |m22| <= 1e-14 */
  DS_ERR_POLE = 6,       /* closed form evaluated at a pole */
  DS_ERR_INTERNAL = 7
} ds_status;

typedef struct ds_complex {
  double re;
  double im;
} ds_complex;

typedef struct ds_system ds_system;
typedef struct ds_solution ds_solution;
typedef struct ds_sweep_result ds_sweep_result;
typedef struct ds_resonances ds_resonances;

DS_API const char* ds_version(void);
DS_API const char* ds_status_string(ds_status status);
/* Message of the last failed call on this thread; "" if none. */
DS_API const char* ds_last_error(void);

/* ---- systems ----------------------------------------------------------- */

/* n sites with strengths xi[0..n) and n-1 gaps; first site at y0. */
DS_API ds_status ds_system_create(const double* xi, size_t n, const double* gaps,
                                  double y0, ds_system** out);
/* n sites at explicit dimensionless positions y[0..n). */
DS_API ds_status ds_system_create_sites(const double* xi, const double* y,
                                        size_t n, ds_system** out);
/* Reduced strengths V~ (1/length), positions (length) and wavenumber k. */
DS_API ds_status ds_system_create_reduced(const double* vtilde,
                                          const double* positions, size_t n,
                                          double k, ds_system** out);
/* Physical strengths V0 (energy x length); k = sqrt(2 m E) / hbar. */
DS_API ds_status ds_system_create_physical(double mass, double hbar,
                                           double energy, const double* v0,
                                           const double* positions, size_t n,
                                           ds_system** out);
DS_API void ds_system_destroy(ds_system* sys);

DS_API size_t ds_system_size(const ds_system* sys);
/* Copies xi and y (each of length ds_system_size) into caller buffers. */
DS_API ds_status ds_system_sites(const ds_system* sys, double* xi, double* y);
/* k of a reduced/physical system; DS_ERR_INVALID_ARGUMENT if dimensionless. */
DS_API ds_status ds_system_wavenumber(const ds_system* sys, double* k);

/* ---- solvers ----------------------------------------------------------- */

/* Dense boundary-condition solve: r, t and every interior (a_j, b_j). */
DS_API ds_status ds_solve_direct(const ds_system* sys, ds_solution** out);
DS_API void ds_solution_destroy(ds_solution* sol);

DS_API ds_complex ds_solution_r(const ds_solution* sol);
DS_API ds_complex ds_solution_t(const ds_solution* sol);
DS_API double ds_solution_transmission(const ds_solution* sol);
DS_API double ds_solution_reflection(const ds_solution* sol);
/* max |A x - b| of the assembled system at the returned solution. */
DS_API double ds_solution_residual(const ds_solution* sol);
/* n + 1 regions; region 1 is (1, r), region n+1 is (t, 0). */
DS_API size_t ds_solution_region_count(const ds_solution* sol);
DS_API ds_status ds_solution_region(const ds_solution* sol, size_t region,
                                    ds_complex* a, ds_complex* b);

/* Transfer-matrix path. m is row-major {m11, m12, m21, m22}. */
DS_API ds_status ds_solve_transfer(const ds_system* sys, ds_complex* t,
                                   ds_complex* r);
DS_API ds_status ds_transfer_matrix(const ds_system* sys, ds_complex m[4]);
DS_API ds_status ds_delta_matrix(double xi, double y0, ds_complex m[4]);
DS_API ds_status ds_amplitudes_from_matrix(const ds_complex m[4], ds_complex* t,
                                           ds_complex* r);

/* ---- closed forms (first site at y = 0) ------------------------------- */

DS_API ds_status ds_closed_single(double xi, double y0, ds_complex* t,
                                  ds_complex* r);
DS_API ds_status ds_closed_double_equal(double xi, double dt, ds_complex* t,
                                        ds_complex* r);
DS_API ds_status ds_closed_double_general(double xi1, double xi2, double dt,
                                          ds_complex* t, ds_complex* r);
DS_API ds_status ds_closed_triple(double xi1, double xi2, double xi3, double dt1,
                                  double dt2, ds_complex* t, ds_complex* r);
DS_API ds_status ds_closed_six_equal(double xi, double dt, ds_complex* t,
                                     ds_complex* r);
/* xi = -2 / tan(dt); DS_ERR_POLE near multiples of pi. */
DS_API ds_status ds_double_resonance_strength(double dt, double* xi);

/* ---- wavefunction ------------------------------------------------------ */

typedef struct ds_wave_sample {
  double y;
  ds_complex psi;
  ds_complex dpsi; /* left limit on a site */
  double density;  /* |psi|^2 */
} ds_wave_sample;

typedef struct ds_site_matching {
  double y;
  double continuity_residual;          /* |psi(y+h) - psi(y-h)| */
  double analytic_continuity_residual; /* |psi_R(y) - psi_L(y)| */
  double jump_residual;                /* |psi'_R - psi'_L - xi psi| */
} ds_site_matching;

/* [y_1 - 3, y_n + 3], 2001 points. */
DS_API ds_status ds_wavefunction_default_window(const ds_system* sys,
                                                double* ymin, double* ymax,
                                                size_t* count);
/* Fills out[0..count) on a uniform grid including both endpoints. */
DS_API ds_status ds_wavefunction_sample(const ds_system* sys,
                                        const ds_solution* sol, double ymin,
                                        double ymax, size_t count,
                                        ds_wave_sample* out);
/* Fills out[0..ds_system_size). */
DS_API ds_status ds_verify_matching(const ds_system* sys, const ds_solution* sol,
                                    double h, ds_site_matching* out);
/* Im(psi* psi') in region 1..n+1. */
DS_API ds_status ds_probability_current(const ds_solution* sol, size_t region,
                                        double* current);

/* ---- sweeps and resonances -------------------------------------------- */

typedef enum ds_sweep_param {
  DS_PARAM_GAP = 0,       /* all gaps set to the swept value */
  DS_PARAM_STRENGTH = 1,  /* all strengths set to the swept value */
  DS_PARAM_WAVENUMBER = 2 /* k; needs a reduced/physical system */
} ds_sweep_param;

typedef struct ds_sweep_spec {
  ds_sweep_param param;
  double lo;
  double hi;
  size_t steps; /* >= 2; grid includes both ends */
} ds_sweep_spec;

typedef struct ds_sweep_record {
  double param;
  double transmission;
  double reflection;
} ds_sweep_record;

typedef struct ds_resonance_hit {
  double param;
  double residual; /* |r|^2 at param */
} ds_resonance_hit;

/* The system acts as a template: its strength and gap vectors are kept and
 * the swept parameter is overwritten at each grid point. */
DS_API ds_status ds_sweep(const ds_system* base, const ds_sweep_spec* spec,
                          ds_sweep_result** out);
DS_API size_t ds_sweep_result_size(const ds_sweep_result* res);
DS_API const ds_sweep_record* ds_sweep_result_records(const ds_sweep_result* res);
/* Grid points dropped because their solve failed. */
DS_API size_t ds_sweep_result_skipped(const ds_sweep_result* res);
DS_API void ds_sweep_result_destroy(ds_sweep_result* res);

/* tol <= 0 selects the default 1e-10. Hits are sorted by param. */
DS_API ds_status ds_find_resonances(const ds_system* base,
                                    const ds_sweep_spec* spec, double tol,
                                    ds_resonances** out);
DS_API size_t ds_resonances_size(const ds_resonances* res);
DS_API const ds_resonance_hit* ds_resonances_data(const ds_resonances* res);
DS_API void ds_resonances_destroy(ds_resonances* res);

#ifdef __cplusplus
}
#endif

#endif /* DELTASCATTER_H */
