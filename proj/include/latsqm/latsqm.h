#ifndef LATSQM_H
#define LATSQM_H

/*
 * C API of the lattice SQM library.
 *
 * All non-trivial state lives behind opaque handles; every function
 * returns a latsqm_status and reports results through out-parameters.
 * On any failure latsqm_last_error_message() returns a human-readable
 * description for the calling thread.  Handles are destroyed with the
 * matching *_destroy function; destroying NULL is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LATSQM_API __declspec(dllexport)
#else
#define LATSQM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latsqm_status {
  LATSQM_OK = 0,
  LATSQM_ERR_INVALID_ARGUMENT = 1,
  LATSQM_ERR_INVALID_DOMAIN = 2,
  LATSQM_ERR_TOLERANCE_NOT_MET = 3,
  LATSQM_ERR_NO_SERIES_SOLUTION = 4,
  LATSQM_ERR_UNSUPPORTED_FORM = 5,
  LATSQM_ERR_NOT_SHAPE_INVARIANT = 6,
  LATSQM_ERR_CONVERGENCE_FAILURE = 7,
  LATSQM_ERR_BAD_CONFIG = 8,
  LATSQM_ERR_INTERNAL = 9
} latsqm_status;

LATSQM_API const char* latsqm_version(void);

/* Message describing the most recent failure on this thread. */
LATSQM_API const char* latsqm_last_error_message(void);

/* ------------------------------------------------------------------ */
/* Difference kernels and regularized sums                             */
/* ------------------------------------------------------------------ */

/* K_order[j]; order 1 or 2. */
LATSQM_API latsqm_status latsqm_kernel_coefficient(int order, long long j,
                                                   double* out);

typedef enum latsqm_sum_mode {
  LATSQM_SUM_PAIRED = 0,
  LATSQM_SUM_PAIRED_CESARO = 1
} latsqm_sum_mode;

typedef struct latsqm_sum_policy {
  long long j_max;
  int mode; /* latsqm_sum_mode */
  double tail_tol;
} latsqm_sum_policy;

LATSQM_API latsqm_sum_policy latsqm_sum_policy_default(void);

/* Lattice function callback: write f(n) into (*re, *im) and return 0.
 * A nonzero return aborts the evaluation with LATSQM_ERR_INTERNAL. */
typedef int (*latsqm_lattice_fn)(long long n, double* re, double* im,
                                 void* user);

/* Regularized kernel application Delta^order f at site n.  out_tail may
 * be NULL. */
LATSQM_API latsqm_status latsqm_apply_difference(
    int order, latsqm_lattice_fn f, void* user, long long n,
    const latsqm_sum_policy* policy, double* out_re, double* out_im,
    double* out_tail);

/* Max |Delta^2 f - Delta^1(Delta^1 f)| over [n_min, n_max]. */
LATSQM_API latsqm_status latsqm_verify_semigroup(
    latsqm_lattice_fn f, void* user, long long n_min, long long n_max,
    const latsqm_sum_policy* policy, double* out_max_residual);

/* ------------------------------------------------------------------ */
/* Formal power sums                                                   */
/* ------------------------------------------------------------------ */

typedef struct latsqm_power_sum latsqm_power_sum;

LATSQM_API latsqm_status latsqm_power_sum_create(const double* coeffs,
                                                 const double* exponents,
                                                 size_t n_terms,
                                                 latsqm_power_sum** out);
LATSQM_API void latsqm_power_sum_destroy(latsqm_power_sum* p);
LATSQM_API latsqm_status latsqm_power_sum_num_terms(const latsqm_power_sum* p,
                                                    size_t* out);
LATSQM_API latsqm_status latsqm_power_sum_term(const latsqm_power_sum* p,
                                               size_t index, double* coeff,
                                               double* exponent);
LATSQM_API latsqm_status latsqm_power_sum_eval(const latsqm_power_sum* p,
                                               double n, double* out);
/* Termwise power rule, applied `order` times. */
LATSQM_API latsqm_status latsqm_power_sum_difference(const latsqm_power_sum* p,
                                                     int order,
                                                     latsqm_power_sum** out);

/* Largest |coefficient| of D1(fg) - D1(f)g - f D1(g); 0 exactly. */
LATSQM_API latsqm_status latsqm_verify_leibniz(const latsqm_power_sum* f,
                                               const latsqm_power_sum* g,
                                               double* out_max_residual);

/* Largest |coefficient| of Adag(A psi) - (-p^2 D2 psi + v_minus psi). */
LATSQM_API latsqm_status latsqm_verify_factorization(
    const latsqm_power_sum* w, double prefactor, const latsqm_power_sum* psi,
    double* out_max_residual);

/* v_minus = W^2 - p D1 W, v_plus = W^2 + p D1 W. */
LATSQM_API latsqm_status latsqm_partner_potentials(const latsqm_power_sum* w,
                                                   double prefactor,
                                                   latsqm_power_sum** v_minus,
                                                   latsqm_power_sum** v_plus);

/* ------------------------------------------------------------------ */
/* Ground-state series                                                 */
/* ------------------------------------------------------------------ */

typedef struct latsqm_series latsqm_series;

LATSQM_API latsqm_status latsqm_ground_state_series(const latsqm_power_sum* w,
                                                    double prefactor,
                                                    int max_terms,
                                                    latsqm_series** out);
LATSQM_API void latsqm_series_destroy(latsqm_series* s);
LATSQM_API latsqm_status latsqm_series_num_coefficients(const latsqm_series* s,
                                                        size_t* out);
LATSQM_API latsqm_status latsqm_series_coefficient(const latsqm_series* s,
                                                   size_t j, double* out);
LATSQM_API latsqm_status latsqm_series_has_closed_form(const latsqm_series* s,
                                                       int* out);
/* psi = N n^leading_power exp(-decay_rate n); fails when absent. */
LATSQM_API latsqm_status latsqm_series_closed_form(const latsqm_series* s,
                                                   double* leading_power,
                                                   double* decay_rate);
/* Truncated series value at n. */
LATSQM_API latsqm_status latsqm_series_eval(const latsqm_series* s, double n,
                                            double* out);

/* ------------------------------------------------------------------ */
/* Shape-invariant models and algebraic spectra                        */
/* ------------------------------------------------------------------ */

typedef struct latsqm_model latsqm_model;

LATSQM_API latsqm_status latsqm_model_create_builtin(const char* name,
                                                     double prefactor,
                                                     latsqm_model** out);
/* JSON text in the CLI configuration format. */
LATSQM_API latsqm_status latsqm_model_from_json(const char* json_text,
                                                latsqm_model** out);
LATSQM_API void latsqm_model_destroy(latsqm_model* m);

LATSQM_API latsqm_status latsqm_model_superpotential(const latsqm_model* m,
                                                     double a,
                                                     latsqm_power_sum** w_out,
                                                     double* prefactor_out);
LATSQM_API latsqm_status latsqm_model_phi(const latsqm_model* m, double a,
                                          double* out);
LATSQM_API latsqm_status latsqm_model_rest(const latsqm_model* m, double a,
                                           double* out);
LATSQM_API latsqm_status latsqm_model_e0(const latsqm_model* m, double a,
                                         double* out);

/* Symbolic check of v_plus(a) - v_minus(phi(a)) == const.  Failure to
 * hold is reported through *holds, not as an error. */
LATSQM_API latsqm_status latsqm_check_shape_invariance(
    const latsqm_model* m, double a, int* holds, double* rest_extracted,
    double* max_residual_coeff);

typedef struct latsqm_spectrum latsqm_spectrum;

LATSQM_API latsqm_status latsqm_algebraic_spectrum(const latsqm_model* m,
                                                   double a1, int n_levels,
                                                   latsqm_spectrum** out);
LATSQM_API void latsqm_spectrum_destroy(latsqm_spectrum* s);
LATSQM_API latsqm_status latsqm_spectrum_num_levels(const latsqm_spectrum* s,
                                                    size_t* out);
LATSQM_API latsqm_status latsqm_spectrum_level(const latsqm_spectrum* s,
                                               size_t index, int* n,
                                               double* e_susy,
                                               double* e_paper);
LATSQM_API latsqm_status latsqm_spectrum_num_parameters(
    const latsqm_spectrum* s, size_t* out);
LATSQM_API latsqm_status latsqm_spectrum_parameter(const latsqm_spectrum* s,
                                                   size_t index, double* out);

/* ------------------------------------------------------------------ */
/* Dense window operators and the eigensolver                          */
/* ------------------------------------------------------------------ */

typedef enum latsqm_boundary {
  LATSQM_BOUNDARY_TRUNCATE = 0,
  LATSQM_BOUNDARY_ODD_IMAGES = 1
} latsqm_boundary;

typedef struct latsqm_operator latsqm_operator;

LATSQM_API latsqm_status latsqm_assemble_hamiltonian(
    const latsqm_power_sum* potential, long long n_min, long long n_max,
    long long kernel_cutoff, double prefactor2, int boundary,
    latsqm_operator** out);

/* A^dag A (dagger_first = 1) or A A^dag as dense ladder-matrix products. */
LATSQM_API latsqm_status latsqm_factorized_hamiltonian(
    const latsqm_power_sum* w, double prefactor, long long n_min,
    long long n_max, long long kernel_cutoff, int boundary, int dagger_first,
    latsqm_operator** out);

LATSQM_API void latsqm_operator_destroy(latsqm_operator* op);
LATSQM_API latsqm_status latsqm_operator_dim(const latsqm_operator* op,
                                             size_t* out);
LATSQM_API latsqm_status latsqm_operator_entry(const latsqm_operator* op,
                                               size_t row, size_t col,
                                               double* out);

typedef struct latsqm_eigen latsqm_eigen;

LATSQM_API latsqm_status latsqm_diagonalize(const latsqm_operator* op,
                                            double tol, latsqm_eigen** out);
LATSQM_API void latsqm_eigen_destroy(latsqm_eigen* e);
LATSQM_API latsqm_status latsqm_eigen_dim(const latsqm_eigen* e, size_t* out);
LATSQM_API latsqm_status latsqm_eigen_value(const latsqm_eigen* e, size_t k,
                                            double* out);
/* Copies eigenvector k into buf (len >= dim). */
LATSQM_API latsqm_status latsqm_eigen_vector(const latsqm_eigen* e, size_t k,
                                             double* buf, size_t len);
LATSQM_API latsqm_status latsqm_eigen_sweeps(const latsqm_eigen* e, int* out);
LATSQM_API latsqm_status latsqm_eigen_off_residual(const latsqm_eigen* e,
                                                   double* out);

/* |H psi - energy psi|_2 / |psi|_2 over the operator window. */
LATSQM_API latsqm_status latsqm_residual_check(const latsqm_operator* op,
                                               const double* psi, size_t len,
                                               double energy, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATSQM_H */
