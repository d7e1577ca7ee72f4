/* C interface to the cone / bracket / sharp-calculus library.
 *
 * Conventions:
 *   - every function returns a conerc_status; outputs go through pointers
 *   - on any failure conerc_last_error() carries a message for the calling
 *     thread until the next call on that thread
 *   - strings handed out as char** are heap copies; release them with
 *     conerc_string_free
 *   - algebra elements are flat double arrays of length conerc_algebra_dim
 */
#ifndef CONERC_H
#define CONERC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conerc_status {
    CONERC_OK = 0,
    CONERC_ERR_INVALID_ARGUMENT = 1,
    CONERC_ERR_DOMAIN = 2,
    CONERC_ERR_SINGULAR = 3,
    CONERC_ERR_POLE = 4,
    CONERC_ERR_NOT_MODULAR = 5,
    CONERC_ERR_INTERNAL = 6
} conerc_status;

const char* conerc_version(void);
const char* conerc_last_error(void);
void conerc_string_free(char* s);

/* ---- euclidean jordan algebras ---- */

typedef struct conerc_algebra conerc_algebra;

/* spec is "sym:n", "herm:n" or "spin:n" */
conerc_status conerc_algebra_create(const char* spec, conerc_algebra** out);
void conerc_algebra_destroy(conerc_algebra* a);

conerc_status conerc_algebra_dim(const conerc_algebra* a, int* out);
/* {"kind","n","rank","dim","peirce"} */
conerc_status conerc_algebra_info(const conerc_algebra* a, char** json_out);

conerc_status conerc_jordan_product(const conerc_algebra* a, const double* x,
                                    const double* y, double* out);
conerc_status conerc_jordan_det(const conerc_algebra* a, const double* x,
                                double* out);
conerc_status conerc_jordan_inverse(const conerc_algebra* a, const double* x,
                                    double* out);
/* complex element given as split re/im arrays */
conerc_status conerc_spectral_norm(const conerc_algebra* a, const double* re,
                                   const double* im, double* out);

/* ---- special functions on the cone ---- */

conerc_status conerc_gindikin_gamma(const conerc_algebra* a, double nu_re,
                                    double nu_im, double out[2]);
conerc_status conerc_pochhammer(const conerc_algebra* a, double nu,
                                const int64_t* m, size_t mlen, double* out);
conerc_status conerc_wallach_contains(const conerc_algebra* a, double nu,
                                      int* out);
/* variant in {"final", "intermediate", "derived"} */
conerc_status conerc_conv_constant(const conerc_algebra* a, double nu1,
                                   double nu2, const char* variant,
                                   double* out);

/* ---- rankin-cohen brackets (exact rational arithmetic) ---- */

/* {"k1","k2","j","coeffs":[...strings]} */
conerc_status conerc_rcb_coeffs_json(int k1, int k2, int j, char** json_out);
/* f, g in {"E4","E6"}; expansion of the j-th bracket in the E4^a E6^b basis:
 * {"weight","monomials":[[a,b],...],"coords":[...strings]} */
conerc_status conerc_rcb_modular_json(const char* f, const char* g, int j,
                                      int order, char** json_out);

/* ---- sharp calculus spot values ---- */

conerc_status conerc_c_mu(double mu_re, double mu_im, double out[2]);
conerc_status conerc_a_mu_eigenvalue(int n, double mu_re, double mu_im,
                                     double out[2]);

/* ---- verification suites ---- */

/* suite in {jordan, gamma, rcb, bergman, sharp, cmu, all}.
 * config_json is NULL/"" or a flat object of overrides, e.g.
 * {"seed":7,"trials":200,"tol":1e-10,"grid":257,"timings":false}.
 * The env var CONE_RCB_SEED, when set, overrides the seed. */
conerc_status conerc_run_suite_json(const char* suite, const char* config_json,
                                    char** json_out);
/* render a report produced by conerc_run_suite_json as a fixed-width table */
conerc_status conerc_report_table(const char* report_json, int color,
                                  char** text_out);
/* 1 if every record in the report passed, else 0 */
conerc_status conerc_report_all_pass(const char* report_json, int* out);

#ifdef __cplusplus
}
#endif

#endif /* CONERC_H */
