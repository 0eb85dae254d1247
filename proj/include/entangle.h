/*
 * C interface to the entangle library.
 *
 * Every function returns an ent_status; ENT_OK is 0 and the nonzero codes
 * double as process exit codes for the CLI. On failure a message for the
 * calling thread is available from ent_last_error() until the next call.
 * Tables are opaque and owned by the caller (free with ent_table_free).
 */
#ifndef ENTANGLE_H
#define ENTANGLE_H

#include <stddef.h>

#if defined(_WIN32)
#  define ENT_API __declspec(dllexport)
#else
#  define ENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ent_status {
  ENT_OK = 0,
  ENT_ERR_INTERNAL = 1,
  ENT_ERR_INPUT_DOMAIN = 2,
  ENT_ERR_CAPABILITY = 3,
  ENT_ERR_RESOURCE = 4,
  ENT_ERR_NUMERICAL = 5
} ent_status;

typedef enum ent_sea_kind { ENT_SEA_CUBIC = 0, ENT_SEA_SPHERICAL = 1 } ent_sea_kind;

typedef struct ent_table ent_table;

typedef struct ent_fit {
  double slope;
  double intercept;
  double rms_residual;
  int n_points;
} ent_fit;

ENT_API const char* ent_version(void);
ENT_API const char* ent_last_error(void);

/* Tables */
ENT_API void ent_table_free(ent_table* t);
ENT_API ent_status ent_table_shape(const ent_table* t, size_t* rows, size_t* cols);
ENT_API const char* ent_table_column(const ent_table* t, size_t col);
/* NULL when the table has no row labels. */
ENT_API const char* ent_table_label(const ent_table* t, size_t row);
ENT_API ent_status ent_table_get(const ent_table* t, size_t row, size_t col, double* out);
/* Writes the CSV rendering to `path`. */
ENT_API ent_status ent_table_write_csv(const ent_table* t, const char* path);
/* Parses a CSV file of numeric columns. */
ENT_API ent_status ent_table_read_csv(const char* path, ent_table** out);

/* 1D free fermions (k_f in radians) */
ENT_API ent_status ent_segment_entropy(long L, double k_f, double* out);
/* columns: L, entropy */
ENT_API ent_status ent_fermion1d_scan(const long* L_values, size_t n, double k_f, ent_table** out);
ENT_API ent_status ent_local_log_slope(long L, double k_f, double* out);

/* Toeplitz determinants; columns: L, exact, asymptotic, abs_err */
ENT_API ent_status ent_fh_scan(const long* L_values, size_t n, double k_f, double lambda,
                               ent_table** out);
ENT_API ent_status ent_fh_beta_sq(double lambda, double* out);

/* Spin models; asymptotic is NaN when it does not apply (n1 = 0 or n1 = n). */
ENT_API ent_status ent_spin_afm(long n, long n1, double* exact, double* asymptotic);
ENT_API ent_status ent_spin_fm(long total, long sub1, double* out);
/* columns: m, entropy  for fm_entropy(2m, m) */
ENT_API ent_status ent_spin_fm_equal_scan(const long* m_values, size_t n, ent_table** out);

/* Harmonic chain; ring_size = 0 selects the infinite chain. columns: L, entropy */
ENT_API ent_status ent_boson_scan(double mass, int ring_size, const long* L_values, size_t n,
                                  ent_table** out);

/* d-dimensional fermions; columns: L, entropy, entropy_per_area */
ENT_API ent_status ent_highd_scan(int d, ent_sea_kind kind, double k_f, const long* L_values,
                                  size_t n, ent_table** out);
ENT_API ent_status ent_widom(int d, ent_sea_kind kind, double k_f, double* numeric,
                             double* analytic);

/* Fits over (L, S) pairs. d = 1 gives the plain logarithmic fit. */
ENT_API ent_status ent_fit_log(const double* L, const double* S, size_t n, ent_fit* out);
ENT_API ent_status ent_fit_area_log(const double* L, const double* S, size_t n, int d,
                                    ent_fit* out);

/* Oracle equivalence suite ("fermion", "spin", "boson", "all").
 * Labelled rows; columns: fast, oracle, abs_diff, tolerance, passed. */
ENT_API ent_status ent_oracle_check(const char* suite, ent_table** out);

#ifdef __cplusplus
}
#endif

#endif /* ENTANGLE_H */
