#ifndef NHLS_H
#define NHLS_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef NHLS_BUILDING
#    define NHLS_API __declspec(dllexport)
#  else
#    define NHLS_API __declspec(dllimport)
#  endif
#else
#  define NHLS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nhls_status {
  NHLS_OK = 0,
  NHLS_ERR_INVALID_ARGUMENT = 1,
  NHLS_ERR_PARSE = 2,
  NHLS_ERR_IO = 3,
  NHLS_ERR_NOT_AT_EP = 4,
  NHLS_ERR_SINGULAR_SYSTEM = 5,
  NHLS_ERR_NO_PROPAGATING_CHANNEL = 6,
  NHLS_ERR_DEFECTIVE_SPECTRUM = 7,
  NHLS_ERR_SUPPORT_CLIPPED = 8,
  NHLS_ERR_INTERACTION_INCOMPLETE = 9,
  NHLS_ERR_BUDGET_VIOLATION = 10,
  NHLS_ERR_NUMERICAL = 11,
  NHLS_ERR_INTERNAL = 99
} nhls_status;

typedef struct nhls_hamiltonian nhls_hamiltonian;
typedef struct nhls_state nhls_state;
typedef struct nhls_record nhls_record;

typedef struct nhls_params {
  double J;
  double delta;
  double gamma;
} nhls_params;

typedef enum nhls_method { NHLS_SPECTRAL = 0, NHLS_STEPPED = 1 } nhls_method;

typedef struct nhls_propagator_config {
  nhls_method method;
  double dt;
  double t_max;
  size_t snapshot_stride;
  double degeneracy_guard;
  int backward;
} nhls_propagator_config;

/* Amplitudes in the order I, O, I_A, O_A, I_B, O_B as (re, im) pairs. */
typedef struct nhls_scattering_result {
  double E_re, E_im;
  double K;
  double k_re, k_im;
  double amps[12];
  int propagating;
} nhls_scattering_result;

NHLS_API const char* nhls_version(void);
NHLS_API const char* nhls_status_name(nhls_status s);
/* Message of the last failed call on this thread. */
NHLS_API const char* nhls_last_error(void);
NHLS_API void nhls_string_free(char* s);

NHLS_API double nhls_ep_gamma(nhls_params p, int sign);

NHLS_API nhls_status nhls_hamiltonian_from_json(const char* json_text, nhls_hamiltonian** out);
NHLS_API nhls_status nhls_hamiltonian_uniform_chain(size_t n_sites, nhls_params p, nhls_hamiltonian** out);
NHLS_API nhls_status nhls_hamiltonian_ssh_segment(size_t n_sites, nhls_params p, int gain_first, nhls_hamiltonian** out);
NHLS_API void nhls_hamiltonian_free(nhls_hamiltonian* h);
NHLS_API size_t nhls_hamiltonian_dim(const nhls_hamiltonian* h);
NHLS_API nhls_status nhls_hamiltonian_entry(const nhls_hamiltonian* h, size_t i, size_t j, double* re, double* im);
/* re/im need room for dim values. */
NHLS_API nhls_status nhls_hamiltonian_spectrum(const nhls_hamiltonian* h, double* re, double* im, size_t capacity,
                                               double* max_imag);

NHLS_API nhls_status nhls_dispersion(double k, nhls_params p, int band, double* re, double* im);
NHLS_API nhls_status nhls_overlap(double k, nhls_params p, int small_k_approx, double* out);
/* kind is "dispersion" or "overlap"; columns k,value_re,value_im. */
NHLS_API nhls_status nhls_curve_csv(const char* kind, nhls_params p, int band, size_t samples, int small_k_approx,
                                    char** out_csv);
NHLS_API nhls_status nhls_scattering_solve(double K, nhls_params p, int from_ssh, nhls_scattering_result* out);

NHLS_API nhls_status nhls_gaussian_packet(const nhls_hamiltonian* h, double alpha, double n_c, double k_c,
                                          nhls_state** out);
NHLS_API void nhls_state_free(nhls_state* s);
NHLS_API size_t nhls_state_size(const nhls_state* s);
NHLS_API nhls_status nhls_state_amplitudes(const nhls_state* s, double* re, double* im, size_t capacity);
NHLS_API nhls_status nhls_region_probability(const nhls_state* s, long lo, long hi, double* out);
NHLS_API nhls_status nhls_ipr(const nhls_state* s, double* out);

NHLS_API nhls_propagator_config nhls_propagator_default(void);
NHLS_API nhls_status nhls_propagate(const nhls_hamiltonian* h, const nhls_state* psi0,
                                    const nhls_propagator_config* cfg, nhls_record** out);
NHLS_API void nhls_record_free(nhls_record* r);
NHLS_API size_t nhls_record_size(const nhls_record* r);
NHLS_API nhls_status nhls_record_time(const nhls_record* r, size_t i, double* t, double* dirac_norm);
NHLS_API nhls_status nhls_record_snapshot(const nhls_record* r, size_t i, nhls_state** out);
NHLS_API nhls_status nhls_record_density_csv(const nhls_record* r, size_t every, char** out_csv);

/* NHLS_OK when valid; otherwise NHLS_ERR_PARSE with one diagnostic per line. */
NHLS_API nhls_status nhls_spec_validate(const char* json_text, char** diagnostics);
NHLS_API nhls_status nhls_list_scenarios(char** out);
NHLS_API nhls_status nhls_scenario_defaults(const char* id, char** out_json);
/* keys/values are n override pairs; out_dir may be NULL. pass is 1 when every threshold holds. */
NHLS_API nhls_status nhls_run_scenario(const char* id, const char* const* keys, const char* const* values, size_t n,
                                       const char* out_dir, int* pass, char** summary_csv);
/* filter is a comma-separated id list, empty or NULL for all; report receives the junit xml. */
NHLS_API nhls_status nhls_run_suite(const char* filter, size_t workers, const char* out_dir, int* pass,
                                    char** report);

#ifdef __cplusplus
}
#endif

#endif
