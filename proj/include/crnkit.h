/* C interface to the reaction-network analysis library.
 *
 * All functions returning int yield CRN_OK or an error code; the message for
 * the most recent failure on the calling thread is available through
 * crn_last_error(). Strings returned through out-parameters are heap
 * allocated and must be released with crn_string_free().
 */
#ifndef CRNKIT_H
#define CRNKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  CRN_OK = 0,
  CRN_ERR_INVALID = 1,      /* bad argument or internal failure */
  CRN_ERR_PARSE = 2,        /* malformed or semantically invalid input text */
  CRN_ERR_UNSUPPORTED = 3,  /* the model lacks the shape an operation needs */
  CRN_ERR_NUMERIC = 4,      /* a numeric routine failed to converge */
  CRN_ERR_INCONSISTENT = 5, /* empirical results contradict the structural verdict */
};

typedef struct crn_model crn_model;

const char* crn_version(void);

/* Message for the last error on this thread; never NULL. */
const char* crn_last_error(void);

void crn_string_free(char* s);

/* Parses network text (is_box = 0) or box-model text (is_box = 1). */
int crn_model_parse(const char* text, int is_box, crn_model** out);

/* The built-in direct-air-capture model with default parameters. */
int crn_model_dac_preset(crn_model** out);

/* Overrides one preset parameter (p1,p2,q1,q2 rational; k1,k2,k4,k5,k6,am,
 * beta positive decimal). Only valid on models created by
 * crn_model_dac_preset. */
int crn_model_set(crn_model* model, const char* key, const char* value);

void crn_model_free(crn_model* model);

/* Renders the model in the network file format. */
int crn_model_render(const crn_model* model, char** out);

int crn_model_species_count(const crn_model* model);

typedef struct crn_options {
  double rel_tol;     /* integrator relative tolerance */
  double abs_tol;     /* integrator absolute tolerance */
  double newton_tol;  /* steady-state residual scale factor */
  double floor_frac;  /* integrator positivity floor, fraction of the initial total */
  double eps;         /* per-species floor for the class extremum queries */
  uint64_t seed;      /* RNG seed for multistart probing */
  int n_starts;       /* number of multistart points */
  double t_end;       /* integration horizon */
} crn_options;

void crn_options_default(crn_options* opts);

/* Structural analysis report (schema version 1 JSON). Never needs numeric
 * rate values. */
int crn_analyze(const crn_model* model, char** json_out);

/* Integrates from x0 (length n = species count) to opts->t_end. On success
 * csv_out holds the trajectory and json_out a summary with the final state,
 * conserved-total drift and the residual at the final state. */
int crn_simulate(const crn_model* model, const double* x0, int n, const crn_options* opts,
                 char** csv_out, char** json_out);

/* Multistart steady-state search in the stoichiometric class of x0. The
 * report includes the structural verdict and a consistency flag; when the
 * empirical count contradicts a monostationarity certificate the report is
 * still written and the call returns CRN_ERR_INCONSISTENT. */
int crn_probe(const crn_model* model, const double* x0, int n, const crn_options* opts,
              char** json_out);

/* Atmospheric-reduction condition report for a model of the exchange-system
 * shape: the necessary-condition root search plus both sufficient-condition
 * checks on the class of x0 with floor opts->eps. */
int crn_reduction(const crn_model* model, const double* x0, int n, const crn_options* opts,
                  char** json_out);

#ifdef __cplusplus
}
#endif

#endif
