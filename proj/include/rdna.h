/*
 * rdna — simulator and planner for a dynamic edge network in which user
 * terminals act as access points (TAPs) for IoT objects over opportunistic
 * cognitive channels.
 *
 * C API of the shared library. Handles are opaque; every fallible call
 * returns an rdna_status, and rdna_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef RDNA_H
#define RDNA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdna_status {
  RDNA_OK = 0,
  RDNA_ERR_INVALID_ARGUMENT = 1,
  RDNA_ERR_PARSE = 2,
  RDNA_ERR_IO = 3,
  RDNA_ERR_SIMULATION = 4,
  RDNA_ERR_INTERNAL = 5
} rdna_status;

const char* rdna_version(void);
const char* rdna_status_name(rdna_status status);

/* Message of the last failed call on this thread; empty string if none.
 * The pointer stays valid until the next failing rdna_* call on the same
 * thread. */
const char* rdna_last_error(void);

/* ------------------------------------------------------------------ */
/* Scenario handles                                                    */

typedef struct rdna_scenario rdna_scenario;

/* Parse a sectioned key=value scenario configuration. */
rdna_status rdna_scenario_create_from_file(const char* path, rdna_scenario** out);
rdna_status rdna_scenario_create_from_string(const char* text, rdna_scenario** out);
void rdna_scenario_destroy(rdna_scenario* scenario);

unsigned rdna_scenario_objects(const rdna_scenario* scenario);
unsigned rdna_scenario_taps(const rdna_scenario* scenario);
unsigned rdna_scenario_channels(const rdna_scenario* scenario);
unsigned rdna_scenario_users(const rdna_scenario* scenario);

/* [experiment] section settings of the parsed configuration. */
unsigned rdna_scenario_replications(const rdna_scenario* scenario);
unsigned long long rdna_scenario_seed(const rdna_scenario* scenario);
unsigned rdna_scenario_parallelism(const rdna_scenario* scenario);

/* ------------------------------------------------------------------ */
/* Simulation                                                          */

typedef struct rdna_sim_options {
  int smart;                      /* edge monitoring + survival-ranked channels */
  int d2d;                        /* users share fetched data device-to-device */
  unsigned channels_per_link;     /* w: primary + backup channels, >= 1 */
  unsigned taps_per_object;       /* n_a: primary + backup TAPs, >= 1 */
  unsigned messages;              /* reliability sample size per replication */
  double monitor_horizon;         /* PU observation window (smart mode) */
} rdna_sim_options;

/* Fills the options configured in the scenario file (its [experiment]
 * section), which are also the defaults. */
void rdna_scenario_options(const rdna_scenario* scenario, rdna_sim_options* out);

typedef struct rdna_stat {
  double mean;
  double std_error;
  double ci_half_width; /* 1.96 * std_error */
} rdna_stat;

typedef struct rdna_summary {
  unsigned replications;
  rdna_stat tau_o, tau_p, tau_a, tau_total;
  rdna_stat power_tx, power_compute, power_storage, power_total;
  rdna_stat reliability;
  rdna_stat signaling;
} rdna_summary;

/* Runs `replications` independent replications; replication k is seeded from
 * (base_seed, k) by a fixed mixing function, so results are reproducible and
 * independent of `parallelism`. `options` may be NULL to use the scenario's
 * own [experiment] settings. */
rdna_status rdna_run_batch(const rdna_scenario* scenario, const rdna_sim_options* options, unsigned replications,
                           unsigned long long base_seed, unsigned parallelism, rdna_summary* out);

/* Same run, persisted as summary.csv and replications.csv under out_dir. */
rdna_status rdna_write_run_outputs(const rdna_scenario* scenario, const rdna_sim_options* options,
                                   unsigned replications, unsigned long long base_seed, unsigned parallelism,
                                   const char* out_dir);

/* ------------------------------------------------------------------ */
/* Redundancy planning                                                 */

/* Longest channel switching interval that still meets xi_min under PU
 * arrival rate lambda_p: argmax of t * (exp(-lambda_p t) - xi_min). */
rdna_status rdna_switching_interval(double lambda_p, double xi_min, double* out);

/* Reliability of n_a redundant TAPs on a link of reliability xi. */
rdna_status rdna_tap_redundancy(double xi, unsigned n_a, double* out);

/* Smallest backup channel count meeting xi_min at the given traffic ratio
 * mu_s / lambda_p and TAP set size; *out_w is -1 when infeasible. With
 * smart != 0 monitoring makes every attempt succeed and w = 1 suffices. */
rdna_status rdna_min_backup_channels(double ratio, unsigned n_a, double xi_min, int smart, int* out_w);

/* w minimizing (tau_max - tau(w))^2 over w in [w_min, w_min + count - 1];
 * tau_by_w[i] is the latency with w_min + i channels. Ties take smaller w. */
rdna_status rdna_backup_channel_count(const double* tau_by_w, unsigned count, unsigned w_min, double tau_max,
                                      unsigned* out_w);

typedef struct rdna_plan {
  double t_w_star;              /* optimal switching interval */
  unsigned w_star;              /* backup channel count against tau_max */
  unsigned n_a;                 /* TAP set size meeting xi_min */
  double achieved_reliability;
  double achieved_latency;
} rdna_plan;

rdna_status rdna_make_plan(double lambda_p, double mu_s, double xi_min, double tau_max, unsigned max_taps,
                           rdna_plan* out);

/* ------------------------------------------------------------------ */
/* Experiment sweeps (plot-ready CSV)                                  */

typedef struct rdna_fig4_params {
  const unsigned* n_o_values;
  unsigned n_o_count;
  unsigned n_tap_min, n_tap_max;
  unsigned replications;
  unsigned long long seed;
  unsigned parallelism;
} rdna_fig4_params;

/* Mean latency vs. TAP count; writes fig4_baseline.csv, fig4_smart.csv,
 * fig4_d2d.csv and fig4_smart_d2d.csv under out_dir. */
rdna_status rdna_write_fig4(const rdna_fig4_params* params, const char* out_dir);

typedef struct rdna_fig5_params {
  unsigned n_objects;
  unsigned n_tap_min, n_tap_max;
  unsigned replications;
  unsigned long long seed;
  unsigned parallelism;
} rdna_fig5_params;

/* Mean power vs. TAP count; writes fig5.csv under out_dir. */
rdna_status rdna_write_fig5(const rdna_fig5_params* params, const char* out_dir);

typedef struct rdna_fig6_params {
  const double* ratios;        /* mu_s / lambda_p traffic ratios */
  unsigned ratio_count;
  const unsigned* n_a_values;  /* TAP set sizes */
  unsigned n_a_count;
  const double* xi_min_values; /* reliability targets, in (0, 1] */
  unsigned xi_min_count;
  int smart;
} rdna_fig6_params;

/* Minimal channel count surface; writes fig6.csv (or fig6_smart.csv). */
rdna_status rdna_write_fig6(const rdna_fig6_params* params, const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RDNA_H */
