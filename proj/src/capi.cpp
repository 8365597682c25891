// C bindings of the rdna core. Exceptions stop at this boundary and turn
// into status codes plus a thread-local error message.
#include "rdna.h"

#include <exception>
#include <string>
#include <vector>

#include "config.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "planner.hpp"

namespace {

thread_local std::string g_last_error;

rdna_status to_status(rdna::errc code) {
  switch (code) {
    case rdna::errc::invalid_argument: return RDNA_ERR_INVALID_ARGUMENT;
    case rdna::errc::parse: return RDNA_ERR_PARSE;
    case rdna::errc::io: return RDNA_ERR_IO;
    case rdna::errc::simulation: return RDNA_ERR_SIMULATION;
  }
  return RDNA_ERR_INTERNAL;
}

template <typename Fn>
rdna_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RDNA_OK;
  } catch (const rdna::error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RDNA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RDNA_ERR_INTERNAL;
  }
}

rdna_status invalid(const char* message) {
  g_last_error = message;
  return RDNA_ERR_INVALID_ARGUMENT;
}

rdna::sim_options to_core(const rdna_sim_options& o) {
  rdna::sim_options out;
  out.smart = o.smart != 0;
  out.d2d = o.d2d != 0;
  out.channels_per_link = o.channels_per_link;
  out.taps_per_object = o.taps_per_object;
  out.messages = o.messages;
  out.monitor_horizon = o.monitor_horizon;
  return out;
}

rdna_stat to_c(const rdna::stat_summary& s) { return {s.mean, s.std_error, s.ci_half_width}; }

rdna_summary to_c(const rdna::metrics_summary& m) {
  rdna_summary out;
  out.replications = m.replications;
  out.tau_o = to_c(m.tau_o);
  out.tau_p = to_c(m.tau_p);
  out.tau_a = to_c(m.tau_a);
  out.tau_total = to_c(m.tau_total);
  out.power_tx = to_c(m.power_tx);
  out.power_compute = to_c(m.power_compute);
  out.power_storage = to_c(m.power_storage);
  out.power_total = to_c(m.power_total);
  out.reliability = to_c(m.reliability);
  out.signaling = to_c(m.signaling);
  return out;
}

}  // namespace

struct rdna_scenario {
  rdna::run_config cfg;
};

extern "C" {

const char* rdna_version(void) { return "1.0.0"; }

const char* rdna_status_name(rdna_status status) {
  switch (status) {
    case RDNA_OK: return "ok";
    case RDNA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RDNA_ERR_PARSE: return "parse error";
    case RDNA_ERR_IO: return "io error";
    case RDNA_ERR_SIMULATION: return "simulation error";
    case RDNA_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* rdna_last_error(void) { return g_last_error.c_str(); }

rdna_status rdna_scenario_create_from_file(const char* path, rdna_scenario** out) {
  if (!path || !out) return invalid("path and out must not be NULL");
  *out = nullptr;
  return guarded([&] { *out = new rdna_scenario{rdna::parse_config_file(path)}; });
}

rdna_status rdna_scenario_create_from_string(const char* text, rdna_scenario** out) {
  if (!text || !out) return invalid("text and out must not be NULL");
  *out = nullptr;
  return guarded([&] { *out = new rdna_scenario{rdna::parse_config_text(text, "<string>")}; });
}

void rdna_scenario_destroy(rdna_scenario* scenario) { delete scenario; }

unsigned rdna_scenario_objects(const rdna_scenario* scenario) { return scenario ? scenario->cfg.scn.n_objects : 0; }
unsigned rdna_scenario_taps(const rdna_scenario* scenario) { return scenario ? scenario->cfg.scn.n_taps : 0; }
unsigned rdna_scenario_channels(const rdna_scenario* scenario) { return scenario ? scenario->cfg.scn.n_channels : 0; }
unsigned rdna_scenario_users(const rdna_scenario* scenario) { return scenario ? scenario->cfg.scn.n_users : 0; }

unsigned rdna_scenario_replications(const rdna_scenario* scenario) {
  return scenario ? scenario->cfg.replications : 0;
}
unsigned long long rdna_scenario_seed(const rdna_scenario* scenario) { return scenario ? scenario->cfg.seed : 0; }
unsigned rdna_scenario_parallelism(const rdna_scenario* scenario) { return scenario ? scenario->cfg.parallelism : 0; }

void rdna_scenario_options(const rdna_scenario* scenario, rdna_sim_options* out) {
  if (!out) return;
  rdna::sim_options defaults;
  if (scenario) defaults = scenario->cfg.options;
  out->smart = defaults.smart ? 1 : 0;
  out->d2d = defaults.d2d ? 1 : 0;
  out->channels_per_link = defaults.channels_per_link;
  out->taps_per_object = defaults.taps_per_object;
  out->messages = defaults.messages;
  out->monitor_horizon = defaults.monitor_horizon;
}

rdna_status rdna_run_batch(const rdna_scenario* scenario, const rdna_sim_options* options, unsigned replications,
                           unsigned long long base_seed, unsigned parallelism, rdna_summary* out) {
  if (!scenario || !out) return invalid("scenario and out must not be NULL");
  return guarded([&] {
    const rdna::sim_options opts = options ? to_core(*options) : scenario->cfg.options;
    *out = to_c(rdna::run_batch(scenario->cfg.scn, scenario->cfg.power, opts, replications, base_seed, parallelism));
  });
}

rdna_status rdna_write_run_outputs(const rdna_scenario* scenario, const rdna_sim_options* options,
                                   unsigned replications, unsigned long long base_seed, unsigned parallelism,
                                   const char* out_dir) {
  if (!scenario || !out_dir) return invalid("scenario and out_dir must not be NULL");
  return guarded([&] {
    rdna::run_config cfg = scenario->cfg;
    if (options) cfg.options = to_core(*options);
    cfg.replications = replications;
    cfg.seed = base_seed;
    cfg.parallelism = parallelism;
    rdna::write_run_outputs(cfg, out_dir);
  });
}

rdna_status rdna_switching_interval(double lambda_p, double xi_min, double* out) {
  if (!out) return invalid("out must not be NULL");
  return guarded([&] { *out = rdna::switching_interval(lambda_p, xi_min); });
}

rdna_status rdna_tap_redundancy(double xi, unsigned n_a, double* out) {
  if (!out) return invalid("out must not be NULL");
  return guarded([&] { *out = rdna::tap_redundancy(xi, n_a); });
}

rdna_status rdna_min_backup_channels(double ratio, unsigned n_a, double xi_min, int smart, int* out_w) {
  if (!out_w) return invalid("out_w must not be NULL");
  return guarded([&] {
    if (!(xi_min > 0.0 && xi_min <= 1.0)) rdna::fail(rdna::errc::invalid_argument, "xi_min must be in (0,1]");
    const double xi = smart ? 1.0 : rdna::attempt_reliability(ratio);
    *out_w = rdna::min_backup_channels(xi, n_a, xi_min);
  });
}

rdna_status rdna_backup_channel_count(const double* tau_by_w, unsigned count, unsigned w_min, double tau_max,
                                      unsigned* out_w) {
  if (!tau_by_w || !out_w) return invalid("tau_by_w and out_w must not be NULL");
  if (count == 0) return invalid("empty search range for backup channels");
  return guarded([&] {
    const std::vector<double> tau(tau_by_w, tau_by_w + count);
    *out_w = rdna::backup_channel_count([&](std::uint32_t w) { return tau[w - w_min]; }, tau_max, w_min,
                                        w_min + count - 1);
  });
}

rdna_status rdna_make_plan(double lambda_p, double mu_s, double xi_min, double tau_max, unsigned max_taps,
                           rdna_plan* out) {
  if (!out) return invalid("out must not be NULL");
  return guarded([&] {
    const rdna::redundancy_plan plan = rdna::make_plan(lambda_p, mu_s, xi_min, tau_max, max_taps);
    out->t_w_star = plan.t_w_star;
    out->w_star = plan.w_star;
    out->n_a = plan.n_a;
    out->achieved_reliability = plan.achieved_reliability;
    out->achieved_latency = plan.achieved_latency;
  });
}

rdna_status rdna_write_fig4(const rdna_fig4_params* params, const char* out_dir) {
  if (!params || !out_dir) return invalid("params and out_dir must not be NULL");
  if (!params->n_o_values || params->n_o_count == 0) return invalid("fig4 requires at least one n_o value");
  return guarded([&] {
    rdna::fig4_params p;
    p.n_o_values.assign(params->n_o_values, params->n_o_values + params->n_o_count);
    p.n_tap_min = params->n_tap_min;
    p.n_tap_max = params->n_tap_max;
    p.replications = params->replications;
    p.seed = params->seed;
    p.parallelism = params->parallelism;
    rdna::write_fig4(p, out_dir);
  });
}

rdna_status rdna_write_fig5(const rdna_fig5_params* params, const char* out_dir) {
  if (!params || !out_dir) return invalid("params and out_dir must not be NULL");
  return guarded([&] {
    rdna::fig5_params p;
    p.n_objects = params->n_objects;
    p.n_tap_min = params->n_tap_min;
    p.n_tap_max = params->n_tap_max;
    p.replications = params->replications;
    p.seed = params->seed;
    p.parallelism = params->parallelism;
    rdna::write_fig5(p, out_dir);
  });
}

rdna_status rdna_write_fig6(const rdna_fig6_params* params, const char* out_dir) {
  if (!params || !out_dir) return invalid("params and out_dir must not be NULL");
  if (!params->ratios || params->ratio_count == 0 || !params->n_a_values || params->n_a_count == 0 ||
      !params->xi_min_values || params->xi_min_count == 0)
    return invalid("fig6 requires nonempty ratio, n_a and xi_min lists");
  return guarded([&] {
    rdna::fig6_params p;
    p.ratios.assign(params->ratios, params->ratios + params->ratio_count);
    p.n_a_values.assign(params->n_a_values, params->n_a_values + params->n_a_count);
    p.xi_min_values.assign(params->xi_min_values, params->xi_min_values + params->xi_min_count);
    p.smart = params->smart != 0;
    rdna::write_fig6(p, out_dir);
  });
}

}  // extern "C"
