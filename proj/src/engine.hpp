// Monte Carlo driver: one replication runs the full pipeline (placement, PU
// dynamics, optional monitoring, association, absorption latency, power,
// message-level reliability); batches fan replications out over threads and
// merge in seed order so the summary never depends on the parallelism degree.
#pragma once

#include <cstdint>
#include <vector>

#include "markov.hpp"
#include "power.hpp"
#include "scenario.hpp"

namespace rdna {

struct sim_options {
  bool smart = false;
  bool d2d = false;
  std::uint32_t channels_per_link = 1;  // w: primary + backup channels per link
  std::uint32_t taps_per_object = 1;    // n_a: primary + backup TAPs per object
  std::uint32_t messages = 1000;        // reliability sample size per replication
  double monitor_horizon = 200.0;       // PU observation window per channel (smart mode)
};

struct replication_result {
  std::uint64_t seed = 0;
  latency_breakdown latency;
  power_breakdown power;
  double reliability = 1.0;  // fraction of messages delivered without PU interruption
  std::uint64_t signaling_messages = 0;
};

// Channel processes for a placed world: shared PU rates from the traffic
// parameters, with per-link PU pressure scaled by (d / link_scale_ref)^exp
// when a reference distance is configured.
std::vector<channel_process> build_channel_processes(const placed_scenario& placed);

replication_result run_replication(const scenario& s, const power_params& power, const sim_options& options,
                                   std::uint64_t seed);

struct stat_summary {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_half_width = 0.0;  // 1.96 * std_error
};

struct metrics_summary {
  std::uint32_t replications = 0;
  stat_summary tau_o, tau_p, tau_a, tau_total;
  stat_summary power_tx, power_compute, power_storage, power_total;
  stat_summary reliability;
  stat_summary signaling;
};

metrics_summary summarize(const std::vector<replication_result>& results);

// Replication k uses derive_seed(base_seed, k). Results are merged in k
// order; any failure aborts with the smallest failing replication reported.
std::vector<replication_result> run_replications(const scenario& s, const power_params& power,
                                                 const sim_options& options, std::uint32_t n_reps,
                                                 std::uint64_t base_seed, std::uint32_t parallelism);

metrics_summary run_batch(const scenario& s, const power_params& power, const sim_options& options,
                          std::uint32_t n_reps, std::uint64_t base_seed, std::uint32_t parallelism);

}  // namespace rdna
