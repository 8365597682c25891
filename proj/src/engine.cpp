#include "engine.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

#include "error.hpp"
#include "topology.hpp"

namespace rdna {

std::vector<channel_process> build_channel_processes(const placed_scenario& placed) {
  const scenario& s = placed.world;
  std::vector<double> scale;
  if (s.traffic.link_scale_ref > 0.0 && s.n_objects > 0) {
    scale.resize(static_cast<std::size_t>(s.n_objects) * s.n_taps);
    for (std::uint32_t obj = 0; obj < s.n_objects; ++obj)
      for (std::uint32_t tap = 0; tap < s.n_taps; ++tap) {
        const double d = distance(placed.object_positions[obj], placed.tap_positions[tap]);
        scale[static_cast<std::size_t>(obj) * s.n_taps + tap] =
            std::pow(d / s.traffic.link_scale_ref, s.traffic.link_scale_exp);
      }
  }
  std::vector<channel_process> channels;
  channels.reserve(s.n_channels);
  for (std::uint32_t b = 0; b < s.n_channels; ++b) {
    channel_process ch;
    ch.channel_id = b;
    ch.lambda_p = s.traffic.lambda_p;
    ch.mu_p = s.traffic.mu_p;
    ch.link_scale = scale;
    ch.n_taps = s.n_taps;
    channels.push_back(std::move(ch));
  }
  return channels;
}

namespace {

// Message-level reliability with w * n_a redundant alternatives: on each
// alternative the service time races the next PU return, both exponential.
// Smart monitoring schedules transmissions into windows known to stay idle.
double simulate_reliability(const traffic_params& traffic, const sim_options& options, rng& stream) {
  if (options.smart) return 1.0;
  const std::uint64_t alternatives =
      static_cast<std::uint64_t>(options.channels_per_link) * options.taps_per_object;
  std::uint64_t delivered = 0;
  for (std::uint32_t m = 0; m < options.messages; ++m) {
    bool ok = false;
    for (std::uint64_t alt = 0; alt < alternatives && !ok; ++alt) {
      const double service = stream.exponential(traffic.mu_s);
      const double pu_return = stream.exponential(traffic.lambda_p);
      ok = service < pu_return;
    }
    if (ok) ++delivered;
  }
  return options.messages > 0 ? static_cast<double>(delivered) / options.messages : 1.0;
}

}  // namespace

replication_result run_replication(const scenario& s, const power_params& power, const sim_options& options,
                                   std::uint64_t seed) {
  validate_scenario(s);
  if (options.channels_per_link < 1) fail(errc::invalid_argument, "channels_per_link must be >= 1");
  if (options.taps_per_object < 1) fail(errc::invalid_argument, "taps_per_object must be >= 1");
  if (options.messages < 1) fail(errc::invalid_argument, "messages must be >= 1");
  if (options.smart && !(options.monitor_horizon > 0.0))
    fail(errc::invalid_argument, "monitor_horizon must be > 0 in smart mode");

  replication_result result;
  result.seed = seed;

  rng place_stream(substream_seed(seed, stream::placement));
  const placed_scenario placed = place_nodes(s, place_stream);
  const std::vector<channel_process> channels = build_channel_processes(placed);

  chain_options chain_opts;
  chain_opts.smart = options.smart;
  if (options.smart) {
    rng monitor_stream(substream_seed(seed, stream::monitor));
    chain_opts.lambda_hat.resize(channels.size());
    for (const channel_process& ch : channels) {
      channel_estimate est;
      est.channel_id = ch.channel_id;
      est = monitor_update(est, sample_pu_trace(ch, options.monitor_horizon, monitor_stream));
      chain_opts.lambda_hat[ch.channel_id] = est.lambda_hat;
    }
  }

  association_policy policy;
  policy.backup_channels = options.channels_per_link - 1;
  policy.backup_taps = options.taps_per_object - 1;
  const topology topo = form_topology(placed, channels, policy);
  result.signaling_messages = topo.signaling_messages;

  const absorbing_chain chain = build_chain(topo, placed, channels, chain_opts);
  const std::vector<double> steps = expected_absorption_steps(chain);

  rng d2d_stream(substream_seed(seed, stream::d2d));
  result.latency = compute_latency(placed, topo, chain, steps, options.d2d, d2d_stream);
  result.power = mean_power(placed, topo, power);

  rng reliability_stream(substream_seed(seed, stream::reliability));
  result.reliability = simulate_reliability(s.traffic, options, reliability_stream);
  return result;
}

namespace {

struct accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
  }
  stat_summary finish(std::size_t n) const {
    stat_summary out;
    out.mean = sum / static_cast<double>(n);
    if (n > 1) {
      const double var = std::max(0.0, (sum_sq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1));
      out.std_error = std::sqrt(var / static_cast<double>(n));
      out.ci_half_width = 1.96 * out.std_error;
    }
    return out;
  }
};

}  // namespace

metrics_summary summarize(const std::vector<replication_result>& results) {
  if (results.empty()) fail(errc::invalid_argument, "cannot summarize zero replications");
  accumulator tau_o, tau_p, tau_a, tau_total, ptx, pcomp, pstore, ptotal, rel, sig;
  for (const replication_result& r : results) {
    tau_o.add(r.latency.tau_o);
    tau_p.add(r.latency.tau_p);
    tau_a.add(r.latency.tau_a);
    tau_total.add(r.latency.tau_total);
    ptx.add(r.power.tx);
    pcomp.add(r.power.compute);
    pstore.add(r.power.storage);
    ptotal.add(r.power.total);
    rel.add(r.reliability);
    sig.add(static_cast<double>(r.signaling_messages));
  }
  const std::size_t n = results.size();
  metrics_summary out;
  out.replications = static_cast<std::uint32_t>(n);
  out.tau_o = tau_o.finish(n);
  out.tau_p = tau_p.finish(n);
  out.tau_a = tau_a.finish(n);
  out.tau_total = tau_total.finish(n);
  out.power_tx = ptx.finish(n);
  out.power_compute = pcomp.finish(n);
  out.power_storage = pstore.finish(n);
  out.power_total = ptotal.finish(n);
  out.reliability = rel.finish(n);
  out.signaling = sig.finish(n);
  return out;
}

std::vector<replication_result> run_replications(const scenario& s, const power_params& power,
                                                 const sim_options& options, std::uint32_t n_reps,
                                                 std::uint64_t base_seed, std::uint32_t parallelism) {
  if (n_reps < 1) fail(errc::invalid_argument, "replication count must be >= 1");
  if (parallelism < 1) parallelism = 1;

  std::vector<replication_result> results(n_reps);
  struct failure {
    errc code;
    std::string message;
  };
  std::vector<std::optional<failure>> failures(n_reps);

  const std::uint32_t workers = std::min(parallelism, n_reps);
  std::atomic<std::uint32_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::uint32_t k = next.fetch_add(1);
      if (k >= n_reps) return;
      const std::uint64_t seed = derive_seed(base_seed, k);
      try {
        results[k] = run_replication(s, power, options, seed);
      } catch (const error& e) {
        failures[k] = failure{e.code(), e.what()};
      } catch (const std::exception& e) {
        failures[k] = failure{errc::simulation, e.what()};
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  for (std::uint32_t k = 0; k < n_reps; ++k)
    if (failures[k])
      fail(failures[k]->code, "replication " + std::to_string(k) + " (seed " +
                                  std::to_string(derive_seed(base_seed, k)) + "): " + failures[k]->message);
  return results;
}

metrics_summary run_batch(const scenario& s, const power_params& power, const sim_options& options,
                          std::uint32_t n_reps, std::uint64_t base_seed, std::uint32_t parallelism) {
  return summarize(run_replications(s, power, options, n_reps, base_seed, parallelism));
}

}  // namespace rdna
