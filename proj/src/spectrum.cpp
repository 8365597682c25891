#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace rdna {

double availability(const channel_process& ch, std::uint32_t object, std::uint32_t tap) {
  const double pressure = ch.lambda_p * ch.scale(object, tap);
  return ch.mu_p / (ch.mu_p + pressure);
}

double transmission_survival(double lambda_p, double duration) {
  if (duration < 0.0) fail(errc::invalid_argument, "transmission duration must be >= 0");
  return std::exp(-lambda_p * duration);
}

double pu_event_trace::busy_time() const {
  double total = 0.0;
  for (const pu_busy_interval& iv : busy) total += iv.end - iv.begin;
  return total;
}

pu_event_trace sample_pu_trace(const channel_process& ch, double horizon, rng& stream) {
  if (!(horizon > 0.0)) fail(errc::invalid_argument, "trace horizon must be > 0");
  pu_event_trace trace;
  trace.channel_id = ch.channel_id;
  trace.horizon = horizon;
  if (ch.lambda_p <= 0.0) return trace;
  double t = 0.0;
  while (true) {
    t += stream.exponential(ch.lambda_p);  // idle gap until the next PU arrival
    if (t >= horizon) break;
    const double begin = t;
    t += stream.exponential(ch.mu_p);  // busy period
    trace.busy.push_back({begin, std::min(t, horizon)});
    if (t >= horizon) break;
  }
  return trace;
}

channel_estimate monitor_update(channel_estimate estimate, const pu_event_trace& trace) {
  estimate.n_obs += trace.arrivals();
  estimate.window += trace.idle_time();
  estimate.lambda_hat = estimate.window > 0.0 ? static_cast<double>(estimate.n_obs) / estimate.window : 0.0;
  return estimate;
}

std::vector<std::uint32_t> smart_assign(const std::vector<channel_estimate>& estimates, double msg_duration) {
  if (estimates.empty()) fail(errc::invalid_argument, "smart_assign requires at least one channel");
  std::vector<std::uint32_t> order(estimates.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double sa = transmission_survival(estimates[a].lambda_hat, msg_duration);
    const double sb = transmission_survival(estimates[b].lambda_hat, msg_duration);
    if (sa != sb) return sa > sb;
    return estimates[a].channel_id < estimates[b].channel_id;
  });
  std::vector<std::uint32_t> ranked;
  ranked.reserve(order.size());
  for (std::uint32_t idx : order) ranked.push_back(estimates[idx].channel_id);
  return ranked;
}

}  // namespace rdna
