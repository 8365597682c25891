// Primary-user channel dynamics: stationary availability of the on/off
// process, survival of a transmission against PU returns, trace sampling and
// the online arrival-rate monitor that TAPs run at the edge.
#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace rdna {

struct channel_process {
  std::uint32_t channel_id = 0;
  double lambda_p = 0.0;  // PU arrival rate while the channel is idle
  double mu_p = 1.0;      // PU departure rate (busy -> idle)
  // Per-link multiplier on lambda_p, row-major (object, tap); empty means
  // homogeneous (all 1). Models spatially varying PU pressure.
  std::vector<double> link_scale;
  std::uint32_t n_taps = 0;  // row stride of link_scale

  double scale(std::uint32_t object, std::uint32_t tap) const {
    if (link_scale.empty()) return 1.0;
    return link_scale[static_cast<std::size_t>(object) * n_taps + tap];
  }
};

// Stationary probability that the channel is idle on the given link:
// mu_p / (mu_p + lambda_p * scale).
double availability(const channel_process& ch, std::uint32_t object, std::uint32_t tap);

// Probability that no PU returns during a transmission of the given duration.
double transmission_survival(double lambda_p, double duration);

struct pu_busy_interval {
  double begin = 0.0;
  double end = 0.0;
};

struct pu_event_trace {
  std::uint32_t channel_id = 0;
  double horizon = 0.0;
  std::vector<pu_busy_interval> busy;  // sorted, disjoint, inside [0, horizon]

  double busy_time() const;
  std::uint64_t arrivals() const { return busy.size(); }
  double idle_time() const { return horizon - busy_time(); }
};

// Alternating idle/busy renewal process starting idle: idle ~ Exp(lambda_p),
// busy ~ Exp(mu_p). lambda_p = 0 yields an empty trace.
pu_event_trace sample_pu_trace(const channel_process& ch, double horizon, rng& stream);

struct channel_estimate {
  std::uint32_t channel_id = 0;
  double lambda_hat = 0.0;   // arrivals per unit idle time
  std::uint64_t n_obs = 0;   // PU arrivals observed so far
  double window = 0.0;       // accumulated idle (observable) time
};

// Folds one observed trace into the estimate: lambda_hat becomes total
// arrivals over total idle time.
channel_estimate monitor_update(channel_estimate estimate, const pu_event_trace& trace);

// Channel ids sorted by descending transmission survival over msg_duration
// under the estimated rates; ties broken by lower channel id.
std::vector<std::uint32_t> smart_assign(const std::vector<channel_estimate>& estimates, double msg_duration);

}  // namespace rdna
