// Mean per-object power for transmission, computation and storage. The radio
// transmits at fixed power for the airtime of each message, so mean tx power
// is the duty cycle times the transmit power; a log-distance rate model ties
// airtime to the assigned link length. Channel switching draws no power.
#pragma once

#include "scenario.hpp"
#include "topology.hpp"

namespace rdna {

struct power_params {
  double tx_power = 0.75;            // W while the radio is on
  double snr0 = 1.0e6;               // reference SNR at d0
  double d0 = 1.0;                   // reference distance, m
  double path_loss_exp = 3.0;
  double min_distance = 0.1;         // clamp for degenerate placements, m
  double e_compute_per_unit = 0.05;  // J per payload unit pre-processed
  double p_storage_per_unit = 0.01;  // W per stored payload unit
  double msg_rate = 0.5;             // messages per unit time per object
};

// Channel switching is not charged anywhere in the model.
inline constexpr double k_switching_power = 0.0;

struct power_breakdown {
  double tx = 0.0;
  double compute = 0.0;
  double storage = 0.0;
  double total = 0.0;
  // Duty cycle exceeded 1 on some link; tx is capped at full duty but the
  // overload is reported rather than hidden.
  bool tx_overload = false;
};

// Achievable rate (payload units per unit time) on a link of length dist.
double link_rate(double dist, const power_params& params);

power_breakdown mean_power(const placed_scenario& placed, const topology& topo, const power_params& params);

}  // namespace rdna
