// Redundancy planning: optimal channel switching interval, backup channel
// count against a latency budget, TAP redundancy, and the reliability surface
// of minimal channel counts per (traffic ratio, TAP set size, target).
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rdna {

// t_w* = argmax_t t * (exp(-lambda_p t) - xi_min): the longest switching
// interval worth keeping under the reliability target. Solved via the
// stationarity condition exp(-lambda t)(1 - lambda t) = xi_min by bisection
// on (0, 1/lambda) to 1e-9 relative tolerance.
double switching_interval(double lambda_p, double xi_min);

// w* = argmin_{w in [w_min, w_max]} (tau_max - tau(w))^2, ties to smaller w.
std::uint32_t backup_channel_count(const std::function<double(std::uint32_t)>& tau_of_w, double tau_max,
                                   std::uint32_t w_min, std::uint32_t w_max);

// Reliability of n_a redundant TAPs on a link of reliability xi:
// 1 - (1 - xi)^n_a.
double tap_redundancy(double xi, std::uint32_t n_a);

// Smallest w >= 1 with 1 - (1 - xi)^(w * n_a) >= xi_min, or -1 when no
// channel count up to the search cap reaches the target.
int min_backup_channels(double xi_attempt, std::uint32_t n_a, double xi_min);

// Per-attempt link reliability of a secondary transmission racing a PU
// return, both exponential: mu_s / (mu_s + lambda_p).
double attempt_reliability(double mu_s_over_lambda_p);

struct surface_cell {
  double ratio = 0.0;        // mu_s / lambda_p
  std::uint32_t n_a = 1;     // TAPs per object (primary + backups)
  double xi_min = 0.0;       // required link reliability
  int min_channels = -1;     // smallest feasible w; -1 = infeasible
};

// Minimal channel counts over the full (ratio, n_a, xi_min) grid. With smart
// monitoring the TAP knows which channel stays idle through the transmission,
// so the per-attempt reliability is 1 and a single channel always suffices.
std::vector<surface_cell> reliability_surface(const std::vector<double>& ratios,
                                              const std::vector<std::uint32_t>& n_a_values,
                                              const std::vector<double>& xi_min_values, bool smart);

struct redundancy_plan {
  double t_w_star = 0.0;
  std::uint32_t w_star = 1;
  std::uint32_t n_a = 1;
  double achieved_reliability = 0.0;
  double achieved_latency = 0.0;
};

// End-to-end plan for one link under the analytic geometric-retry latency
// model tau(w) = 1 / (mu_s * (1 - (1 - xi)^w)).
redundancy_plan make_plan(double lambda_p, double mu_s, double xi_min, double tau_max, std::uint32_t max_taps);

}  // namespace rdna
