// Experiment presets and CSV emitters: single runs, the latency sweep, the
// power sweep and the reliability surface. Parameter values behind the
// sweeps are documented in the generated file headers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace rdna {

// Case-study world: objects reach the Internet over 4 unit-bandwidth
// channels shared with primary users, 40 end-users, a 100 m square region,
// and PU pressure that grows with link distance so denser TAP deployments
// shorten both retries and airtime.
run_config sweep_preset(std::uint32_t n_objects, std::uint32_t n_taps);

// summary.csv + replications.csv for one configuration.
void write_run_outputs(const run_config& cfg, const std::string& out_dir);

struct fig4_params {
  std::vector<std::uint32_t> n_o_values{20, 40, 60};
  std::uint32_t n_tap_min = 2;
  std::uint32_t n_tap_max = 20;
  std::uint32_t replications = 200;
  std::uint64_t seed = 1;
  std::uint32_t parallelism = 1;
};

// Mean latency vs. number of TAPs, four variants: baseline, smart, d2d,
// smart_d2d. One file per variant, common random numbers across variants
// and TAP counts.
void write_fig4(const fig4_params& params, const std::string& out_dir);

struct fig5_params {
  std::uint32_t n_objects = 40;
  std::uint32_t n_tap_min = 2;
  std::uint32_t n_tap_max = 20;
  std::uint32_t replications = 200;
  std::uint64_t seed = 1;
  std::uint32_t parallelism = 1;
};

// Mean power vs. number of TAPs with the tx/compute/storage breakdown and the
// (identically zero) switching column.
void write_fig5(const fig5_params& params, const std::string& out_dir);

struct fig6_params {
  std::vector<double> ratios{1.0, 2.0, 4.0, 6.0};
  std::vector<std::uint32_t> n_a_values{1, 2, 3, 4};
  std::vector<double> xi_min_values{0.9, 0.99, 0.999, 0.9999};
  bool smart = false;
};

// Minimal backup channel count per (ratio, n_a, xi_min) cell; infeasible
// cells carry -1.
void write_fig6(const fig6_params& params, const std::string& out_dir);

}  // namespace rdna
