#include "power.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace rdna {

double link_rate(double dist, const power_params& params) {
  const double d = std::max(dist, params.min_distance);
  const double snr = params.snr0 * std::pow(params.d0 / d, params.path_loss_exp);
  return std::log2(1.0 + snr);
}

power_breakdown mean_power(const placed_scenario& placed, const topology& topo, const power_params& params) {
  if (!(params.msg_rate >= 0.0)) fail(errc::invalid_argument, "msg_rate must be >= 0");
  const scenario& s = placed.world;

  power_breakdown out;
  std::size_t assigned = 0;
  for (std::uint32_t obj = 0; obj < topo.assignments.size(); ++obj) {
    const auto& asg = topo.assignments[obj];
    if (!asg) continue;
    ++assigned;

    const double airtime = s.msg_size / link_rate(asg->distance, params);
    double duty = airtime * params.msg_rate;
    if (duty > 1.0) {
      out.tx_overload = true;
      duty = 1.0;
    }
    out.tx += params.tx_power * duty;
    out.compute += params.e_compute_per_unit * s.msg_size * params.msg_rate;
    out.storage += params.p_storage_per_unit * s.msg_size;  // live payload retained at the TAP
  }
  if (assigned > 0) {
    const double inv = 1.0 / static_cast<double>(assigned);
    out.tx *= inv;
    out.compute *= inv;
    out.storage *= inv;
  }
  out.total = out.tx + out.compute + out.storage + k_switching_power;
  return out;
}

}  // namespace rdna
