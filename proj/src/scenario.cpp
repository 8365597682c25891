#include "scenario.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace rdna {

void validate_scenario(const scenario& s) {
  // Checked in field declaration order so the first offender is reported.
  if (s.n_taps < 1) fail(errc::invalid_argument, "n_tap must be >= 1 (got " + std::to_string(s.n_taps) + ")");
  if (s.n_channels < 1) fail(errc::invalid_argument, "n_channels must be >= 1 (got " + std::to_string(s.n_channels) + ")");
  if (!(s.area_side > 0.0)) fail(errc::invalid_argument, "area_side must be > 0 (got " + std::to_string(s.area_side) + ")");
  if (!(s.msg_size > 0.0)) fail(errc::invalid_argument, "msg_size must be > 0");
  if (!(s.channel_rate > 0.0)) fail(errc::invalid_argument, "channel_rate must be > 0");
  if (s.taps.size() != s.n_taps)
    fail(errc::invalid_argument, "tap_profiles must have length n_tap (" + std::to_string(s.taps.size()) + " vs " +
                                     std::to_string(s.n_taps) + ")");
  for (std::size_t i = 0; i < s.taps.size(); ++i) {
    const tap_profile& t = s.taps[i];
    const std::string at = " (tap " + std::to_string(i) + ")";
    if (!(t.availability >= 0.0 && t.availability <= 1.0))
      fail(errc::invalid_argument, "tap_availability must be in [0,1]" + at);
    if (!(t.compute_capacity > 0.0)) fail(errc::invalid_argument, "tap_compute_capacity must be > 0" + at);
    if (!(t.storage_capacity >= 0.0)) fail(errc::invalid_argument, "tap_storage_capacity must be >= 0" + at);
    if (!(t.incentive_weight >= 0.0)) fail(errc::invalid_argument, "tap_incentive_weight must be >= 0" + at);
  }
  const traffic_params& tr = s.traffic;
  if (!(tr.mu_s > 0.0)) fail(errc::invalid_argument, "mu_s must be > 0");
  if (!(tr.lambda_p >= 0.0)) fail(errc::invalid_argument, "lambda_p must be >= 0");
  if (!(tr.mu_p > 0.0)) fail(errc::invalid_argument, "mu_p must be > 0");
  if (!(tr.p_share >= 0.0 && tr.p_share <= 1.0)) fail(errc::invalid_argument, "p_share must be in [0,1]");
  if (!(tr.tau_p_per_unit >= 0.0)) fail(errc::invalid_argument, "tau_p_per_unit must be >= 0");
  if (!(tr.tau_a_base >= 0.0)) fail(errc::invalid_argument, "tau_a_base must be >= 0");
  if (!(tr.tau_d2d >= 0.0)) fail(errc::invalid_argument, "tau_d2d must be >= 0");
  if (tr.tau_d2d > tr.tau_a_base) fail(errc::invalid_argument, "tau_d2d must not exceed tau_a_base");
  if (!(tr.link_scale_ref >= 0.0)) fail(errc::invalid_argument, "link_scale_ref must be >= 0");
}

double distance(const vec2& a, const vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

placed_scenario place_nodes(const scenario& s, rng& stream) {
  validate_scenario(s);
  placed_scenario placed;
  placed.world = s;
  placed.object_positions.reserve(s.n_objects);
  for (std::uint32_t i = 0; i < s.n_objects; ++i)
    placed.object_positions.push_back({stream.uniform(0.0, s.area_side), stream.uniform(0.0, s.area_side)});
  placed.tap_positions.reserve(s.n_taps);
  for (std::uint32_t j = 0; j < s.n_taps; ++j)
    placed.tap_positions.push_back({stream.uniform(0.0, s.area_side), stream.uniform(0.0, s.area_side)});
  return placed;
}

}  // namespace rdna
