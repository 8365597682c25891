// Static world description: objects, terminal access points (TAPs), channels,
// geometry and workload parameters, plus uniform node placement.
#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace rdna {

enum class backhaul_kind { wired, wireless };

struct tap_profile {
  backhaul_kind backhaul = backhaul_kind::wireless;
  double compute_capacity = 1.0;   // pre-processing work units per unit time
  double storage_capacity = 100.0; // payload units the terminal will hold
  double availability = 1.0;       // probability the terminal serves in a slot
  double incentive_weight = 0.0;   // association tie-breaker only; no monetary model
};

struct traffic_params {
  double mu_s = 1.0;            // secondary-user service rate (messages per unit time)
  double lambda_p = 0.0;        // primary-user arrival rate per channel
  double mu_p = 1.0;            // primary-user departure rate (mean busy period 1/mu_p)
  double p_share = 0.0;         // probability a user request is served by a D2D neighbor
  double tau_p_per_unit = 0.0;  // pre-processing delay per payload unit
  double tau_a_base = 0.0;      // end-user access delay via BS/TAP
  double tau_d2d = 0.0;         // end-user access delay over a D2D link
  double link_scale_ref = 0.0;  // reference distance for PU pressure on a link; 0 = homogeneous
  double link_scale_exp = 2.0;  // exponent of the distance scaling
};

struct scenario {
  std::uint32_t n_objects = 0;
  std::uint32_t n_taps = 1;
  std::uint32_t n_channels = 1;  // every channel has unit bandwidth
  std::uint32_t n_users = 40;
  double area_side = 100.0;      // square deployment region, meters
  double msg_size = 1.0;         // payload units per message
  double channel_rate = 1.0;     // payload units per unit time on an idle channel
  std::vector<tap_profile> taps; // one profile per TAP
  traffic_params traffic;

  // Time one message occupies an idle unit-bandwidth channel; the Markov
  // chain's step length.
  double slot_duration() const { return msg_size / channel_rate; }
};

// Throws error{invalid_argument} naming the first violated field.
void validate_scenario(const scenario& s);

struct vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(const vec2& a, const vec2& b);

struct placed_scenario {
  scenario world;
  std::vector<vec2> object_positions;
  std::vector<vec2> tap_positions;
};

// Positions drawn i.i.d. uniform over the square, objects first and TAPs
// second from one stream. For a fixed seed and object count, the TAP layout
// of a smaller n_taps is a prefix of a larger one, which makes sweeps over
// n_taps pathwise comparable.
placed_scenario place_nodes(const scenario& s, rng& stream);

}  // namespace rdna
