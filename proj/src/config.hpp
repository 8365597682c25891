// Scenario configuration: a sectioned key=value text format. Unknown sections
// and keys are rejected, types are checked at parse time, and errors carry
// the offending location.
#pragma once

#include <cstdint>
#include <string>

#include "engine.hpp"
#include "power.hpp"
#include "scenario.hpp"

namespace rdna {

struct run_config {
  scenario scn;
  power_params power;
  sim_options options;
  std::uint32_t replications = 100;
  std::uint64_t seed = 1;
  std::uint32_t parallelism = 1;
};

// origin names the source in error messages (a path, or "<string>").
run_config parse_config_text(const std::string& text, const std::string& origin);
run_config parse_config_file(const std::string& path);

// Render a config back to its text form (all keys explicit); used to document
// presets in generated output headers.
std::string render_config(const run_config& cfg);

}  // namespace rdna
