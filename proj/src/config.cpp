#include "config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"

namespace rdna {

namespace {

struct parse_state {
  std::string origin;
  int line = 0;

  [[noreturn]] void bail(const std::string& message) const {
    fail(errc::parse, origin + ":" + std::to_string(line) + ": " + message);
  }
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const parse_state& st, const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE)
    st.bail("key '" + key + "' expects a number, got '" + value + "'");
  return v;
}

std::int64_t parse_integer(const parse_state& st, const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE)
    st.bail("key '" + key + "' expects an integer, got '" + value + "'");
  return v;
}

std::uint32_t parse_count(const parse_state& st, const std::string& key, const std::string& value,
                          std::int64_t min_value) {
  const std::int64_t v = parse_integer(st, key, value);
  if (v < min_value)
    st.bail("key '" + key + "' must be >= " + std::to_string(min_value) + ", got " + value);
  return static_cast<std::uint32_t>(v);
}

bool parse_bool(const parse_state& st, const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  st.bail("key '" + key + "' expects true/false, got '" + value + "'");
}

}  // namespace

run_config parse_config_text(const std::string& text, const std::string& origin) {
  run_config cfg;
  // Presets fix 40 end-users; explicit configs may override.
  cfg.scn.n_users = 40;
  tap_profile profile;

  parse_state st{origin, 0};
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::set<std::string> seen;
  bool have_n_o = false, have_n_tap = false, have_n_channels = false;

  while (std::getline(in, raw)) {
    ++st.line;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') st.bail("malformed section header '" + line + "'");
      section = line.substr(1, line.size() - 2);
      if (section != "scenario" && section != "traffic" && section != "power" && section != "experiment")
        st.bail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) st.bail("expected key = value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) st.bail("key '" + key + "' appears before any section");
    if (key.empty()) st.bail("empty key");
    const std::string qualified = section + "." + key;
    if (!seen.insert(qualified).second) st.bail("duplicate key '" + qualified + "'");

    if (section == "scenario") {
      if (key == "n_o") { cfg.scn.n_objects = parse_count(st, key, value, 0); have_n_o = true; }
      else if (key == "n_tap") { cfg.scn.n_taps = parse_count(st, key, value, 1); have_n_tap = true; }
      else if (key == "n_channels") { cfg.scn.n_channels = parse_count(st, key, value, 1); have_n_channels = true; }
      else if (key == "n_users") cfg.scn.n_users = parse_count(st, key, value, 0);
      else if (key == "area_side") cfg.scn.area_side = parse_number(st, key, value);
      else if (key == "msg_size") cfg.scn.msg_size = parse_number(st, key, value);
      else if (key == "channel_rate") cfg.scn.channel_rate = parse_number(st, key, value);
      else if (key == "tap_backhaul") {
        if (value == "wired") profile.backhaul = backhaul_kind::wired;
        else if (value == "wireless") profile.backhaul = backhaul_kind::wireless;
        else st.bail("key 'tap_backhaul' expects wired or wireless, got '" + value + "'");
      }
      else if (key == "tap_compute_capacity") profile.compute_capacity = parse_number(st, key, value);
      else if (key == "tap_storage_capacity") profile.storage_capacity = parse_number(st, key, value);
      else if (key == "tap_availability") profile.availability = parse_number(st, key, value);
      else if (key == "tap_incentive_weight") profile.incentive_weight = parse_number(st, key, value);
      else st.bail("unknown key '" + key + "' in [scenario]");
    } else if (section == "traffic") {
      traffic_params& t = cfg.scn.traffic;
      if (key == "mu_s") t.mu_s = parse_number(st, key, value);
      else if (key == "lambda_p") t.lambda_p = parse_number(st, key, value);
      else if (key == "mu_p") t.mu_p = parse_number(st, key, value);
      else if (key == "p_share") t.p_share = parse_number(st, key, value);
      else if (key == "tau_p_per_unit") t.tau_p_per_unit = parse_number(st, key, value);
      else if (key == "tau_a_base") t.tau_a_base = parse_number(st, key, value);
      else if (key == "tau_d2d") t.tau_d2d = parse_number(st, key, value);
      else if (key == "link_scale_ref") t.link_scale_ref = parse_number(st, key, value);
      else if (key == "link_scale_exp") t.link_scale_exp = parse_number(st, key, value);
      else st.bail("unknown key '" + key + "' in [traffic]");
    } else if (section == "power") {
      power_params& p = cfg.power;
      if (key == "tx_power") p.tx_power = parse_number(st, key, value);
      else if (key == "snr0") p.snr0 = parse_number(st, key, value);
      else if (key == "d0") p.d0 = parse_number(st, key, value);
      else if (key == "path_loss_exp") p.path_loss_exp = parse_number(st, key, value);
      else if (key == "min_distance") p.min_distance = parse_number(st, key, value);
      else if (key == "e_compute_per_unit") p.e_compute_per_unit = parse_number(st, key, value);
      else if (key == "p_storage_per_unit") p.p_storage_per_unit = parse_number(st, key, value);
      else if (key == "msg_rate") p.msg_rate = parse_number(st, key, value);
      else st.bail("unknown key '" + key + "' in [power]");
    } else {  // experiment
      if (key == "reps") cfg.replications = parse_count(st, key, value, 1);
      else if (key == "seed") {
        const std::int64_t v = parse_integer(st, key, value);
        if (v < 0) st.bail("key 'seed' must be >= 0");
        cfg.seed = static_cast<std::uint64_t>(v);
      }
      else if (key == "parallelism") cfg.parallelism = parse_count(st, key, value, 1);
      else if (key == "smart") cfg.options.smart = parse_bool(st, key, value);
      else if (key == "d2d") cfg.options.d2d = parse_bool(st, key, value);
      else if (key == "w") cfg.options.channels_per_link = parse_count(st, key, value, 1);
      else if (key == "n_a") cfg.options.taps_per_object = parse_count(st, key, value, 1);
      else if (key == "messages") cfg.options.messages = parse_count(st, key, value, 1);
      else if (key == "monitor_horizon") cfg.options.monitor_horizon = parse_number(st, key, value);
      else st.bail("unknown key '" + key + "' in [experiment]");
    }
  }

  st.line = 0;
  if (!have_n_o) st.bail("missing required key [scenario] n_o");
  if (!have_n_tap) st.bail("missing required key [scenario] n_tap");
  if (!have_n_channels) st.bail("missing required key [scenario] n_channels");

  cfg.scn.taps.assign(cfg.scn.n_taps, profile);
  validate_scenario(cfg.scn);
  return cfg;
}

run_config parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string render_config(const run_config& cfg) {
  std::ostringstream out;
  const tap_profile profile = cfg.scn.taps.empty() ? tap_profile{} : cfg.scn.taps.front();
  out << "[scenario]\n"
      << "n_o = " << cfg.scn.n_objects << "\n"
      << "n_tap = " << cfg.scn.n_taps << "\n"
      << "n_channels = " << cfg.scn.n_channels << "\n"
      << "n_users = " << cfg.scn.n_users << "\n"
      << "area_side = " << format_double(cfg.scn.area_side) << "\n"
      << "msg_size = " << format_double(cfg.scn.msg_size) << "\n"
      << "channel_rate = " << format_double(cfg.scn.channel_rate) << "\n"
      << "tap_backhaul = " << (profile.backhaul == backhaul_kind::wired ? "wired" : "wireless") << "\n"
      << "tap_compute_capacity = " << format_double(profile.compute_capacity) << "\n"
      << "tap_storage_capacity = " << format_double(profile.storage_capacity) << "\n"
      << "tap_availability = " << format_double(profile.availability) << "\n"
      << "tap_incentive_weight = " << format_double(profile.incentive_weight) << "\n"
      << "[traffic]\n"
      << "mu_s = " << format_double(cfg.scn.traffic.mu_s) << "\n"
      << "lambda_p = " << format_double(cfg.scn.traffic.lambda_p) << "\n"
      << "mu_p = " << format_double(cfg.scn.traffic.mu_p) << "\n"
      << "p_share = " << format_double(cfg.scn.traffic.p_share) << "\n"
      << "tau_p_per_unit = " << format_double(cfg.scn.traffic.tau_p_per_unit) << "\n"
      << "tau_a_base = " << format_double(cfg.scn.traffic.tau_a_base) << "\n"
      << "tau_d2d = " << format_double(cfg.scn.traffic.tau_d2d) << "\n"
      << "link_scale_ref = " << format_double(cfg.scn.traffic.link_scale_ref) << "\n"
      << "link_scale_exp = " << format_double(cfg.scn.traffic.link_scale_exp) << "\n"
      << "[power]\n"
      << "tx_power = " << format_double(cfg.power.tx_power) << "\n"
      << "snr0 = " << format_double(cfg.power.snr0) << "\n"
      << "d0 = " << format_double(cfg.power.d0) << "\n"
      << "path_loss_exp = " << format_double(cfg.power.path_loss_exp) << "\n"
      << "min_distance = " << format_double(cfg.power.min_distance) << "\n"
      << "e_compute_per_unit = " << format_double(cfg.power.e_compute_per_unit) << "\n"
      << "p_storage_per_unit = " << format_double(cfg.power.p_storage_per_unit) << "\n"
      << "msg_rate = " << format_double(cfg.power.msg_rate) << "\n"
      << "[experiment]\n"
      << "reps = " << cfg.replications << "\n"
      << "seed = " << cfg.seed << "\n"
      << "parallelism = " << cfg.parallelism << "\n"
      << "smart = " << (cfg.options.smart ? "true" : "false") << "\n"
      << "d2d = " << (cfg.options.d2d ? "true" : "false") << "\n"
      << "w = " << cfg.options.channels_per_link << "\n"
      << "n_a = " << cfg.options.taps_per_object << "\n"
      << "messages = " << cfg.options.messages << "\n"
      << "monitor_horizon = " << format_double(cfg.options.monitor_horizon) << "\n";
  return out.str();
}

}  // namespace rdna
