#include "experiments.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "planner.hpp"

namespace rdna {

namespace {

void ensure_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(errc::io, "cannot create output directory '" + out_dir + "': " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void emit_config_header(csv_writer& out, const run_config& cfg) {
  std::istringstream lines(render_config(cfg));
  std::string line;
  while (std::getline(lines, line)) out.comment(line);
}

}  // namespace

run_config sweep_preset(std::uint32_t n_objects, std::uint32_t n_taps) {
  run_config cfg;
  cfg.scn.n_objects = n_objects;
  cfg.scn.n_taps = n_taps;
  cfg.scn.n_channels = 4;
  cfg.scn.n_users = 40;
  cfg.scn.area_side = 100.0;
  cfg.scn.msg_size = 1.0;
  cfg.scn.channel_rate = 10.0;  // slot of 0.1 time units

  tap_profile profile;
  profile.backhaul = backhaul_kind::wireless;
  profile.compute_capacity = 4.0;
  profile.storage_capacity = 100.0;
  profile.availability = 1.0;
  profile.incentive_weight = 0.0;
  cfg.scn.taps.assign(n_taps, profile);

  traffic_params& t = cfg.scn.traffic;
  t.mu_s = 6.0;
  t.lambda_p = 1.0;
  t.mu_p = 1.0;
  t.p_share = 0.8;
  t.tau_p_per_unit = 0.02;
  t.tau_a_base = 0.15;
  t.tau_d2d = 0.01;
  t.link_scale_ref = 20.0;
  t.link_scale_exp = 1.0;

  cfg.options.messages = 1000;
  cfg.options.monitor_horizon = 200.0;
  return cfg;
}

void write_run_outputs(const run_config& cfg, const std::string& out_dir) {
  ensure_dir(out_dir);
  const std::vector<replication_result> reps =
      run_replications(cfg.scn, cfg.power, cfg.options, cfg.replications, cfg.seed, cfg.parallelism);
  const metrics_summary summary = summarize(reps);

  {
    csv_writer out(join(out_dir, "replications.csv"));
    emit_config_header(out, cfg);
    out.row({"replication", "seed", "tau_o", "tau_p", "tau_a", "tau_total", "p_tx", "p_compute", "p_storage",
             "p_total", "reliability", "signaling_messages"});
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const replication_result& r = reps[k];
      out.row({std::to_string(k), std::to_string(r.seed), format_double(r.latency.tau_o),
               format_double(r.latency.tau_p), format_double(r.latency.tau_a), format_double(r.latency.tau_total),
               format_double(r.power.tx), format_double(r.power.compute), format_double(r.power.storage),
               format_double(r.power.total), format_double(r.reliability), std::to_string(r.signaling_messages)});
    }
  }
  {
    csv_writer out(join(out_dir, "summary.csv"));
    emit_config_header(out, cfg);
    out.row({"metric", "mean", "std_error", "ci95_half_width", "replications"});
    const auto metric = [&](const char* name, const stat_summary& s) {
      out.row({name, format_double(s.mean), format_double(s.std_error), format_double(s.ci_half_width),
               std::to_string(summary.replications)});
    };
    metric("tau_o", summary.tau_o);
    metric("tau_p", summary.tau_p);
    metric("tau_a", summary.tau_a);
    metric("tau_total", summary.tau_total);
    metric("p_tx", summary.power_tx);
    metric("p_compute", summary.power_compute);
    metric("p_storage", summary.power_storage);
    metric("p_total", summary.power_total);
    metric("reliability", summary.reliability);
    metric("signaling_messages", summary.signaling);
  }
}

namespace {

struct variant_desc {
  const char* name;
  bool smart;
  bool d2d;
};

constexpr variant_desc k_fig4_variants[] = {
    {"baseline", false, false},
    {"smart", true, false},
    {"d2d", false, true},
    {"smart_d2d", true, true},
};

}  // namespace

void write_fig4(const fig4_params& params, const std::string& out_dir) {
  if (params.n_o_values.empty()) fail(errc::invalid_argument, "fig4 requires at least one n_o value");
  if (params.n_tap_max < params.n_tap_min) fail(errc::invalid_argument, "fig4 TAP range is empty");
  ensure_dir(out_dir);

  std::vector<std::uint32_t> n_o_values = params.n_o_values;
  std::sort(n_o_values.begin(), n_o_values.end());

  for (const variant_desc& variant : k_fig4_variants) {
    csv_writer out(join(out_dir, std::string("fig4_") + variant.name + ".csv"));
    run_config doc = sweep_preset(n_o_values.front(), params.n_tap_min);
    doc.options.smart = variant.smart;
    doc.options.d2d = variant.d2d;
    doc.replications = params.replications;
    doc.seed = params.seed;
    doc.parallelism = params.parallelism;
    out.comment(std::string("fig4 variant ") + variant.name + "; n_o and n_tap sweep the preset below");
    emit_config_header(out, doc);
    out.row({"n_o", "n_tap", "tau_total_mean", "tau_total_ci_low", "tau_total_ci_high", "tau_o_mean", "tau_p_mean",
             "tau_a_mean"});
    for (std::uint32_t n_o : n_o_values) {
      for (std::uint32_t n_tap = params.n_tap_min; n_tap <= params.n_tap_max; ++n_tap) {
        run_config cfg = sweep_preset(n_o, n_tap);
        cfg.options.smart = variant.smart;
        cfg.options.d2d = variant.d2d;
        // Same base seed at every sweep point: replication k shares its
        // placement draws across TAP counts and variants.
        const metrics_summary m =
            run_batch(cfg.scn, cfg.power, cfg.options, params.replications, params.seed, params.parallelism);
        out.row({std::to_string(n_o), std::to_string(n_tap), format_double(m.tau_total.mean),
                 format_double(m.tau_total.mean - m.tau_total.ci_half_width),
                 format_double(m.tau_total.mean + m.tau_total.ci_half_width), format_double(m.tau_o.mean),
                 format_double(m.tau_p.mean), format_double(m.tau_a.mean)});
      }
    }
  }
}

void write_fig5(const fig5_params& params, const std::string& out_dir) {
  if (params.n_tap_max < params.n_tap_min) fail(errc::invalid_argument, "fig5 TAP range is empty");
  ensure_dir(out_dir);

  csv_writer out(join(out_dir, "fig5.csv"));
  run_config doc = sweep_preset(params.n_objects, params.n_tap_min);
  doc.replications = params.replications;
  doc.seed = params.seed;
  doc.parallelism = params.parallelism;
  out.comment("fig5 mean power vs. number of TAPs; n_tap sweeps the preset below");
  emit_config_header(out, doc);
  out.row({"n_tap", "p_tx_mean", "p_tx_ci_low", "p_tx_ci_high", "p_compute_mean", "p_storage_mean", "p_switch_mean",
           "p_total_mean", "p_total_ci_low", "p_total_ci_high"});
  for (std::uint32_t n_tap = params.n_tap_min; n_tap <= params.n_tap_max; ++n_tap) {
    run_config cfg = sweep_preset(params.n_objects, n_tap);
    const metrics_summary m =
        run_batch(cfg.scn, cfg.power, cfg.options, params.replications, params.seed, params.parallelism);
    out.row({std::to_string(n_tap), format_double(m.power_tx.mean),
             format_double(m.power_tx.mean - m.power_tx.ci_half_width),
             format_double(m.power_tx.mean + m.power_tx.ci_half_width), format_double(m.power_compute.mean),
             format_double(m.power_storage.mean), format_double(k_switching_power),
             format_double(m.power_total.mean), format_double(m.power_total.mean - m.power_total.ci_half_width),
             format_double(m.power_total.mean + m.power_total.ci_half_width)});
  }
}

void write_fig6(const fig6_params& params, const std::string& out_dir) {
  if (params.ratios.empty() || params.n_a_values.empty() || params.xi_min_values.empty())
    fail(errc::invalid_argument, "fig6 requires nonempty ratio, n_a and xi_min lists");
  ensure_dir(out_dir);

  std::vector<double> ratios = params.ratios;
  std::vector<std::uint32_t> n_a_values = params.n_a_values;
  std::vector<double> xi_values = params.xi_min_values;
  std::sort(ratios.begin(), ratios.end());
  std::sort(n_a_values.begin(), n_a_values.end());
  std::sort(xi_values.begin(), xi_values.end());

  const std::vector<surface_cell> cells = reliability_surface(ratios, n_a_values, xi_values, params.smart);

  csv_writer out(join(out_dir, params.smart ? "fig6_smart.csv" : "fig6.csv"));
  out.comment("fig6 minimal backup channel count w per (mu_s/lambda_p ratio, n_a, xi_min); -1 = infeasible");
  out.comment(params.smart ? "smart monitoring: transmissions scheduled into known-idle windows"
                           : "per-attempt link reliability xi = ratio / (ratio + 1)");
  out.row({"ratio", "n_a", "xi_min", "w"});
  for (const surface_cell& cell : cells)
    out.row({format_double(cell.ratio), std::to_string(cell.n_a), format_double(cell.xi_min),
             std::to_string(cell.min_channels)});
}

}  // namespace rdna
