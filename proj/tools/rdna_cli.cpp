// rdna command line: scenario runs, the latency/power/reliability sweeps and
// the link planner. Thin argument layer over the shared library C API.
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdna.h"

namespace {

constexpr int k_exit_usage = 1;       // parse/validation problems
constexpr int k_exit_simulation = 2;  // runtime failures

int exit_code_for(rdna_status status) {
  return (status == RDNA_ERR_PARSE || status == RDNA_ERR_INVALID_ARGUMENT) ? k_exit_usage : k_exit_simulation;
}

[[noreturn]] void die(int code, const std::string& message) {
  std::fprintf(stderr, "rdna: error: %s\n", message.c_str());
  std::exit(code);
}

[[noreturn]] void die_status(rdna_status status) { die(exit_code_for(status), rdna_last_error()); }

// RDNA_SEED overrides --seed for every subcommand that takes one.
void apply_seed_env(unsigned long long& seed) {
  const char* env = std::getenv("RDNA_SEED");
  if (!env || !*env) return;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || errno == ERANGE) die(k_exit_usage, "RDNA_SEED must be a nonnegative integer");
  seed = v;
}

struct tap_range {
  unsigned lo = 2;
  unsigned hi = 20;
};

tap_range parse_tap_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) die(k_exit_usage, "--n-tap-range expects A..B, got '" + text + "'");
  try {
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, sep)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(sep + 2)));
    if (lo < 1 || hi < lo) die(k_exit_usage, "--n-tap-range expects 1 <= A <= B, got '" + text + "'");
    return {lo, hi};
  } catch (const std::exception&) {
    die(k_exit_usage, "--n-tap-range expects A..B, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic edge network simulator and redundancy planner"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "simulate one scenario and write summary/replications CSV");
  std::string run_scenario;
  std::string run_out = "out";
  unsigned long long run_seed = 0;
  unsigned run_reps = 0;
  unsigned run_parallelism = 0;
  unsigned run_w = 0, run_na = 0;
  bool run_smart = false, run_d2d = false;
  run->add_option("--scenario", run_scenario, "scenario config file")->required();
  run->add_option("--out", run_out, "output directory");
  auto* run_seed_opt = run->add_option("--seed", run_seed, "base seed");
  auto* run_reps_opt = run->add_option("--reps", run_reps, "replication count");
  auto* run_par_opt = run->add_option("--parallelism", run_parallelism, "worker threads");
  auto* run_w_opt = run->add_option("--w", run_w, "channels per link (primary + backups)");
  auto* run_na_opt = run->add_option("--na", run_na, "TAPs per object (primary + backups)");
  run->add_flag("--smart", run_smart, "enable edge monitoring and smart channel assignment");
  run->add_flag("--d2d", run_d2d, "enable device-to-device data sharing");

  // fig4
  auto* fig4 = app.add_subcommand("fig4", "sweep mean latency vs number of TAPs (four variants)");
  std::string fig4_out = "out";
  std::vector<unsigned> fig4_n_o{20, 40, 60};
  std::string fig4_range = "2..20";
  unsigned long long fig4_seed = 1;
  unsigned fig4_reps = 200;
  unsigned fig4_parallelism = 1;
  fig4->add_option("--out", fig4_out, "output directory");
  fig4->add_option("--n-o", fig4_n_o, "object counts to sweep");
  fig4->add_option("--n-tap-range", fig4_range, "TAP count range A..B");
  fig4->add_option("--seed", fig4_seed, "base seed");
  fig4->add_option("--reps", fig4_reps, "replications per sweep point");
  fig4->add_option("--parallelism", fig4_parallelism, "worker threads");

  // fig5
  auto* fig5 = app.add_subcommand("fig5", "sweep mean power vs number of TAPs");
  std::string fig5_out = "out";
  unsigned fig5_n_o = 40;
  std::string fig5_range = "2..20";
  unsigned long long fig5_seed = 1;
  unsigned fig5_reps = 200;
  unsigned fig5_parallelism = 1;
  fig5->add_option("--out", fig5_out, "output directory");
  fig5->add_option("--n-o", fig5_n_o, "object count");
  fig5->add_option("--n-tap-range", fig5_range, "TAP count range A..B");
  fig5->add_option("--seed", fig5_seed, "base seed");
  fig5->add_option("--reps", fig5_reps, "replications per sweep point");
  fig5->add_option("--parallelism", fig5_parallelism, "worker threads");

  // fig6
  auto* fig6 = app.add_subcommand("fig6", "minimal backup channels vs required reliability");
  std::string fig6_out = "out";
  std::vector<double> fig6_ratios{1.0, 2.0, 4.0, 6.0};
  std::vector<unsigned> fig6_na{1, 2, 3, 4};
  std::vector<double> fig6_xi{0.9, 0.99, 0.999, 0.9999};
  bool fig6_smart = false;
  fig6->add_option("--out", fig6_out, "output directory");
  fig6->add_option("--ratios", fig6_ratios, "mu_s/lambda_p traffic ratios");
  fig6->add_option("--na", fig6_na, "TAP set sizes");
  fig6->add_option("--xi-grid", fig6_xi, "reliability targets in (0,1]");
  fig6->add_flag("--smart", fig6_smart, "ideal edge monitoring");

  // plan
  auto* plan = app.add_subcommand("plan", "redundancy plan for one link");
  double plan_lambda = 0.0, plan_xi = 0.0, plan_tau = 0.0, plan_mu = 0.0;
  unsigned plan_max_taps = 8;
  plan->add_option("--lambda-p", plan_lambda, "PU arrival rate")->required();
  plan->add_option("--xi-min", plan_xi, "required link reliability in (0,1)")->required();
  plan->add_option("--tau-max", plan_tau, "maximum tolerable latency")->required();
  auto* plan_mu_opt = plan->add_option("--mu-s", plan_mu, "SU service rate (default 6 * lambda-p)");
  plan->add_option("--max-taps", plan_max_taps, "largest TAP set to consider");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    die(k_exit_usage, e.what());
  }

  if (run->parsed()) {
    rdna_scenario* scenario = nullptr;
    rdna_status status = rdna_scenario_create_from_file(run_scenario.c_str(), &scenario);
    if (status != RDNA_OK) die_status(status);

    rdna_sim_options options;
    rdna_scenario_options(scenario, &options);
    if (run_smart) options.smart = 1;
    if (run_d2d) options.d2d = 1;
    if (run_w_opt->count()) options.channels_per_link = run_w;
    if (run_na_opt->count()) options.taps_per_object = run_na;

    // Config file [experiment] values unless overridden on the command line.
    unsigned long long seed = run_seed_opt->count() ? run_seed : rdna_scenario_seed(scenario);
    unsigned reps = run_reps_opt->count() ? run_reps : rdna_scenario_replications(scenario);
    unsigned parallelism = run_par_opt->count() ? run_parallelism : rdna_scenario_parallelism(scenario);
    apply_seed_env(seed);

    status = rdna_write_run_outputs(scenario, &options, reps, seed, parallelism, run_out.c_str());
    rdna_scenario_destroy(scenario);
    if (status != RDNA_OK) die_status(status);
    std::printf("wrote %s/summary.csv and %s/replications.csv\n", run_out.c_str(), run_out.c_str());
    return 0;
  }

  if (fig4->parsed()) {
    apply_seed_env(fig4_seed);
    const tap_range range = parse_tap_range(fig4_range);
    rdna_fig4_params params{fig4_n_o.data(), static_cast<unsigned>(fig4_n_o.size()),
                            range.lo,        range.hi,
                            fig4_reps,       fig4_seed,
                            fig4_parallelism};
    const rdna_status status = rdna_write_fig4(&params, fig4_out.c_str());
    if (status != RDNA_OK) die_status(status);
    std::printf("wrote %s/fig4_{baseline,smart,d2d,smart_d2d}.csv\n", fig4_out.c_str());
    return 0;
  }

  if (fig5->parsed()) {
    apply_seed_env(fig5_seed);
    const tap_range range = parse_tap_range(fig5_range);
    rdna_fig5_params params{fig5_n_o, range.lo, range.hi, fig5_reps, fig5_seed, fig5_parallelism};
    const rdna_status status = rdna_write_fig5(&params, fig5_out.c_str());
    if (status != RDNA_OK) die_status(status);
    std::printf("wrote %s/fig5.csv\n", fig5_out.c_str());
    return 0;
  }

  if (fig6->parsed()) {
    rdna_fig6_params params{fig6_ratios.data(),
                            static_cast<unsigned>(fig6_ratios.size()),
                            fig6_na.data(),
                            static_cast<unsigned>(fig6_na.size()),
                            fig6_xi.data(),
                            static_cast<unsigned>(fig6_xi.size()),
                            fig6_smart ? 1 : 0};
    const rdna_status status = rdna_write_fig6(&params, fig6_out.c_str());
    if (status != RDNA_OK) die_status(status);
    std::printf("wrote %s/%s\n", fig6_out.c_str(), fig6_smart ? "fig6_smart.csv" : "fig6.csv");
    return 0;
  }

  if (plan->parsed()) {
    const double mu_s = plan_mu_opt->count() ? plan_mu : 6.0 * plan_lambda;
    rdna_plan result;
    const rdna_status status = rdna_make_plan(plan_lambda, mu_s, plan_xi, plan_tau, plan_max_taps, &result);
    if (status != RDNA_OK) die_status(status);
    std::printf("t_w_star=%.9g\n", result.t_w_star);
    std::printf("w_star=%u\n", result.w_star);
    std::printf("n_a=%u\n", result.n_a);
    std::printf("achieved_reliability=%.9g\n", result.achieved_reliability);
    std::printf("achieved_latency=%.9g\n", result.achieved_latency);
    return 0;
  }

  return k_exit_usage;
}
