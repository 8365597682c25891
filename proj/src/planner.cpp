#include "planner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"

namespace rdna {

namespace {
constexpr int k_channel_search_cap = 64;
}

double switching_interval(double lambda_p, double xi_min) {
  if (!(lambda_p > 0.0)) fail(errc::invalid_argument, "lambda_p must be > 0");
  if (!(xi_min > 0.0)) fail(errc::invalid_argument, "xi_min must be > 0");
  if (xi_min >= 1.0) fail(errc::invalid_argument, "xi_min must be < 1: no interval keeps a positive objective");

  // g(t) = exp(-lambda t)(1 - lambda t) falls monotonically from 1 to 0 on
  // (0, 1/lambda), so the stationary point is the unique bracketed root.
  const auto g = [&](double t) { return std::exp(-lambda_p * t) * (1.0 - lambda_p * t); };
  double lo = 0.0;
  double hi = 1.0 / lambda_p;
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > xi_min)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::uint32_t backup_channel_count(const std::function<double(std::uint32_t)>& tau_of_w, double tau_max,
                                   std::uint32_t w_min, std::uint32_t w_max) {
  if (w_max < w_min) fail(errc::invalid_argument, "empty search range for backup channels");
  std::uint32_t best_w = w_min;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t w = w_min; w <= w_max; ++w) {
    const double gap = tau_max - tau_of_w(w);
    const double objective = gap * gap;
    if (objective < best) {  // strict: ties keep the smaller w
      best = objective;
      best_w = w;
    }
  }
  return best_w;
}

double tap_redundancy(double xi, std::uint32_t n_a) {
  if (!(xi >= 0.0 && xi <= 1.0)) fail(errc::invalid_argument, "xi must be in [0,1]");
  if (n_a < 1) fail(errc::invalid_argument, "n_a must be >= 1");
  return 1.0 - std::pow(1.0 - xi, static_cast<double>(n_a));
}

int min_backup_channels(double xi_attempt, std::uint32_t n_a, double xi_min) {
  if (n_a < 1) fail(errc::invalid_argument, "n_a must be >= 1");
  if (!(xi_attempt >= 0.0 && xi_attempt <= 1.0)) fail(errc::invalid_argument, "xi must be in [0,1]");
  // Feasibility is checked on the miss probability; 1 - (1-xi)^(w n_a) would
  // round to 1.0 long before the target is truly met when xi_min = 1.
  const double miss_budget = 1.0 - xi_min;
  for (int w = 1; w <= k_channel_search_cap; ++w) {
    const double miss = std::pow(1.0 - xi_attempt, static_cast<double>(w) * n_a);
    if (miss <= miss_budget) return w;
  }
  return -1;
}

double attempt_reliability(double mu_s_over_lambda_p) {
  if (!(mu_s_over_lambda_p > 0.0)) fail(errc::invalid_argument, "traffic ratio must be > 0");
  return mu_s_over_lambda_p / (mu_s_over_lambda_p + 1.0);
}

std::vector<surface_cell> reliability_surface(const std::vector<double>& ratios,
                                              const std::vector<std::uint32_t>& n_a_values,
                                              const std::vector<double>& xi_min_values, bool smart) {
  std::vector<surface_cell> cells;
  cells.reserve(ratios.size() * n_a_values.size() * xi_min_values.size());
  for (double ratio : ratios) {
    const double xi = smart ? 1.0 : attempt_reliability(ratio);
    for (std::uint32_t n_a : n_a_values) {
      for (double xi_min : xi_min_values) {
        if (!(xi_min > 0.0 && xi_min <= 1.0)) fail(errc::invalid_argument, "xi_min must be in (0,1]");
        cells.push_back({ratio, n_a, xi_min, min_backup_channels(xi, n_a, xi_min)});
      }
    }
  }
  return cells;
}

redundancy_plan make_plan(double lambda_p, double mu_s, double xi_min, double tau_max, std::uint32_t max_taps) {
  if (!(mu_s > 0.0)) fail(errc::invalid_argument, "mu_s must be > 0");
  if (!(tau_max > 0.0)) fail(errc::invalid_argument, "tau_max must be > 0");
  if (max_taps < 1) fail(errc::invalid_argument, "max_taps must be >= 1");

  redundancy_plan plan;
  plan.t_w_star = switching_interval(lambda_p, xi_min);

  const double xi = attempt_reliability(mu_s / lambda_p);
  const auto tau_of_w = [&](std::uint32_t w) {
    return 1.0 / (mu_s * (1.0 - std::pow(1.0 - xi, static_cast<double>(w))));
  };
  plan.w_star = backup_channel_count(tau_of_w, tau_max, 1, k_channel_search_cap);
  plan.achieved_latency = tau_of_w(plan.w_star);

  // Smallest TAP set meeting the reliability target with w_star channels;
  // the full budget is reported when even max_taps falls short.
  plan.n_a = max_taps;
  for (std::uint32_t n_a = 1; n_a <= max_taps; ++n_a) {
    if (std::pow(1.0 - xi, static_cast<double>(plan.w_star) * n_a) <= 1.0 - xi_min) {
      plan.n_a = n_a;
      break;
    }
  }
  plan.achieved_reliability = 1.0 - std::pow(1.0 - xi, static_cast<double>(plan.w_star) * plan.n_a);
  return plan;
}

}  // namespace rdna
