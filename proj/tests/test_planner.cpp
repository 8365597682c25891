// Redundancy optimizers against grid-search and brute-force oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "error.hpp"
#include "planner.hpp"
#include "rng.hpp"

using namespace rdna;

namespace {

// Grid argmax of f(t) = t (exp(-lambda t) - xi) over (0, 1/lambda].
double grid_switching_interval(double lambda, double xi, double step) {
  double best_t = step, best_f = -1e300;
  const long n = static_cast<long>(1.0 / lambda / step);
  for (long i = 1; i <= n; ++i) {
    const double t = step * static_cast<double>(i);
    const double f = t * (std::exp(-lambda * t) - xi);
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
  }
  return best_t;
}

double objective(double lambda, double xi, double t) { return t * (std::exp(-lambda * t) - xi); }

}  // namespace

TEST_CASE("switching interval solves the stationarity condition") {
  const double t = switching_interval(1.0, 0.9);
  // grid-search value at step 1e-6: 0.05198
  CHECK(t == doctest::Approx(0.05198).epsilon(1e-3));
  CHECK(std::fabs(std::exp(-t) * (1.0 - t) - 0.9) < 1e-6);

  // beats a fine grid around the optimum
  const double grid_best = grid_switching_interval(1.0, 0.9, 1e-6);
  CHECK(objective(1.0, 0.9, t) >= objective(1.0, 0.9, grid_best) - 1e-12);
}

TEST_CASE("switching interval collapses as xi_min approaches one") {
  const double mid = switching_interval(1.0, 0.999);
  const double tight = switching_interval(1.0, 1.0 - 1e-9);
  CHECK(tight < mid);
  CHECK(tight < 1e-4);
  CHECK_THROWS_AS(switching_interval(1.0, 1.0), error);
  CHECK_THROWS_AS(switching_interval(1.0, 0.0), error);
  CHECK_THROWS_AS(switching_interval(0.0, 0.5), error);
}

TEST_CASE("switching interval scales as 1/lambda") {
  const double base = switching_interval(1.0, 0.9);
  for (double k : {2.0, 5.0, 10.0}) {
    CHECK(switching_interval(k, 0.9) == doctest::Approx(base / k).epsilon(1e-6));
    // dimensional check against the grid oracle
    CHECK(grid_switching_interval(k, 0.9, 1e-7) == doctest::Approx(base / k).epsilon(1e-3));
  }
}

TEST_CASE("switching interval beats every grid point on random instances") {
  rng stream(404);
  for (int trial = 0; trial < 10; ++trial) {
    const double lambda = stream.uniform(0.5, 4.0);
    const double xi = stream.uniform(0.05, 0.98);
    const double t = switching_interval(lambda, xi);
    CHECK(std::fabs(std::exp(-lambda * t) * (1.0 - lambda * t) - xi) < 1e-6);
    const double f_star = objective(lambda, xi, t);
    const double step = 1e-4 * t;
    for (int i = 1; i <= 20000; ++i) {
      const double probe = step * static_cast<double>(i);
      CHECK(f_star >= objective(lambda, xi, probe) - 1e-12);
    }
  }
}

TEST_CASE("backup channel count") {
  SUBCASE("exact latency hit") {
    const auto tau = [](std::uint32_t w) { return w == 3 ? 1.0 : 10.0 + w; };
    CHECK(backup_channel_count(tau, 1.0, 1, 8) == 3);
  }
  SUBCASE("constant latency ties to w_min") {
    const auto tau = [](std::uint32_t) { return 2.5; };
    CHECK(backup_channel_count(tau, 1.0, 2, 9) == 2);
  }
  SUBCASE("empty range is an error") {
    const auto tau = [](std::uint32_t) { return 1.0; };
    CHECK_THROWS_AS(backup_channel_count(tau, 1.0, 5, 4), error);
  }
  SUBCASE("matches exhaustive argmin on random decreasing tables") {
    rng stream(99);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint32_t len = 1 + static_cast<std::uint32_t>(stream.below(10));
      std::vector<double> table(len);
      double v = stream.uniform(1.0, 5.0);
      for (double& cell : table) {
        cell = v;
        v -= stream.uniform(0.0, 0.8);
      }
      const double tau_max = stream.uniform(-0.5, 5.0);
      const std::uint32_t got = backup_channel_count([&](std::uint32_t w) { return table[w - 1]; }, tau_max, 1, len);
      std::uint32_t best_w = 1;
      double best = 1e300;
      for (std::uint32_t w = 1; w <= len; ++w) {
        const double gap = (tau_max - table[w - 1]) * (tau_max - table[w - 1]);
        if (gap < best) {
          best = gap;
          best_w = w;
        }
      }
      CHECK(got == best_w);
    }
  }
}

TEST_CASE("tap redundancy formula") {
  CHECK(tap_redundancy(0.42, 1) == doctest::Approx(0.42).epsilon(1e-15));
  CHECK(tap_redundancy(0.9, 2) == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(tap_redundancy(6.0 / 7.0, 3) == doctest::Approx(1.0 - std::pow(1.0 / 7.0, 3)).epsilon(1e-12));
  CHECK_THROWS_AS(tap_redundancy(1.5, 2), error);
  CHECK_THROWS_AS(tap_redundancy(0.5, 0), error);

  SUBCASE("Monte Carlo over independent alternatives agrees") {
    rng stream(7);
    const double xi = 6.0 / 7.0;
    const int n_a = 3;
    const int trials = 1000000;
    int success = 0;
    for (int t = 0; t < trials; ++t) {
      bool ok = false;
      for (int a = 0; a < n_a && !ok; ++a) ok = stream.bernoulli(xi);
      if (ok) ++success;
    }
    const double expected = tap_redundancy(xi, n_a);
    const double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    CHECK(std::fabs(static_cast<double>(success) / trials - expected) <= 3.0 * sigma);
  }

  SUBCASE("strictly increasing in xi and n_a, bounded by one") {
    for (double xi : {0.1, 0.4, 0.7, 0.95}) {
      for (std::uint32_t n_a = 1; n_a < 6; ++n_a) {
        CHECK(tap_redundancy(xi, n_a + 1) > tap_redundancy(xi, n_a));
        CHECK(tap_redundancy(xi + 0.04, n_a) > tap_redundancy(xi, n_a));
        CHECK(tap_redundancy(xi, n_a) <= 1.0);
      }
    }
  }
}

TEST_CASE("reliability surface") {
  SUBCASE("one channel suffices when the target is below the attempt reliability") {
    for (std::uint32_t n_a : {1u, 2u, 5u}) CHECK(min_backup_channels(6.0 / 7.0, n_a, 0.85) == 1);
  }
  SUBCASE("ratio 6, two TAPs, 0.999 needs two channels") {
    const double xi = attempt_reliability(6.0);
    CHECK(xi == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
    CHECK(min_backup_channels(xi, 2, 0.999) == 2);  // 1-(1/7)^2 < 0.999 <= 1-(1/7)^4
    CHECK(min_backup_channels(xi, 4, 0.999) == 1);
  }
  SUBCASE("infeasible cells carry the sentinel") {
    CHECK(min_backup_channels(0.5, 1, 1.0) == -1);
    CHECK(min_backup_channels(1.0, 1, 1.0) == 1);
  }
  SUBCASE("smart monitoring reaches any target with one channel") {
    const std::vector<surface_cell> cells =
        reliability_surface({1.0, 6.0}, {1, 2, 3}, {0.9, 0.999, 0.9999, 1.0}, true);
    for (const surface_cell& cell : cells) CHECK(cell.min_channels == 1);
  }
  SUBCASE("minimal w is monotone across the grid") {
    const std::vector<double> ratios{0.5, 1.0, 2.0, 4.0, 6.0};
    const std::vector<std::uint32_t> n_a{1, 2, 3, 4};
    const std::vector<double> xi_min{0.9, 0.99, 0.999, 0.9999};
    const std::vector<surface_cell> cells = reliability_surface(ratios, n_a, xi_min, false);
    const auto at = [&](std::size_t ri, std::size_t ai, std::size_t xi) {
      return cells[(ri * n_a.size() + ai) * xi_min.size() + xi].min_channels;
    };
    const auto effective = [](int w) { return w < 0 ? 1 << 20 : w; };  // sentinel = worst
    for (std::size_t ri = 0; ri < ratios.size(); ++ri)
      for (std::size_t ai = 0; ai < n_a.size(); ++ai)
        for (std::size_t xi = 0; xi < xi_min.size(); ++xi) {
          if (ri + 1 < ratios.size()) CHECK(effective(at(ri + 1, ai, xi)) <= effective(at(ri, ai, xi)));
          if (ai + 1 < n_a.size()) CHECK(effective(at(ri, ai + 1, xi)) <= effective(at(ri, ai, xi)));
          if (xi + 1 < xi_min.size()) CHECK(effective(at(ri, ai, xi + 1)) >= effective(at(ri, ai, xi)));
        }
  }
  SUBCASE("bad targets are rejected") {
    CHECK_THROWS_AS(reliability_surface({1.0}, {1}, {1.5}, false), error);
    CHECK_THROWS_AS(reliability_surface({-1.0}, {1}, {0.9}, false), error);
  }
}

TEST_CASE("make_plan assembles a consistent link plan") {
  const redundancy_plan plan = make_plan(1.0, 6.0, 0.999, 0.2, 8);
  CHECK(std::fabs(std::exp(-plan.t_w_star) * (1.0 - plan.t_w_star) - 0.999) < 1e-6);
  CHECK(plan.w_star >= 1);
  CHECK(plan.n_a >= 1);
  CHECK(plan.achieved_reliability >= 0.999);
  CHECK(plan.achieved_latency > 0.0);
  CHECK_THROWS_AS(make_plan(1.0, 0.0, 0.9, 0.2, 8), error);
}
