#include "markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace rdna {

std::vector<double> solve_i_minus_q(std::size_t n, const std::vector<double>& q, std::vector<double> b) {
  // Dense LU with partial pivoting on A = I - Q; chains here stay small.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? 1.0 : 0.0) - q[i * n + j];

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(a[col * n + col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double v = std::fabs(a[row * n + col]);
      if (v > best) { best = v; pivot = row; }
    }
    if (best < 1e-14) fail(errc::simulation, "chain is not absorbing: (I - Q) is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      std::swap(b[col], b[pivot]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = a[row * n + col] * inv;
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[row * n + j] -= factor * a[col * n + j];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * n + j] * b[j];
    b[i] = acc / a[i * n + i];
  }
  return b;
}

void validate_chain(const absorbing_chain& chain) {
  const std::size_t n = chain.n_transient;
  const std::size_t m = chain.n_absorbing;
  if (chain.q.size() != n * n || chain.r.size() != n * m)
    fail(errc::invalid_argument, "chain matrix dimensions do not match the state counts");
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (chain.q_at(i, j) < 0.0) fail(errc::invalid_argument, "chain Q has a negative entry");
      row += chain.q_at(i, j);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (chain.r_at(i, j) < 0.0) fail(errc::invalid_argument, "chain R has a negative entry");
      row += chain.r_at(i, j);
    }
    if (std::fabs(row - 1.0) > 1e-12)
      fail(errc::invalid_argument, "chain row " + std::to_string(i) + " sums to " + std::to_string(row));
  }
  // Absorption certainty: N = (I - Q)^-1 exists and is nonnegative.
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<double> e(n, 0.0);
    e[col] = 1.0;
    const std::vector<double> column = solve_i_minus_q(n, chain.q, std::move(e));
    for (double v : column)
      if (v < -1e-9) fail(errc::invalid_argument, "fundamental matrix has a negative entry");
  }
}

namespace {

// Probability that at least one channel of the candidate set is idle on the
// link; the per-slot success of blind transmission over that set.
double any_idle(const std::vector<const channel_process*>& set, std::uint32_t obj, std::uint32_t tap) {
  double all_busy = 1.0;
  for (const channel_process* ch : set) all_busy *= 1.0 - availability(*ch, obj, tap);
  return 1.0 - all_busy;
}

}  // namespace

absorbing_chain build_chain(const topology& topo, const placed_scenario& placed,
                            const std::vector<channel_process>& channels, const chain_options& options) {
  const scenario& s = placed.world;
  absorbing_chain chain;
  chain.slot_duration = s.slot_duration();
  chain.n_absorbing = s.n_taps;

  std::vector<std::uint32_t> transit;
  for (std::uint32_t obj = 0; obj < topo.assignments.size(); ++obj)
    if (topo.assignments[obj].has_value()) transit.push_back(obj);

  const std::size_t n = transit.size();
  chain.n_transient = n;
  chain.objects = transit;
  chain.q.assign(n * n, 0.0);
  chain.r.assign(n * s.n_taps, 0.0);

  auto find_channel = [&](std::uint32_t id) -> const channel_process* {
    for (const channel_process& ch : channels)
      if (ch.channel_id == id) return &ch;
    fail(errc::invalid_argument, "assignment refers to unknown channel " + std::to_string(id));
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t obj = transit[i];
    const assignment& asg = *topo.assignments[obj];
    const tap_profile& tap = s.taps[asg.tap];

    std::vector<const channel_process*> candidate_set{find_channel(asg.channel)};
    for (std::uint32_t id : topo.backup_channels[obj]) candidate_set.push_back(find_channel(id));

    // Blind transmission over the candidate channels: succeeds when any of
    // them is idle this slot.
    double success = any_idle(candidate_set, obj, asg.tap);

    if (options.smart) {
      // The TAP senses all channels, assigns an idle one ranked by survival
      // under the (estimated) PU rates, and the message then survives unless
      // a PU returns mid-transmission. The TAP keeps the plain assignment
      // whenever its own prediction does not beat it, so smartness never
      // makes a link worse.
      std::vector<const channel_process*> monitored;
      monitored.reserve(channels.size());
      for (const channel_process& ch : channels) monitored.push_back(&ch);
      const double hit = any_idle(monitored, obj, asg.tap);

      const channel_process* pick = nullptr;
      double best_estimate = -1.0;
      for (const channel_process& ch : channels) {
        const double rate_hat =
            options.lambda_hat.empty() ? ch.lambda_p : options.lambda_hat[ch.channel_id];
        const double est = transmission_survival(rate_hat * ch.scale(obj, asg.tap), chain.slot_duration);
        if (est > best_estimate) { best_estimate = est; pick = &ch; }
      }
      const double survival =
          transmission_survival(pick->lambda_p * pick->scale(obj, asg.tap), chain.slot_duration);
      success = std::max(success, hit * survival);
    }

    const double p = success * tap.availability;
    if (!(p > 0.0))
      fail(errc::simulation, "object " + std::to_string(obj) + " has zero success probability; absorption not certain");
    chain.r[i * s.n_taps + asg.tap] = p;
    chain.q[i * n + i] = 1.0 - p;
  }
  return chain;
}

std::vector<double> expected_absorption_steps(const absorbing_chain& chain) {
  std::vector<double> ones(chain.n_transient, 1.0);
  return solve_i_minus_q(chain.n_transient, chain.q, std::move(ones));
}

latency_breakdown compute_latency(const placed_scenario& placed, const topology& topo, const absorbing_chain& chain,
                                  const std::vector<double>& steps, bool d2d, rng& d2d_stream) {
  const scenario& s = placed.world;
  latency_breakdown out;

  if (!chain.objects.empty()) {
    double acc = 0.0;
    for (double t : steps) acc += t;
    out.tau_o = chain.slot_duration * acc / static_cast<double>(steps.size());

    // Pre-processing under processor sharing: objects queued on a busy TAP
    // stretch the per-message work proportionally.
    std::vector<std::uint32_t> load(s.n_taps, 0);
    for (const auto& asg : topo.assignments)
      if (asg) ++load[asg->tap];
    double tau_p_acc = 0.0;
    for (std::uint32_t obj : chain.objects) {
      const assignment& asg = *topo.assignments[obj];
      const double factor = std::max(1.0, static_cast<double>(load[asg.tap]) / s.taps[asg.tap].compute_capacity);
      tau_p_acc += s.msg_size * s.traffic.tau_p_per_unit * factor;
    }
    out.tau_p = tau_p_acc / static_cast<double>(chain.objects.size());
  }

  if (s.n_users > 0) {
    if (!d2d) {
      out.tau_a = s.traffic.tau_a_base;
    } else {
      std::uint32_t shared = 0;
      for (std::uint32_t u = 0; u < s.n_users; ++u)
        if (d2d_stream.bernoulli(s.traffic.p_share)) ++shared;
      if (shared == 0)
        out.tau_a = s.traffic.tau_a_base;
      else if (shared == s.n_users)
        out.tau_a = s.traffic.tau_d2d;
      else
        out.tau_a = (static_cast<double>(s.n_users - shared) * s.traffic.tau_a_base +
                     static_cast<double>(shared) * s.traffic.tau_d2d) /
                    static_cast<double>(s.n_users);
    }
  }

  out.tau_total = out.tau_o + out.tau_p + out.tau_a;
  return out;
}

}  // namespace rdna
