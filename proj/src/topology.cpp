#include "topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace rdna {

std::size_t topology::assigned_count() const {
  std::size_t n = 0;
  for (const auto& a : assignments)
    if (a.has_value()) ++n;
  return n;
}

namespace {

struct candidate {
  std::uint32_t tap;
  std::uint32_t channel;
  double score;
  double dist;
  double incentive;
};

// Association preference: higher score, then shorter link, then higher
// incentive weight, then lower TAP id, then lower channel id.
bool better(const candidate& a, const candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.dist != b.dist) return a.dist < b.dist;
  if (a.incentive != b.incentive) return a.incentive > b.incentive;
  if (a.tap != b.tap) return a.tap < b.tap;
  return a.channel < b.channel;
}

}  // namespace

topology form_topology(const placed_scenario& placed, const std::vector<channel_process>& channels,
                       const association_policy& policy) {
  const scenario& s = placed.world;
  if (s.n_taps < 1) fail(errc::invalid_argument, "topology formation requires at least one TAP");
  if (channels.empty()) fail(errc::invalid_argument, "topology formation requires at least one channel");

  topology topo;
  topo.assignments.resize(s.n_objects);
  topo.backup_channels.resize(s.n_objects);
  topo.backup_taps.resize(s.n_objects);

  for (std::uint32_t obj = 0; obj < s.n_objects; ++obj) {
    std::optional<candidate> best;
    for (std::uint32_t tap = 0; tap < s.n_taps; ++tap) {
      const double d = distance(placed.object_positions[obj], placed.tap_positions[tap]);
      const double tap_avail = s.taps[tap].availability;
      for (const channel_process& ch : channels) {
        ++topo.signaling_messages;  // one probe/response per examined triple
        const double score = availability(ch, obj, tap) * tap_avail;
        if (score <= 0.0) continue;  // infeasible pair
        candidate c{tap, ch.channel_id, score, d, s.taps[tap].incentive_weight};
        if (!best || better(c, *best)) best = c;
      }
    }
    if (!best) continue;  // unassigned: every pair had zero availability

    topo.assignments[obj] = assignment{best->tap, best->channel, best->score, best->dist};

    if (policy.backup_channels > 0) {
      std::vector<std::pair<double, std::uint32_t>> others;  // (availability, id)
      for (const channel_process& ch : channels) {
        if (ch.channel_id == best->channel) continue;
        others.emplace_back(availability(ch, obj, best->tap), ch.channel_id);
      }
      std::stable_sort(others.begin(), others.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
      });
      auto& list = topo.backup_channels[obj];
      for (const auto& [avail, id] : others) {
        if (list.size() >= policy.backup_channels) break;
        if (avail <= 0.0) break;
        list.push_back(id);
      }
    }

    if (policy.backup_taps > 0) {
      // Backup TAPs ranked on the object's primary channel.
      const channel_process* primary_ch = nullptr;
      for (const channel_process& ch : channels)
        if (ch.channel_id == best->channel) primary_ch = &ch;
      std::vector<candidate> others;
      for (std::uint32_t tap = 0; tap < s.n_taps; ++tap) {
        if (tap == best->tap) continue;
        const double d = distance(placed.object_positions[obj], placed.tap_positions[tap]);
        const double score = availability(*primary_ch, obj, tap) * s.taps[tap].availability;
        if (score <= 0.0) continue;
        others.push_back({tap, best->channel, score, d, s.taps[tap].incentive_weight});
      }
      std::stable_sort(others.begin(), others.end(), better);
      auto& list = topo.backup_taps[obj];
      for (const candidate& c : others) {
        if (list.size() >= policy.backup_taps) break;
        list.push_back(c.tap);
      }
    }
  }
  return topo;
}

namespace {

// Exhaustive subset search keeps the slack objective exact; beyond this many
// candidates only the most reliable ones enter the search. Minimal feasible
// cardinality is unaffected (it is always attained by top reliabilities).
constexpr std::size_t k_exact_candidates = 22;

double set_reliability(const std::vector<double>& xi, const std::vector<std::uint32_t>& members) {
  double miss = 1.0;
  for (std::uint32_t m : members) miss *= 1.0 - xi[m];
  return 1.0 - miss;
}

}  // namespace

backup_tap_selection select_backup_taps(const std::vector<double>& candidate_reliability, double xi_min) {
  if (candidate_reliability.empty()) fail(errc::invalid_argument, "backup TAP selection requires candidates");
  if (!(xi_min > 0.0 && xi_min < 1.0)) fail(errc::invalid_argument, "xi_min must be in (0,1)");
  for (double xi : candidate_reliability)
    if (!(xi > 0.0 && xi <= 1.0)) fail(errc::invalid_argument, "candidate reliabilities must be in (0,1]");

  const std::size_t n = candidate_reliability.size();

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return candidate_reliability[a] > candidate_reliability[b]; });

  backup_tap_selection result;

  // Feasibility ceiling: the full set has the highest reliability of all subsets.
  std::vector<std::uint32_t> all(order.begin(), order.end());
  const double full = set_reliability(candidate_reliability, all);
  if (full < xi_min) {
    std::sort(all.begin(), all.end());
    result.taps = std::move(all);
    result.reliability = full;
    result.feasible = false;
    return result;
  }

  // Minimal feasible cardinality: the best k-subset is the top-k reliabilities.
  std::size_t k = 1;
  {
    double miss = 1.0;
    for (; k <= n; ++k) {
      miss *= 1.0 - candidate_reliability[order[k - 1]];
      if (1.0 - miss >= xi_min) break;
    }
  }

  // Among k-subsets, minimize slack = (xi' - xi_min) / k, i.e. minimize xi'
  // subject to xi' >= xi_min; ties resolved by lexicographic index sets.
  std::vector<std::uint32_t> pool;
  if (n <= k_exact_candidates) {
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), 0u);
  } else {
    pool.assign(order.begin(), order.begin() + k_exact_candidates);
    std::sort(pool.begin(), pool.end());
  }

  if (k > pool.size()) {
    // Prefiltered pool cannot host the minimal cardinality; fall back to the
    // top-k reliabilities, which are feasible by construction.
    std::vector<std::uint32_t> top(order.begin(), order.begin() + k);
    std::sort(top.begin(), top.end());
    result.reliability = set_reliability(candidate_reliability, top);
    result.taps = std::move(top);
    result.feasible = true;
    return result;
  }

  std::vector<std::uint32_t> members(k);
  std::vector<std::uint32_t> best_set;
  double best_xi = 2.0;
  // Lexicographic combination walk over pool choosing k members.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) members[i] = pool[idx[i]];
    const double xi = set_reliability(candidate_reliability, members);
    if (xi >= xi_min && xi < best_xi) {
      best_xi = xi;
      best_set = members;
    }
    // advance combination
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (idx[pos] != pos + pool.size() - k) break;
      if (pos == 0) { pos = k; break; }
    }
    if (pos == k) break;
    ++idx[pos];
    for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }

  result.taps = std::move(best_set);
  result.reliability = best_xi;
  result.feasible = true;
  return result;
}

}  // namespace rdna
