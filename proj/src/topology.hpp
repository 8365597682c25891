// Object -> TAP/channel association. The probe/response protocol examines
// (object, tap, channel) triples, one signaling message per probe, never more
// than n_o * n_tap * B of them. Backup TAP sets are picked by the smallest
// cardinality meeting the reliability target.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scenario.hpp"
#include "spectrum.hpp"

namespace rdna {

struct association_policy {
  std::uint32_t backup_channels = 0;  // extra channels kept per object (w - 1)
  std::uint32_t backup_taps = 0;      // extra TAPs kept per object (n_a - 1)
};

struct assignment {
  std::uint32_t tap = 0;
  std::uint32_t channel = 0;
  double score = 0.0;     // availability(link, channel) * tap availability
  double distance = 0.0;  // object to assigned TAP, meters
};

struct topology {
  // One slot per object; objects with no feasible pair stay unassigned.
  std::vector<std::optional<assignment>> assignments;
  std::vector<std::vector<std::uint32_t>> backup_channels;  // ordered, excludes primary
  std::vector<std::vector<std::uint32_t>> backup_taps;      // ordered, excludes primary
  std::uint64_t signaling_messages = 0;

  std::size_t assigned_count() const;
};

topology form_topology(const placed_scenario& placed, const std::vector<channel_process>& channels,
                       const association_policy& policy);

struct backup_tap_selection {
  std::vector<std::uint32_t> taps;  // indices into the candidate list
  double reliability = 0.0;         // 1 - prod(1 - xi_j) over the set
  bool feasible = false;
};

// Smallest set meeting xi_min; among equal-cardinality feasible sets the one
// with least slack (xi' - xi_min) / n_a, ties by lexicographic indices. When
// even the full candidate set falls short, all candidates are returned with
// feasible = false.
backup_tap_selection select_backup_taps(const std::vector<double>& candidate_reliability, double xi_min);

}  // namespace rdna
