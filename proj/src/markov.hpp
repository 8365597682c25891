// Absorbing Markov chain of message progress toward the TAPs. One transient
// state per object in transit; reaching the assigned TAP absorbs, otherwise
// the object retries next slot. Expected absorption times come from the
// fundamental matrix N = (I - Q)^-1.
#pragma once

#include <cstdint>
#include <vector>

#include "scenario.hpp"
#include "spectrum.hpp"
#include "topology.hpp"

namespace rdna {

struct absorbing_chain {
  std::size_t n_transient = 0;
  std::size_t n_absorbing = 0;
  std::vector<double> q;  // n_transient x n_transient, row-major
  std::vector<double> r;  // n_transient x n_absorbing, row-major
  double slot_duration = 1.0;
  // transient index -> object id; engine bookkeeping for per-object latency.
  std::vector<std::uint32_t> objects;

  double q_at(std::size_t i, std::size_t j) const { return q[i * n_transient + j]; }
  double r_at(std::size_t i, std::size_t j) const { return r[i * n_absorbing + j]; }
};

// Row sums of [Q | R] must be 1 within 1e-12, all entries nonnegative, and
// absorption must be certain: (I - Q) invertible with nonnegative inverse.
void validate_chain(const absorbing_chain& chain);

struct chain_options {
  bool smart = false;
  // Estimated PU arrival rate per channel id; empty means the true rates are
  // known (ideal monitoring).
  std::vector<double> lambda_hat;
};

// Per-slot success for object i uses the probability that at least one of its
// candidate channels (primary plus backups) is idle... see build notes in the
// implementation for the smart variant.
absorbing_chain build_chain(const topology& topo, const placed_scenario& placed,
                            const std::vector<channel_process>& channels, const chain_options& options);

// t = N * 1, the expected number of slots to absorption per transient state.
std::vector<double> expected_absorption_steps(const absorbing_chain& chain);

struct latency_breakdown {
  double tau_o = 0.0;  // object -> TAP transmission latency
  double tau_p = 0.0;  // pre-processing delay at the TAP
  double tau_a = 0.0;  // end-user access delay
  double tau_total = 0.0;
};

// Mean latency over assigned objects and end-users. With d2d enabled each
// user is served by a neighbor with probability p_share at delay tau_d2d.
latency_breakdown compute_latency(const placed_scenario& placed, const topology& topo, const absorbing_chain& chain,
                                  const std::vector<double>& steps, bool d2d, rng& d2d_stream);

// Solves (I - Q) x = b by Gaussian elimination with partial pivoting.
// Exposed for reuse; throws error{simulation} when the system is singular.
std::vector<double> solve_i_minus_q(std::size_t n, const std::vector<double>& q, std::vector<double> b);

}  // namespace rdna
