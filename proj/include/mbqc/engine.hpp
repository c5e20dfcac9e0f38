#pragma once

#include <cstdint>

#include "mbqc/distribution.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// Exhaustive enumeration is capped at 2^16 branches.
inline constexpr int kMaxEnumeratedMeasurements = 16;

struct RunResult {
    StateVector output_state;  // on sorted_outputs(), ascending
    OutcomeRecord outcomes;
    PauliFrame frame;
};

/// Executes the pattern with outcomes sampled from a seeded RNG.
RunResult run_pattern(const StateVector& resource, const MeasurementPattern& pattern,
                      std::uint64_t seed);

/// Executes the pattern with outcomes forced in step order. Forcing a branch
/// of probability below kZeroProbabilityThreshold throws ImpossibleBranchError.
RunResult run_pattern_forced(const StateVector& resource, const MeasurementPattern& pattern,
                             const std::vector<int>& forced_outcomes);

struct Trajectory {
    OutcomeRecord outcomes;
    StateVector output_state;
    PauliFrame frame;
};

/// The exhaustive set {(p_j, outcome_j, state_j)} for a pattern.
struct TrajectoryEnsemble {
    MeasurementPattern pattern;  // resource descriptor
    std::vector<Trajectory> trajectories;

    /// Branch probabilities labeled by outcome bits in step order.
    ProbabilityDistribution probabilities() const;
};

/// Depth-first expansion of both outcomes per step (outcome 0 first), with
/// branches below kZeroProbabilityThreshold pruned. Independent subtrees may
/// run on up to `max_threads` threads; the result order is schedule-independent.
TrajectoryEnsemble enumerate_trajectories(const StateVector& resource,
                                          const MeasurementPattern& pattern,
                                          int max_threads = 1);

/// The byproduct as a Pauli word over the sorted output wires.
PauliOperator byproduct_of(const MeasurementPattern& pattern, const OutcomeRecord& outcomes);

}  // namespace mbqc
