#include "mbqc/engine.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <string>
#include <utility>

namespace mbqc {

namespace {

void check_resource(const StateVector& resource, const MeasurementPattern& pattern) {
    pattern.validate();
    if (resource.num_qubits() != pattern.layout.num_qubits()) {
        throw ValidationError("resource has " + std::to_string(resource.num_qubits()) +
                              " qubits but the layout needs " +
                              std::to_string(pattern.layout.num_qubits()));
    }
}

// State on the sorted outputs given that every measured qubit sits in the
// basis state recorded for it.
StateVector extract_output_state(const StateVector& full, const MeasurementPattern& pattern,
                                 const OutcomeRecord& record) {
    const auto outs = pattern.sorted_outputs();
    Eigen::Index base = 0;
    for (const auto& [qubit, bit] : record.outcomes) {
        if (bit) base |= Eigen::Index{1} << qubit;
    }
    const Eigen::Index dim = Eigen::Index{1} << outs.size();
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index y = 0; y < dim; ++y) {
        Eigen::Index idx = base;
        for (std::size_t k = 0; k < outs.size(); ++k) {
            idx |= ((y >> k) & 1) << outs[k];
        }
        amps(y) = full.amplitude(idx);
    }
    StateVector out = StateVector::from_amplitudes(std::move(amps));
    out.renormalize();
    return out;
}

template <typename OutcomePicker>
RunResult execute_pattern(const StateVector& resource, const MeasurementPattern& pattern,
                          OutcomePicker&& pick_outcome) {
    check_resource(resource, pattern);
    StateVector state = resource;
    OutcomeRecord record;
    double probability = 1.0;
    for (std::size_t i = 0; i < pattern.steps.size(); ++i) {
        const auto& step = pattern.steps[i];
        const double phi = adapted_angle(step, record);
        const auto probs = xy_branch_probabilities(state, step.qubit, phi);
        const int outcome = pick_outcome(i, probs);
        const double p = collapse_xy_to_basis(state, step.qubit, phi, outcome);
        if (p < kZeroProbabilityThreshold) {
            throw ImpossibleBranchError("outcome " + std::to_string(outcome) + " for qubit " +
                                        std::to_string(step.qubit) +
                                        " has probability below 1e-14");
        }
        record.outcomes[step.qubit] = outcome;
        probability *= p;
    }
    record.probability = probability;
    return {extract_output_state(state, pattern, record), record, pauli_frame(pattern, record)};
}

void enumerate_dfs(const MeasurementPattern& pattern, const StateVector& state,
                   OutcomeRecord record, std::size_t step_index, double probability,
                   std::vector<Trajectory>& out) {
    if (step_index == pattern.steps.size()) {
        record.probability = probability;
        Trajectory traj{record, extract_output_state(state, pattern, record),
                        pauli_frame(pattern, record)};
        out.push_back(std::move(traj));
        return;
    }
    const auto& step = pattern.steps[step_index];
    const double phi = adapted_angle(step, record);
    const auto probs = xy_branch_probabilities(state, step.qubit, phi);
    for (int outcome = 0; outcome < 2; ++outcome) {
        if (probs[outcome] < kZeroProbabilityThreshold) continue;
        StateVector branch = state;
        collapse_xy_to_basis(branch, step.qubit, phi, outcome);
        record.outcomes[step.qubit] = outcome;
        enumerate_dfs(pattern, branch, record, step_index + 1, probability * probs[outcome], out);
    }
    record.outcomes.erase(step.qubit);
}

}  // namespace

RunResult run_pattern(const StateVector& resource, const MeasurementPattern& pattern,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return execute_pattern(resource, pattern, [&](std::size_t, const std::array<double, 2>& p) {
        if (p[0] < kZeroProbabilityThreshold) return 1;
        if (p[1] < kZeroProbabilityThreshold) return 0;
        return unit(rng) < p[0] ? 0 : 1;
    });
}

RunResult run_pattern_forced(const StateVector& resource, const MeasurementPattern& pattern,
                             const std::vector<int>& forced_outcomes) {
    if (forced_outcomes.size() != pattern.steps.size()) {
        throw ValidationError("forced outcome list must have one bit per step");
    }
    return execute_pattern(resource, pattern, [&](std::size_t i, const std::array<double, 2>&) {
        return forced_outcomes[i] ? 1 : 0;
    });
}

ProbabilityDistribution TrajectoryEnsemble::probabilities() const {
    Eigen::VectorXd p(static_cast<Eigen::Index>(trajectories.size()));
    std::vector<std::string> labels;
    labels.reserve(trajectories.size());
    for (std::size_t j = 0; j < trajectories.size(); ++j) {
        p(static_cast<Eigen::Index>(j)) = trajectories[j].outcomes.probability;
        std::string bits;
        for (const auto& step : pattern.steps) {
            bits.push_back(trajectories[j].outcomes.at(step.qubit) ? '1' : '0');
        }
        labels.push_back(std::move(bits));
    }
    return make_distribution(std::move(p), std::move(labels));
}

TrajectoryEnsemble enumerate_trajectories(const StateVector& resource,
                                          const MeasurementPattern& pattern, int max_threads) {
    check_resource(resource, pattern);
    if (static_cast<int>(pattern.steps.size()) > kMaxEnumeratedMeasurements) {
        throw CapacityError("enumeration is capped at " +
                            std::to_string(kMaxEnumeratedMeasurements) + " measured qubits");
    }
    TrajectoryEnsemble ensemble{pattern, {}};
    const int threads = std::clamp(max_threads, 1, 64);
    if (threads <= 1 || pattern.steps.size() < 2) {
        enumerate_dfs(pattern, resource, OutcomeRecord{}, 0, 1.0, ensemble.trajectories);
        return ensemble;
    }

    // Expand the first few levels breadth-first (outcome 0 before 1), then run
    // each surviving prefix as an independent task; concatenating the task
    // results in prefix order reproduces the sequential depth-first order.
    struct Prefix {
        StateVector state;
        OutcomeRecord record;
        double probability;
    };
    std::size_t levels = 0;
    while ((std::size_t{1} << (levels + 1)) <= static_cast<std::size_t>(threads) &&
           levels + 1 < pattern.steps.size()) {
        ++levels;
    }
    std::vector<Prefix> prefixes{{resource, OutcomeRecord{}, 1.0}};
    for (std::size_t level = 0; level < levels; ++level) {
        const auto& step = pattern.steps[level];
        std::vector<Prefix> next;
        next.reserve(prefixes.size() * 2);
        for (auto& prefix : prefixes) {
            const double phi = adapted_angle(step, prefix.record);
            const auto probs = xy_branch_probabilities(prefix.state, step.qubit, phi);
            for (int outcome = 0; outcome < 2; ++outcome) {
                if (probs[outcome] < kZeroProbabilityThreshold) continue;
                Prefix branch = prefix;
                collapse_xy_to_basis(branch.state, step.qubit, phi, outcome);
                branch.record.outcomes[step.qubit] = outcome;
                branch.probability *= probs[outcome];
                next.push_back(std::move(branch));
            }
        }
        prefixes = std::move(next);
    }

    std::vector<std::future<std::vector<Trajectory>>> futures;
    futures.reserve(prefixes.size());
    for (auto& prefix : prefixes) {
        futures.push_back(std::async(std::launch::async, [&pattern, levels,
                                                          prefix = std::move(prefix)]() {
            std::vector<Trajectory> local;
            enumerate_dfs(pattern, prefix.state, prefix.record, levels, prefix.probability,
                          local);
            return local;
        }));
    }
    for (auto& future : futures) {
        auto part = future.get();
        ensemble.trajectories.insert(ensemble.trajectories.end(),
                                     std::make_move_iterator(part.begin()),
                                     std::make_move_iterator(part.end()));
    }
    return ensemble;
}

PauliOperator byproduct_of(const MeasurementPattern& pattern, const OutcomeRecord& outcomes) {
    for (const auto& step : pattern.steps) {
        if (!outcomes.outcomes.contains(step.qubit)) {
            throw ValidationError("outcome record is missing measured qubit " +
                                  std::to_string(step.qubit));
        }
    }
    if (outcomes.outcomes.size() != pattern.steps.size()) {
        throw ValidationError("outcome record contains qubits the pattern does not measure");
    }
    return pauli_frame(pattern, outcomes).as_pauli();
}

}  // namespace mbqc
