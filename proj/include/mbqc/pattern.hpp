#pragma once

#include <map>
#include <vector>

#include "mbqc/cluster.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

/// One adaptive XY measurement. The realized angle is
/// (-1)^{parity(s_domain)} * base_angle + pi * parity(t_domain), so the
/// s-domain flips the sign and the t-domain shifts by pi.
struct PatternStep {
    int qubit = 0;
    double base_angle = 0.0;
    std::vector<int> s_domain;  // qubits measured strictly earlier
    std::vector<int> t_domain;
};

/// An ordered adaptive measurement pattern plus the correction sets that
/// define the byproduct (Pauli frame) on each output wire.
struct MeasurementPattern {
    ClusterLayout layout;
    std::vector<PatternStep> steps;
    std::vector<int> outputs;
    std::map<int, std::vector<int>> x_corrections;  // output qubit -> measured qubits
    std::map<int, std::vector<int>> z_corrections;

    std::vector<int> measured_qubits() const;  // step order
    std::vector<int> sorted_outputs() const;

    /// Measured/outputs partition the layout, domains reference strictly
    /// earlier steps, corrections reference measured qubits.
    void validate() const;
};

/// Per-trajectory measurement results.
struct OutcomeRecord {
    std::map<int, int> outcomes;  // measured qubit -> bit
    double probability = 1.0;

    int at(int qubit) const;
    int parity_over(const std::vector<int>& domain) const;
};

double adapted_angle(const PatternStep& step, const OutcomeRecord& outcomes);

/// Byproduct bits per output wire, ascending output index. Two bits per wire:
/// a_x = parity over the wire's x_corrections, a_z likewise.
struct PauliFrame {
    std::vector<int> output_qubits;
    std::vector<std::pair<int, int>> bits;  // (a_x, a_z)

    /// The frame as a Pauli word on output_qubits.size() qubits (wire k =
    /// output_qubits[k]).
    PauliOperator as_pauli() const;
    int total_bits() const { return 2 * static_cast<int>(bits.size()); }
};

PauliFrame pauli_frame(const MeasurementPattern& pattern, const OutcomeRecord& outcomes);

}  // namespace mbqc
