#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>

#include "mbqc/errors.hpp"

namespace mbqc {

using Complex = std::complex<double>;

inline constexpr int kMaxStateQubits = 24;
inline constexpr int kMaxDensityQubits = 12;

// Measurement branches below this probability are flagged impossible and are
// never normalized.
inline constexpr double kZeroProbabilityThreshold = 1e-14;

/// Dense pure state of up to kMaxStateQubits qubits. Bit k of the amplitude
/// index (LSB = qubit 0) is qubit k's computational-basis value.
class StateVector {
public:
    /// |0...0> on `num_qubits` qubits. A 0-qubit state is the scalar 1.
    explicit StateVector(int num_qubits);

    /// Wraps an amplitude vector whose length must be a power of two and whose
    /// norm must already be 1 within 1e-6 (then normalized exactly).
    static StateVector from_amplitudes(Eigen::VectorXcd amplitudes);

    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    Eigen::VectorXcd& amplitudes() { return amplitudes_; }
    Complex amplitude(Eigen::Index basis_index) const { return amplitudes_(basis_index); }

    double squared_norm() const { return amplitudes_.squaredNorm(); }
    void renormalize();

private:
    StateVector(int num_qubits, Eigen::VectorXcd amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    int num_qubits_;
    Eigen::VectorXcd amplitudes_;
};

/// (|0> + |1>)^{⊗n} / 2^{n/2}; 1 <= n <= kMaxStateQubits.
StateVector new_plus_state(int num_qubits);

/// Applies a 2x2 unitary (checked within 1e-10) to one tensor factor.
StateVector apply_single_qubit_gate(StateVector state, int qubit, const Eigen::Matrix2cd& u);
void apply_single_qubit_gate_in_place(StateVector& state, int qubit, const Eigen::Matrix2cd& u);

/// Controlled-Z: negates every amplitude with bit(q1) = bit(q2) = 1.
StateVector apply_cz(StateVector state, int q1, int q2);
void apply_cz_in_place(StateVector& state, int q1, int q2);

struct MeasurementBranch {
    int outcome = 0;           // 0 <-> projection onto |+_phi>
    double probability = 0.0;
    bool possible = false;     // probability >= kZeroProbabilityThreshold
    std::optional<StateVector> state;  // normalized post-measurement state; empty if impossible
};

/// Projects qubit `qubit` onto |±_phi> = (|0> ± e^{i phi}|1>)/sqrt(2) and
/// returns both branches (outcome 0 <-> +). Probabilities sum to 1.
std::array<MeasurementBranch, 2> measure_xy_branches(const StateVector& state, int qubit,
                                                     double angle);

/// Probabilities of the two XY branches without collapsing.
std::array<double, 2> xy_branch_probabilities(const StateVector& state, int qubit, double angle);

/// In-place collapse used by the pattern executor: projects onto the XY
/// eigenstate for `outcome` at `angle`, then rotates the measured qubit to the
/// basis state |outcome>. Returns the branch probability; the state is left
/// untouched when the branch is impossible.
double collapse_xy_to_basis(StateVector& state, int qubit, double angle, int outcome);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<target|state>|^2 — global-phase-insensitive state comparison.
double fidelity_pure(const StateVector& state, const StateVector& target);

// Common 2x2 gates.
Eigen::Matrix2cd identity_gate();
Eigen::Matrix2cd hadamard_gate();
Eigen::Matrix2cd pauli_x_gate();
Eigen::Matrix2cd pauli_y_gate();
Eigen::Matrix2cd pauli_z_gate();
Eigen::Matrix2cd phase_gate(double theta);  // diag(1, e^{i theta})
Eigen::Matrix2cd rz_gate(double theta);     // exp(-i theta Z / 2)
Eigen::Matrix2cd rx_gate(double theta);     // exp(-i theta X / 2)

}  // namespace mbqc
