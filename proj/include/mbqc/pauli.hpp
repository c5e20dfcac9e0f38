#pragma once

#include <cstdint>
#include <string>

#include "mbqc/state.hpp"

namespace mbqc {

/// N-qubit Pauli word ⊗_k X^{x_k} Z^{z_k}; the global phase is never tracked.
/// Bit k of each mask refers to qubit k.
struct PauliOperator {
    int num_qubits = 0;
    std::uint32_t x_bits = 0;
    std::uint32_t z_bits = 0;

    static PauliOperator identity(int num_qubits) { return {num_qubits, 0, 0}; }

    bool is_identity() const { return x_bits == 0 && z_bits == 0; }

    int x_bit(int qubit) const { return (x_bits >> qubit) & 1; }
    int z_bit(int qubit) const { return (z_bits >> qubit) & 1; }
    void set_x(int qubit, int value);
    void set_z(int qubit, int value);

    /// One letter per qubit, qubit 0 first; XZ renders as Y (phase ignored).
    std::string to_string() const;

    bool operator==(const PauliOperator&) const = default;
};

/// Applies X^x Z^z per qubit: amplitude (-1)^{popcount(i & z)} moves to i ^ x.
StateVector apply_pauli(StateVector state, const PauliOperator& p);
void apply_pauli_in_place(StateVector& state, const PauliOperator& p);

/// Re <psi|P|psi> under the X^x Z^z phase convention.
double pauli_expectation(const StateVector& state, const PauliOperator& p);

}  // namespace mbqc
