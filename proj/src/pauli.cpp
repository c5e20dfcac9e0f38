#include "mbqc/pauli.hpp"

#include <bit>
#include <string>

namespace mbqc {

namespace {

void check_pauli_qubit(const PauliOperator& p, int qubit) {
    if (qubit < 0 || qubit >= p.num_qubits) {
        throw IndexError("pauli qubit index " + std::to_string(qubit) + " out of range");
    }
}

}  // namespace

void PauliOperator::set_x(int qubit, int value) {
    check_pauli_qubit(*this, qubit);
    const std::uint32_t mask = std::uint32_t{1} << qubit;
    x_bits = value ? (x_bits | mask) : (x_bits & ~mask);
}

void PauliOperator::set_z(int qubit, int value) {
    check_pauli_qubit(*this, qubit);
    const std::uint32_t mask = std::uint32_t{1} << qubit;
    z_bits = value ? (z_bits | mask) : (z_bits & ~mask);
}

std::string PauliOperator::to_string() const {
    static constexpr char letters[4] = {'I', 'X', 'Z', 'Y'};
    std::string out;
    out.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        out.push_back(letters[x_bit(q) | (z_bit(q) << 1)]);
    }
    return out;
}

void apply_pauli_in_place(StateVector& state, const PauliOperator& p) {
    if (p.num_qubits != state.num_qubits()) {
        throw ValidationError("pauli operator size does not match state size");
    }
    auto& a = state.amplitudes();
    const auto x = static_cast<Eigen::Index>(p.x_bits);
    const auto z = static_cast<Eigen::Index>(p.z_bits);
    if (z != 0) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (std::popcount(static_cast<std::uint64_t>(i & z)) & 1) a(i) = -a(i);
        }
    }
    if (x != 0) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            const Eigen::Index j = i ^ x;
            if (i < j) std::swap(a(i), a(j));
        }
    }
}

StateVector apply_pauli(StateVector state, const PauliOperator& p) {
    apply_pauli_in_place(state, p);
    return state;
}

double pauli_expectation(const StateVector& state, const PauliOperator& p) {
    return inner_product(state, apply_pauli(state, p)).real();
}

}  // namespace mbqc
