#include "mbqc/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mbqc {

namespace {

void check_qubit_count(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxStateQubits) {
        throw CapacityError("state capacity is 0.." + std::to_string(kMaxStateQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    }
}

void check_qubit_index(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw IndexError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(state.num_qubits()) + " qubits");
    }
}

bool is_unitary_2x2(const Eigen::Matrix2cd& u, double tol) {
    return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
    amplitudes_(0) = 1.0;
}

StateVector StateVector::from_amplitudes(Eigen::VectorXcd amplitudes) {
    const Eigen::Index dim = amplitudes.size();
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw ValidationError("amplitude vector length must be a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    check_qubit_count(n);
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw ValidationError("amplitude vector is not normalized (norm = " +
                              std::to_string(norm) + ")");
    }
    amplitudes /= norm;
    return StateVector(n, std::move(amplitudes));
}

void StateVector::renormalize() {
    const double norm = amplitudes_.norm();
    if (norm <= 0.0) {
        throw ValidationError("cannot normalize a zero state vector");
    }
    amplitudes_ /= norm;
}

StateVector new_plus_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
        throw CapacityError("plus state capacity is 1.." + std::to_string(kMaxStateQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    }
    StateVector state(num_qubits);
    state.amplitudes().setConstant(std::pow(2.0, -0.5 * num_qubits));
    return state;
}

void apply_single_qubit_gate_in_place(StateVector& state, int qubit, const Eigen::Matrix2cd& u) {
    check_qubit_index(state, qubit);
    if (!is_unitary_2x2(u, 1e-10)) {
        throw ValidationError("gate matrix is not unitary within 1e-10");
    }
    auto& a = state.amplitudes();
    const Eigen::Index step = Eigen::Index{1} << qubit;
    const Eigen::Index block = step << 1;
    for (Eigen::Index base = 0; base < a.size(); base += block) {
        for (Eigen::Index off = 0; off < step; ++off) {
            const Eigen::Index i0 = base + off;
            const Eigen::Index i1 = i0 + step;
            const Complex a0 = a(i0), a1 = a(i1);
            a(i0) = u(0, 0) * a0 + u(0, 1) * a1;
            a(i1) = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

StateVector apply_single_qubit_gate(StateVector state, int qubit, const Eigen::Matrix2cd& u) {
    apply_single_qubit_gate_in_place(state, qubit, u);
    return state;
}

void apply_cz_in_place(StateVector& state, int q1, int q2) {
    check_qubit_index(state, q1);
    check_qubit_index(state, q2);
    if (q1 == q2) {
        throw IndexError("CZ requires two distinct qubits");
    }
    auto& a = state.amplitudes();
    const Eigen::Index m1 = Eigen::Index{1} << q1;
    const Eigen::Index m2 = Eigen::Index{1} << q2;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if ((i & m1) && (i & m2)) a(i) = -a(i);
    }
}

StateVector apply_cz(StateVector state, int q1, int q2) {
    apply_cz_in_place(state, q1, q2);
    return state;
}

std::array<double, 2> xy_branch_probabilities(const StateVector& state, int qubit, double angle) {
    check_qubit_index(state, qubit);
    const auto& a = state.amplitudes();
    const Eigen::Index step = Eigen::Index{1} << qubit;
    const Eigen::Index block = step << 1;
    const Complex w = std::exp(Complex(0.0, -angle));
    double p0 = 0.0, p1 = 0.0;
    for (Eigen::Index base = 0; base < a.size(); base += block) {
        for (Eigen::Index off = 0; off < step; ++off) {
            const Eigen::Index i0 = base + off;
            const Complex wa1 = w * a(i0 + step);
            p0 += 0.5 * std::norm(a(i0) + wa1);
            p1 += 0.5 * std::norm(a(i0) - wa1);
        }
    }
    return {p0, p1};
}

std::array<MeasurementBranch, 2> measure_xy_branches(const StateVector& state, int qubit,
                                                     double angle) {
    const auto probs = xy_branch_probabilities(state, qubit, angle);
    const auto& a = state.amplitudes();
    const Eigen::Index step = Eigen::Index{1} << qubit;
    const Eigen::Index block = step << 1;
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

    std::array<MeasurementBranch, 2> branches;
    for (int outcome = 0; outcome < 2; ++outcome) {
        MeasurementBranch& branch = branches[outcome];
        branch.outcome = outcome;
        branch.probability = probs[outcome];
        branch.possible = probs[outcome] >= kZeroProbabilityThreshold;
        if (!branch.possible) continue;

        // Collapsed state keeps the measured qubit in |±_phi>.
        const Complex sign = outcome ? -1.0 : 1.0;
        const Complex w = sign * std::exp(Complex(0.0, -angle));
        const Complex back = sign * std::exp(Complex(0.0, angle));
        Eigen::VectorXcd out(a.size());
        const double scale = 1.0 / std::sqrt(probs[outcome]);
        for (Eigen::Index base = 0; base < a.size(); base += block) {
            for (Eigen::Index off = 0; off < step; ++off) {
                const Eigen::Index i0 = base + off;
                const Eigen::Index i1 = i0 + step;
                const Complex overlap = (a(i0) + w * a(i1)) * inv_sqrt2 * scale;
                out(i0) = overlap * inv_sqrt2;
                out(i1) = overlap * inv_sqrt2 * back;
            }
        }
        branch.state = StateVector::from_amplitudes(std::move(out));
    }
    return branches;
}

double collapse_xy_to_basis(StateVector& state, int qubit, double angle, int outcome) {
    check_qubit_index(state, qubit);
    const auto probs = xy_branch_probabilities(state, qubit, angle);
    const double p = probs[outcome ? 1 : 0];
    if (p < kZeroProbabilityThreshold) return p;

    auto& a = state.amplitudes();
    const Eigen::Index step = Eigen::Index{1} << qubit;
    const Eigen::Index block = step << 1;
    const Complex w = (outcome ? -1.0 : 1.0) * std::exp(Complex(0.0, -angle));
    const double scale = 1.0 / std::sqrt(2.0 * p);
    for (Eigen::Index base = 0; base < a.size(); base += block) {
        for (Eigen::Index off = 0; off < step; ++off) {
            const Eigen::Index i0 = base + off;
            const Eigen::Index i1 = i0 + step;
            const Complex overlap = (a(i0) + w * a(i1)) * scale;
            a(outcome ? i1 : i0) = overlap;
            a(outcome ? i0 : i1) = 0.0;
        }
    }
    return p;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValidationError("inner product requires equal qubit counts");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity_pure(const StateVector& state, const StateVector& target) {
    return std::norm(inner_product(target, state));
}

Eigen::Matrix2cd identity_gate() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd hadamard_gate() {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    return h / std::numbers::sqrt2;
}

Eigen::Matrix2cd pauli_x_gate() {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return x;
}

Eigen::Matrix2cd pauli_y_gate() {
    Eigen::Matrix2cd y;
    y << 0, Complex(0, -1), Complex(0, 1), 0;
    return y;
}

Eigen::Matrix2cd pauli_z_gate() {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    return z;
}

Eigen::Matrix2cd phase_gate(double theta) {
    Eigen::Matrix2cd p;
    p << 1, 0, 0, std::exp(Complex(0, theta));
    return p;
}

Eigen::Matrix2cd rz_gate(double theta) {
    Eigen::Matrix2cd r;
    r << std::exp(Complex(0, -theta / 2)), 0, 0, std::exp(Complex(0, theta / 2));
    return r;
}

Eigen::Matrix2cd rx_gate(double theta) {
    const double c = std::cos(theta / 2);
    const Complex ms(0, -std::sin(theta / 2));
    Eigen::Matrix2cd r;
    r << c, ms, ms, c;
    return r;
}

}  // namespace mbqc
