#pragma once

#include <Eigen/Dense>

#include <vector>

#include "mbqc/state.hpp"

namespace mbqc {

/// Dense density matrix on up to kMaxDensityQubits qubits; Hermitian,
/// unit-trace, positive semidefinite up to numerical tolerance.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(Eigen::MatrixXcd matrix);
    static DensityMatrix pure(const StateVector& state);
    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    double hermiticity_error() const;  // max |rho - rho†|
    double trace_error() const;        // |tr(rho) - 1|
    double min_eigenvalue() const;

private:
    DensityMatrix(int num_qubits, Eigen::MatrixXcd matrix)
        : num_qubits_(num_qubits), matrix_(std::move(matrix)) {}

    int num_qubits_;
    Eigen::MatrixXcd matrix_;
};

/// Reduced density matrix on `keep` (reported in ascending qubit order).
/// |keep| is capped at kMaxDensityQubits.
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// (1/2) Σ singular values of (a - b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace mbqc
