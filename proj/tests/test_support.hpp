#pragma once

#include <random>

#include "mbqc/density.hpp"
#include "mbqc/state.hpp"

namespace mbqc::test {

inline StateVector random_state(int num_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(normal(rng), normal(rng));
    }
    v /= v.norm();
    return StateVector::from_amplitudes(std::move(v));
}

inline StateVector basis_state(int num_qubits, Eigen::Index index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
    v(index) = 1.0;
    return StateVector::from_amplitudes(std::move(v));
}

// M acting on one qubit embedded into the n-qubit identity (qubit 0 = LSB).
inline Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& m, int qubit, int num_qubits) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < num_qubits; ++q) {
        const Eigen::MatrixXcd factor =
            q == qubit ? Eigen::MatrixXcd(m) : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) =
                    factor(i, j) * out;
            }
        }
        out = std::move(next);
    }
    return out;
}

inline DensityMatrix random_mixed_state(int num_qubits, int pure_terms, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    double total = 0.0;
    std::vector<double> weights;
    for (int t = 0; t < pure_terms; ++t) {
        weights.push_back(unit(rng));
        total += weights.back();
    }
    for (int t = 0; t < pure_terms; ++t) {
        const StateVector psi = random_state(num_qubits, rng);
        const auto& a = psi.amplitudes();
        acc += (weights[static_cast<std::size_t>(t)] / total) * (a * a.adjoint());
    }
    return DensityMatrix::from_matrix(std::move(acc));
}

}  // namespace mbqc::test
