#include "mbqc/density.hpp"

#include <algorithm>
#include <string>

namespace mbqc {

namespace {

int qubits_for_dim(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw ValidationError("density matrix dimension must be a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if (n > kMaxDensityQubits) {
        throw CapacityError("density matrix capacity is " + std::to_string(kMaxDensityQubits) +
                            " qubits, got " + std::to_string(n));
    }
    return n;
}

// Validated, sorted keep set plus the ascending complement.
std::pair<std::vector<int>, std::vector<int>> split_keep(int num_qubits,
                                                         const std::vector<int>& keep) {
    if (keep.empty()) {
        throw ValidationError("partial trace requires a nonempty keep set");
    }
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("keep set contains duplicate qubits");
    }
    if (sorted.front() < 0 || sorted.back() >= num_qubits) {
        throw IndexError("keep set references a qubit out of range");
    }
    if (static_cast<int>(sorted.size()) > kMaxDensityQubits) {
        throw CapacityError("partial trace result exceeds " +
                            std::to_string(kMaxDensityQubits) + " qubits");
    }
    std::vector<int> env;
    env.reserve(static_cast<std::size_t>(num_qubits) - sorted.size());
    auto it = sorted.begin();
    for (int q = 0; q < num_qubits; ++q) {
        if (it != sorted.end() && *it == q) {
            ++it;
        } else {
            env.push_back(q);
        }
    }
    return {std::move(sorted), std::move(env)};
}

Eigen::Index gather_bits(Eigen::Index index, const std::vector<int>& positions) {
    Eigen::Index out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        out |= ((index >> positions[j]) & 1) << j;
    }
    return out;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw ValidationError("density matrix must be square");
    }
    const int n = qubits_for_dim(matrix.rows());
    DensityMatrix rho(n, std::move(matrix));
    if (rho.hermiticity_error() > 1e-9) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (rho.trace_error() > 1e-9) {
        throw ValidationError("density matrix trace differs from 1");
    }
    return rho;
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
    if (state.num_qubits() > kMaxDensityQubits) {
        throw CapacityError("pure-state projector exceeds the density matrix capacity");
    }
    const auto& a = state.amplitudes();
    return DensityMatrix(state.num_qubits(), a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxDensityQubits) {
        throw CapacityError("maximally mixed state capacity exceeded");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return DensityMatrix(num_qubits,
                         Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::hermiticity_error() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const { return std::abs(matrix_.trace() - Complex(1.0)); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
    const auto [kept, env] = split_keep(state.num_qubits(), keep);
    const Eigen::Index rows = Eigen::Index{1} << kept.size();
    const Eigen::Index cols = Eigen::Index{1} << env.size();
    Eigen::MatrixXcd m(rows, cols);
    const auto& a = state.amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        m(gather_bits(i, kept), gather_bits(i, env)) = a(i);
    }
    return DensityMatrix::from_matrix(m * m.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const auto [kept, env] = split_keep(rho.num_qubits(), keep);
    const Eigen::Index dim_keep = Eigen::Index{1} << kept.size();
    const Eigen::Index dim_env = Eigen::Index{1} << env.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);

    // Scatter row/col indices back into full indices, then sum over env.
    auto compose = [](Eigen::Index bits, const std::vector<int>& positions) {
        Eigen::Index full = 0;
        for (std::size_t j = 0; j < positions.size(); ++j) {
            full |= ((bits >> j) & 1) << positions[j];
        }
        return full;
    };
    for (Eigen::Index r = 0; r < dim_keep; ++r) {
        const Eigen::Index r_full = compose(r, kept);
        for (Eigen::Index c = 0; c < dim_keep; ++c) {
            const Eigen::Index c_full = compose(c, kept);
            Complex sum = 0.0;
            for (Eigen::Index e = 0; e < dim_env; ++e) {
                const Eigen::Index e_full = compose(e, env);
                sum += rho.matrix()(r_full | e_full, c_full | e_full);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix::from_matrix(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("trace distance requires equal dimensions");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix() - b.matrix(),
                                                           Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace mbqc
