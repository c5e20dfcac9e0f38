#include "mbqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace mbqc::verify {

namespace {

StateVector random_pure_state(int num_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(normal(rng), normal(rng));
    }
    v /= v.norm();
    return StateVector::from_amplitudes(std::move(v));
}

// r such that the prefix outputs are exactly columns r..cols-1.
int infer_measured_layers(const MeasurementPattern& prefix) {
    const auto& layout = prefix.layout;
    if (prefix.steps.empty()) return 0;
    int r = layout.cols;
    for (int q : prefix.sorted_outputs()) r = std::min(r, layout.col_of(q));
    const Region expected = region(layout, RegionKind::Bob, r);
    if (prefix.sorted_outputs() != expected.qubits) {
        throw ValidationError("prefix outputs are not a trailing column block O_r");
    }
    return r;
}

}  // namespace

MeasurementPattern strategy_pattern(const ClusterLayout& layout,
                                    const std::vector<double>& angles, int r) {
    const Region alice = region(layout, RegionKind::Alice, r);
    if (angles.size() != alice.qubits.size()) {
        throw ValidationError("strategy needs " + std::to_string(alice.qubits.size()) +
                              " angles for C_" + std::to_string(r) + ", got " +
                              std::to_string(angles.size()));
    }
    MeasurementPattern pattern;
    pattern.layout = layout;
    for (std::size_t i = 0; i < alice.qubits.size(); ++i) {
        pattern.steps.push_back({alice.qubits[i], angles[i], {}, {}});
    }
    pattern.outputs = region(layout, RegionKind::Bob, r).qubits;
    pattern.validate();
    return pattern;
}

DensityMatrix bob_marginal(const StateVector& resource, const MeasurementPattern& prefix,
                           const Region& bob_region) {
    if (static_cast<int>(bob_region.qubits.size()) > kMaxDensityQubits) {
        throw CapacityError("bob region exceeds the density matrix capacity");
    }
    const auto outputs = prefix.sorted_outputs();
    std::vector<int> positions;
    positions.reserve(bob_region.qubits.size());
    for (int q : bob_region.qubits) {
        const auto it = std::lower_bound(outputs.begin(), outputs.end(), q);
        if (it == outputs.end() || *it != q) {
            throw ValidationError("bob region qubit " + std::to_string(q) +
                                  " is measured by the prefix");
        }
        positions.push_back(static_cast<int>(it - outputs.begin()));
    }

    const auto ensemble = enumerate_trajectories(resource, prefix);
    const Eigen::Index dim = Eigen::Index{1} << bob_region.qubits.size();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    const bool whole_output = positions.size() == outputs.size();
    for (const auto& traj : ensemble.trajectories) {
        const double p = traj.outcomes.probability;
        if (whole_output) {
            const auto& a = traj.output_state.amplitudes();
            acc.noalias() += p * (a * a.adjoint());
        } else {
            acc += p * partial_trace(traj.output_state, positions).matrix();
        }
    }
    return DensityMatrix::from_matrix(std::move(acc));
}

NoSignalingReport check_no_signaling(const ClusterLayout& layout, const StateVector& input,
                                     const std::vector<double>& angles_a,
                                     const std::vector<double>& angles_b, int r,
                                     double tolerance) {
    if (tolerance <= 0.0) {
        throw ValidationError("tolerance must be positive");
    }
    const StateVector resource = encode_input(input, layout);
    const MeasurementPattern pattern_a = strategy_pattern(layout, angles_a, r);
    const MeasurementPattern pattern_b = strategy_pattern(layout, angles_b, r);
    const Region bob = region(layout, RegionKind::Bob, r);

    NoSignalingReport report;
    report.r = r;
    report.angles_a = angles_a;
    report.angles_b = angles_b;
    report.bob_region = bob;
    report.tolerance = tolerance;
    report.distance = trace_distance(bob_marginal(resource, pattern_a, bob),
                                     bob_marginal(resource, pattern_b, bob));
    report.pass = report.distance <= tolerance;
    return report;
}

DecompositionReport check_decomposition(const LatticeProgram& prefix, const StateVector& input,
                                        double tolerance) {
    prefix.validate();
    if (tolerance <= 0.0) {
        throw ValidationError("tolerance must be positive");
    }
    const ClusterLayout& layout = prefix.layout;
    const int rows = layout.rows;
    const int r = prefix.measured_cols;
    if (r < 1) {
        throw ValidationError("decomposition check needs at least one measured column");
    }

    const StateVector resource = encode_input(input, layout);
    const MeasurementPattern pattern = to_pattern(prefix);
    const auto ensemble = enumerate_trajectories(resource, pattern);
    const StateVector logical = intended_state(prefix, input);

    // The residual resource η: columns r+1..cols-1 with their internal edges.
    // Local indexing on O_r: qubit (row, col) -> (col - r) * rows + row, so the
    // logical block occupies the low bits exactly as in encode_input.
    const int residual_cols = layout.cols - r - 1;
    const int bob_qubits = (layout.cols - r) * rows;
    auto local = [&](int q) { return (layout.col_of(q) - r) * rows + layout.row_of(q); };

    Eigen::VectorXcd base(Eigen::Index{1} << bob_qubits);
    const Eigen::Index logical_dim = logical.dim();
    const double plus_amp = std::pow(2.0, -0.5 * (residual_cols * rows));
    for (Eigen::Index y = 0; y < (Eigen::Index{1} << (residual_cols * rows)); ++y) {
        base.segment(y * logical_dim, logical_dim) = plus_amp * logical.amplitudes();
    }
    const StateVector prepared = StateVector::from_amplitudes(std::move(base));

    DecompositionReport report;
    report.r = r;
    report.tolerance = tolerance;
    report.min_fidelity = 1.0;
    for (const auto& traj : ensemble.trajectories) {
        // Byproduct Pauli on the frontier column, innermost.
        StateVector recon = prepared;
        PauliOperator frame_pauli = PauliOperator::identity(bob_qubits);
        for (std::size_t k = 0; k < traj.frame.output_qubits.size(); ++k) {
            const int q = traj.frame.output_qubits[k];
            frame_pauli.set_x(local(q), traj.frame.bits[k].first);
            frame_pauli.set_z(local(q), traj.frame.bits[k].second);
        }
        apply_pauli_in_place(recon, frame_pauli);
        // Then every O_r edge: the residual cluster's internal edges plus the
        // border and frontier-column CZs that make up B_j.
        for (const auto& [a, b] : layout.edges) {
            if (layout.col_of(a) >= r && layout.col_of(b) >= r) {
                apply_cz_in_place(recon, local(a), local(b));
            }
        }
        const double f = fidelity_pure(traj.output_state, recon);
        report.fidelities.push_back(f);
        report.min_fidelity = std::min(report.min_fidelity, f);
    }
    report.pass = report.min_fidelity >= 1.0 - tolerance;
    return report;
}

DecompositionReport check_decomposition(const MeasurementPattern& prefix,
                                        const StateVector& input, double tolerance) {
    return check_decomposition(infer_lattice_program(prefix), input, tolerance);
}

OtpReport check_one_time_pad(const std::vector<KeyedPauli>& keys, int sample_count,
                             std::uint64_t seed, double tolerance) {
    if (keys.empty()) {
        throw ValidationError("one-time-pad check needs at least one key");
    }
    if (sample_count < 1) {
        throw ValidationError("sample count must be positive");
    }
    if (tolerance <= 0.0) {
        throw ValidationError("tolerance must be positive");
    }
    const int n = keys.front().pauli.num_qubits;
    if (n < 1 || n > 6) {
        throw CapacityError("one-time-pad check supports 1..6 logical qubits");
    }
    Eigen::VectorXd p(static_cast<Eigen::Index>(keys.size()));
    for (std::size_t j = 0; j < keys.size(); ++j) {
        if (keys[j].pauli.num_qubits != n) {
            throw ValidationError("all keyed Paulis must act on the same qubit count");
        }
        p(static_cast<Eigen::Index>(j)) = keys[j].probability;
    }
    validate_distribution(p);

    OtpReport report;
    report.n_logical = n;
    report.sample_count = sample_count;
    report.seed = seed;
    report.tolerance = tolerance;
    report.entropy_bits = shannon_entropy({p, {}}, EntropyBase::Bits);

    const DensityMatrix mixed = DensityMatrix::maximally_mixed(n);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < sample_count; ++s) {
        const StateVector xi = random_pure_state(n, rng);
        const Eigen::Index dim = xi.dim();
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto& key : keys) {
            const StateVector encrypted = apply_pauli(xi, key.pauli);
            const auto& a = encrypted.amplitudes();
            rho.noalias() += key.probability * (a * a.adjoint());
        }
        const double deviation = trace_distance(DensityMatrix::from_matrix(std::move(rho)), mixed);
        report.max_deviation = std::max(report.max_deviation, deviation);
    }
    report.encryption_pass = report.max_deviation <= tolerance;
    report.entropy_bound_pass = report.entropy_bits >= 2.0 * n - kEntropyBoundTolerance;
    report.pass = report.encryption_pass && report.entropy_bound_pass;
    return report;
}

std::vector<KeyedPauli> otp_from_mbqc(const ClusterLayout& layout,
                                      const MeasurementPattern& prefix) {
    const int r = infer_measured_layers(prefix);
    if (r < 1) {
        throw ValidationError("one-time-pad extraction needs a measured prefix");
    }
    const StateVector resource = build_cluster(layout);
    const auto ensemble = enumerate_trajectories(resource, prefix);

    const int rows = layout.rows;
    std::vector<KeyedPauli> keys;
    keys.reserve(ensemble.trajectories.size());
    for (const auto& traj : ensemble.trajectories) {
        PauliOperator pauli = PauliOperator::identity(rows);
        for (std::size_t k = 0; k < traj.frame.output_qubits.size(); ++k) {
            const int q = traj.frame.output_qubits[k];
            const auto [ax, az] = traj.frame.bits[k];
            if (layout.col_of(q) == r) {
                pauli.set_x(layout.row_of(q), ax);
                pauli.set_z(layout.row_of(q), az);
            } else if (ax || az) {
                throw ValidationError(
                    "pattern byproduct extends beyond the logical wires on column r");
            }
        }
        keys.push_back({traj.outcomes.probability, pauli});
    }
    return keys;
}

}  // namespace mbqc::verify
