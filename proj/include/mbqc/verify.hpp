#pragma once

#include <cstdint>

#include "mbqc/density.hpp"
#include "mbqc/engine.hpp"
#include "mbqc/lattice_program.hpp"

namespace mbqc::verify {

inline constexpr double kDefaultTolerance = 1e-10;
// Slack on the 2n-bit entropy bound; uniform dyadic entropies are exact to
// well below this.
inline constexpr double kEntropyBoundTolerance = 1e-9;

/// Non-adaptive C_r prefix measuring columns 0..r-1 at the given angles
/// (ascending qubit order), outputs O_r, no corrections.
MeasurementPattern strategy_pattern(const ClusterLayout& layout,
                                    const std::vector<double>& angles, int r);

/// Bob's averaged post-measurement state Σ_j p_j Tr_{rest}[ρ_j]. The prefix
/// outputs must contain the Bob region; the region is capped at
/// kMaxDensityQubits.
DensityMatrix bob_marginal(const StateVector& resource, const MeasurementPattern& prefix,
                           const Region& bob_region);

struct NoSignalingReport {
    int r = 1;
    std::vector<double> angles_a;
    std::vector<double> angles_b;
    Region bob_region;
    double distance = 0.0;
    double tolerance = kDefaultTolerance;
    bool pass = false;
};

/// Trace distance between Bob's marginals under two measurement strategies on
/// C_r. Any distance above tolerance would breach no-signaling and therefore
/// flags a simulator bug.
NoSignalingReport check_no_signaling(const ClusterLayout& layout, const StateVector& input,
                                     const std::vector<double>& angles_a,
                                     const std::vector<double>& angles_b, int r,
                                     double tolerance = kDefaultTolerance);

struct DecompositionReport {
    int r = 1;
    std::vector<double> fidelities;  // per outcome, enumeration order
    double min_fidelity = 0.0;
    double tolerance = kDefaultTolerance;
    bool pass = false;
};

/// Checks that every post-measurement state on O_r equals
///   B_j [ (U_r...U_1 |in>) ⊗ (residual cluster on cols r+1..) ] with
///   B_j = (CZ on O_r edges outside the residual cluster) ∘ (byproduct Pauli
///   on column r),
/// the two sides computed by independent routes (simulation vs circuit-model
/// oracle plus explicit reconstruction).
DecompositionReport check_decomposition(const LatticeProgram& prefix, const StateVector& input,
                                        double tolerance = kDefaultTolerance);

/// Same check for a pattern that structurally matches the lattice convention;
/// throws UnsupportedError otherwise.
DecompositionReport check_decomposition(const MeasurementPattern& prefix,
                                        const StateVector& input,
                                        double tolerance = kDefaultTolerance);

struct KeyedPauli {
    double probability = 0.0;
    PauliOperator pauli;
};

struct OtpReport {
    int n_logical = 0;
    double entropy_bits = 0.0;
    double max_deviation = 0.0;  // trace distance to I/2^n, worst sample
    bool encryption_pass = false;
    bool entropy_bound_pass = false;  // entropy_bits >= 2 n_logical - 1e-9
    bool pass = false;                // both
    int sample_count = 0;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
};

/// Feeds random pure states through the keyed Pauli channel Σ p_j P_j ξ P_j†
/// and reports the worst trace distance from the maximally mixed state, plus
/// the key entropy against the 2n-bit bound.
OtpReport check_one_time_pad(const std::vector<KeyedPauli>& keys, int sample_count,
                             std::uint64_t seed, double tolerance = kDefaultTolerance);

/// Extracts the keyed byproduct Paulis on the logical wires from exhaustive
/// enumeration of a C_r prefix over the plus-input cluster.
std::vector<KeyedPauli> otp_from_mbqc(const ClusterLayout& layout,
                                      const MeasurementPattern& prefix);

}  // namespace mbqc::verify
