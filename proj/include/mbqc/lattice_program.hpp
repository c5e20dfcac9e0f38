#pragma once

#include <string>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// A layer-structured adaptive pattern on a lattice layout whose intended
/// logical circuit is known. Measuring column j implements the vertical CZ
/// gates of column j as logical gates followed by J(-phi) = H P(-phi) on
/// every row, so the byproduct-corrected output after r columns is
///   U = Π_{j<r} [ (⊗_rows H P(-phi_{row,j})) · CZ-layer(col j) ]
/// applied to the encoded input.
struct LatticeProgram {
    ClusterLayout layout;
    std::vector<std::vector<double>> column_angles;  // [col][row], cols 0..measured_cols-1
    int measured_cols = 0;                           // r: columns 0..r-1 are measured

    void validate() const;
};

/// Steps in column-major order with the measurement-calculus dependencies:
/// s_domain = previous column same row, t_domain = column before previous same
/// row plus the vertical neighbors' previous-column outcomes. Outputs are the
/// remaining columns; the frontier column r carries the correction sets.
MeasurementPattern to_pattern(const LatticeProgram& program);

LatticeProgram prefix(const LatticeProgram& program, int r);

/// Circuit-model oracle: the intended logical state U |input> on `rows` qubits.
StateVector intended_state(const LatticeProgram& program, const StateVector& input);

// Built-in single-wire programs (rows parallel wires, no vertical edges).
LatticeProgram wire_identity_program(int cols, int rows = 1);  // all angles 0: H^{cols-1} per wire
LatticeProgram rz_program(double alpha, int rows = 1);         // 1x3 per wire: Rz(alpha)
LatticeProgram euler_rotation_program(double alpha, double beta, double gamma,
                                      int rows = 1);           // 1x5 per wire: Rz(g)Rx(b)Rz(a)

/// Named entry point: "wire_identity" (args {m}), "euler_rotation"
/// (args {alpha, beta, gamma}), "rz" (args {alpha}).
MeasurementPattern builtin_pattern(const std::string& name, const std::vector<double>& args,
                                   int rows = 1);

/// Recovers the program from a pattern that structurally matches to_pattern;
/// throws UnsupportedError otherwise.
LatticeProgram infer_lattice_program(const MeasurementPattern& pattern);

}  // namespace mbqc
